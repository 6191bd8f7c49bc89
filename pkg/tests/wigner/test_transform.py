#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


import unittest

import numpy as np
from wignerff.field import field_of_order
from wignerff.geometry import all_lines, all_points
from wignerff.nets import RayChoice, build_net, reference_pair
from wignerff.operators import BasisPair
from wignerff.wigner import (
    expand_operator,
    inverse_wigner,
    line_marginal,
    line_probabilities,
    marginal_of_line,
    maximally_mixed,
    named_state,
    phase_point_operators,
    random_density_matrices,
    render_heatmap,
    translate_state,
    wigner_transform,
)
from wignerff.utils.errors import DimensionMismatch, InvalidStateError


Q = 0.25

# values[q, p] with field order 0, 1, w, wbar on both axes
UP_UP = np.zeros((4, 4))
UP_UP[0, :] = Q
UP_RIGHT = np.zeros((4, 4))
UP_RIGHT[np.ix_([0, 1], [0, 2])] = Q
SINGLET = np.zeros((4, 4))
SINGLET[np.ix_([1, 2], [1, 2])] = Q


def reference_net():
    pair = reference_pair()
    return build_net(pair, RayChoice.zero(pair.spec))


def some_net(N, seed=0):
    spec = field_of_order(N)
    rng = np.random.default_rng(seed)
    elems = spec.elements()
    choice = RayChoice(tuple(elems[i] for i in rng.integers(0, N, size=N + 1)))
    return build_net(BasisPair.default(spec), choice)


class TestPhasePointOperators(unittest.TestCase):
    def test_algebra_reference_net(self):
        phase_point_operators(reference_net()).check_invariants()

    def test_algebra_small_fields(self):
        for N in (2, 3, 4, 5):
            phase_point_operators(some_net(N, seed=N)).check_invariants()

    def test_expansion_resums(self):
        ops = phase_point_operators(some_net(3))
        rng = np.random.default_rng(1)
        G = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        H = G + G.conj().T
        c = expand_operator(H, ops)
        np.testing.assert_allclose(np.einsum("qp,qpij->ij", c, ops.ops), H, atol=1e-9)


class TestWignerTransform(unittest.TestCase):
    def setUp(self):
        self.net = reference_net()
        self.ops = phase_point_operators(self.net)

    def test_reference_tables(self):
        for name, golden in (("up-up", UP_UP), ("up-right", UP_RIGHT), ("singlet", SINGLET)):
            W = wigner_transform(named_state(name, 4), self.ops)
            np.testing.assert_allclose(W.values, golden, atol=1e-10, err_msg=name)
            self.assertAlmostEqual(W.total(), 1.0, places=10)

    def test_maximally_mixed_is_uniform(self):
        for N in (2, 3, 4, 5):
            W = wigner_transform(maximally_mixed(N), some_net(N))
            np.testing.assert_allclose(W.values, np.full((N, N), 1.0 / N ** 2), atol=1e-10)

    def test_singlet_inverts(self):
        W = wigner_transform(named_state("singlet", 4), self.ops)
        W.values = SINGLET.copy()
        np.testing.assert_allclose(
            inverse_wigner(W, self.ops), named_state("singlet", 4), atol=1e-10
        )

    def test_round_trip(self):
        for N in (2, 3, 4):
            ops = phase_point_operators(some_net(N))
            for rho in random_density_matrices(N, 100, seed=N):
                back = inverse_wigner(wigner_transform(rho, ops), ops)
                self.assertLess(np.max(np.abs(back - rho)), 1e-9)

    def test_marginals(self):
        W = wigner_transform(named_state("singlet", 4), self.ops)
        np.testing.assert_allclose(W.marginals()[0], [0, 0.5, 0.5, 0], atol=1e-10)
        W = wigner_transform(named_state("up-right", 4), self.ops)
        np.testing.assert_allclose(W.marginals()[1], [0.5, 0, 0.5, 0], atol=1e-10)

    def test_line_sums_match_probabilities(self):
        for N in (2, 3, 4):
            net = some_net(N, seed=10 + N)
            ops = phase_point_operators(net)
            rho = random_density_matrices(N, 1, seed=N)[0]
            W = wigner_transform(rho, ops)
            P = line_probabilities(rho, net)
            np.testing.assert_allclose(P.sum(axis=1), np.ones(N + 1), atol=1e-10)
            np.testing.assert_allclose(W.marginals(), P, atol=1e-10)
            for line in all_lines(net.spec):
                self.assertAlmostEqual(
                    line_marginal(W, line, net), marginal_of_line(P, line), places=10
                )

    def test_translation_covariance(self):
        for N in (2, 3, 4):
            net = some_net(N, seed=20 + N)
            ops = phase_point_operators(net)
            rho = random_density_matrices(N, 1, seed=30 + N)[0]
            W = wigner_transform(rho, ops)
            for beta in all_points(net.spec):
                moved = wigner_transform(translate_state(rho, beta, net.pair), ops)
                for alpha in all_points(net.spec):
                    self.assertAlmostEqual(moved[alpha], W[alpha - beta], places=9)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            wigner_transform(maximally_mixed(3), self.ops)

    def test_rejects_non_density_matrix(self):
        rho = named_state("up-up", 4)
        with self.assertRaises(InvalidStateError):
            wigner_transform(2 * rho, self.ops)
        skew = rho.copy()
        skew[0, 1] = 0.5
        with self.assertRaises(InvalidStateError):
            wigner_transform(skew, self.ops)
        # loose tolerance accepts a slightly unnormalized state
        W = wigner_transform(1.001 * rho, self.ops, tol=1e-2)
        self.assertAlmostEqual(W.total(), 1.001)


class TestRender(unittest.TestCase):
    def test_origin_lower_left(self):
        W = wigner_transform(named_state("up-up", 4), reference_net())
        lines = render_heatmap(W).splitlines()
        body = [l for l in lines if l.startswith("|") and "p \\ q" not in l]
        self.assertTrue(body[0].split("|")[1].strip() == "wbar")
        self.assertTrue(body[-1].split("|")[1].strip() == "0")
        self.assertIn("1/4", body[-1])
