#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


import json
import os
import unittest

import numpy as np
from wignerff.field import field_of_order
from wignerff.nets import RayChoice, build_net, reference_pair
from wignerff.operators import BasisPair
from wignerff.utils.errors import DimensionMismatch, InconsistentProbabilities, MalformedInputError
from wignerff.utils.testing.helper import tempdir
from wignerff.wigner import (
    inverse_wigner,
    line_probabilities,
    load_probabilities,
    named_state,
    phase_point_operators,
    random_density_matrices,
    tomographic_reconstruct,
    wigner_transform,
)


def default_net(N):
    spec = field_of_order(N)
    return build_net(BasisPair.default(spec), RayChoice.zero(spec))


class TestTomography(unittest.TestCase):
    def test_singlet_from_marginals(self):
        pair = reference_pair()
        net = build_net(pair, RayChoice.zero(pair.spec))
        rho = named_state("singlet", 4)
        W = tomographic_reconstruct(line_probabilities(rho, net), net)
        np.testing.assert_allclose(W.values, wigner_transform(rho, net).values, atol=1e-10)
        self.assertAlmostEqual(W.values[1, 1], 0.25, places=10)
        self.assertAlmostEqual(W.values[0, 0], 0.0, places=10)

    def test_uniform(self):
        for N in (2, 3, 4, 5):
            net = default_net(N)
            W = tomographic_reconstruct(np.full((N + 1, N), 1.0 / N), net)
            np.testing.assert_allclose(W.values, np.full((N, N), 1.0 / N ** 2), atol=1e-12)

    def test_round_trip_random_states(self):
        for N in (2, 3, 4):
            net = default_net(N)
            ops = phase_point_operators(net)
            for rho in random_density_matrices(N, 100, seed=100 + N):
                W = tomographic_reconstruct(line_probabilities(rho, net), net)
                self.assertLess(np.max(np.abs(inverse_wigner(W, ops) - rho)), 1e-8)

    def test_perturbation_bound(self):
        N = 4
        net = default_net(N)
        # mixed with I/N so that no probability is close to 0
        rho = 0.5 * random_density_matrices(N, 1, seed=7)[0] + 0.5 * np.eye(N) / N
        P = line_probabilities(rho, net)
        W = tomographic_reconstruct(P, net)
        rng = np.random.default_rng(0)
        noise = rng.choice([-1e-4, 1e-4], size=P.shape)
        # keep each striation normalized
        noise[:, -1] = -noise[:, :-1].sum(axis=1)
        noisy = tomographic_reconstruct(P + noise, net)
        bound = (N + 1) * np.max(np.abs(noise)) / N
        self.assertLessEqual(np.max(np.abs(noisy.values - W.values)), bound + 1e-12)

    def test_inconsistent(self):
        net = default_net(3)
        P = np.full((4, 3), 0.4)
        with self.assertRaises(InconsistentProbabilities):
            tomographic_reconstruct(P, net)
        W = tomographic_reconstruct(P, net, normalize=True)
        self.assertAlmostEqual(W.deviation, 0.2, places=12)
        np.testing.assert_allclose(W.values, np.full((3, 3), 1.0 / 9), atol=1e-12)

    def test_normalize_needs_nonzero_totals(self):
        net = default_net(3)
        P = np.full((4, 3), 1.0 / 3)
        P[2] = 0.0
        with self.assertRaises(InconsistentProbabilities):
            tomographic_reconstruct(P, net, normalize=True)

    def test_shape(self):
        with self.assertRaises(DimensionMismatch):
            tomographic_reconstruct(np.full((3, 3), 1.0 / 3), default_net(3))

    @tempdir
    def test_load(self, tmp_dir):
        path = os.path.join(tmp_dir, "p.json")
        with open(path, "w") as f:
            json.dump({"probabilities": [[0.5, 0.5]] * 3}, f)
        P = load_probabilities(path)
        self.assertEqual(P.shape, (3, 2))
        with open(path, "w") as f:
            f.write("{")
        with self.assertRaises(MalformedInputError):
            load_probabilities(path)
