#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


import unittest

import numpy as np
from wignerff.classify import (
    choice_action,
    covariance_residual,
    generator_actions,
    generator_z,
    multiplication_gate,
    unitary_for_linear,
    w_change_map,
)
from wignerff.classify.discriminant import index_transform
from wignerff.field import field_of_order, make_field, multiplication_matrix, parse_element
from wignerff.geometry import LinearMap, generator_matrices, sl2_group
from wignerff.nets import RayChoice, enumerate_choices, mub_family, reference_pair
from wignerff.operators import BasisPair, WeylOperators, basis_permutation, self_dual_pair
from wignerff.utils.errors import ConjugationError, MalformedInputError, NonUnitDeterminant
from wignerff.utils.misc import is_unitary
from wignerff.utils.testing.helper import assert_proportional


class TestUnitaryForLinear(unittest.TestCase):
    def test_qubit_swap_is_hadamard(self):
        spec = make_field(2)
        L = LinearMap.from_rows(spec, [["0", "1"], ["1", "0"]])
        for method in ("solve", "word"):
            U = unitary_for_linear(L, BasisPair.default(spec), method=method)
            assert_proportional(self, U, np.array([[1, 1], [1, -1]]) / np.sqrt(2))

    def test_first_generator_is_quarter_turn(self):
        pair = reference_pair()
        L1 = generator_matrices(pair.spec, parse_element(pair.spec, "wbar"))["L1"]
        U = unitary_for_linear(L1, pair, method="word")
        assert_proportional(self, U, np.kron(np.diag([1, 1j]), np.diag([1, 1j])))

    def test_covariance_whole_group(self):
        for N in (2, 3, 4):
            spec = field_of_order(N)
            for w in spec.nonzero_elements():
                pair = BasisPair.default(spec, w)
                ops = WeylOperators(pair)
                for L in sl2_group(spec):
                    U = unitary_for_linear(L, pair, ops=ops)
                    self.assertTrue(is_unitary(U, 1e-9))
                    self.assertLess(covariance_residual(U, L, ops), 1e-8)

    def test_methods_agree_for_qubits(self):
        for N in (4, 8):
            spec = field_of_order(N)
            pair = BasisPair.default(spec)
            for L in sl2_group(spec)[:: 7]:
                assert_proportional(
                    self,
                    unitary_for_linear(L, pair, method="word"),
                    unitary_for_linear(L, pair, method="solve"),
                )

    def test_random_qutrit_map(self):
        spec = make_field(3)
        pair = BasisPair.default(spec)
        group = sl2_group(spec)
        rng = np.random.default_rng(0)
        L = group[int(rng.integers(len(group)))]
        U = unitary_for_linear(L, pair)
        self.assertLess(covariance_residual(U, L, WeylOperators(pair)), 1e-8)

    def test_det_must_be_one(self):
        spec = make_field(3)
        L = LinearMap.from_rows(spec, [["2", "0"], ["0", "2"]])
        with self.assertRaises(NonUnitDeterminant):
            unitary_for_linear(L, BasisPair.default(spec))

    def test_word_needs_qubits(self):
        spec = make_field(3)
        with self.assertRaises(ConjugationError):
            unitary_for_linear(LinearMap.identity(spec), BasisPair.default(spec), method="word")

    def test_unknown_method(self):
        spec = make_field(3)
        with self.assertRaises(MalformedInputError):
            unitary_for_linear(LinearMap.identity(spec), BasisPair.default(spec), method="guess")

    def test_multiplication_gate_matches_field_multiplication(self):
        for N in (2, 4, 8, 16):
            spec = field_of_order(N)
            z = generator_z(spec)
            E = self_dual_pair(spec, spec.one).E
            np.testing.assert_allclose(
                multiplication_gate(z, E), basis_permutation(multiplication_matrix(z, E), 2)
            )
        with self.assertRaises(ConjugationError):
            multiplication_gate(generator_z(make_field(3)), BasisPair.default(make_field(3)).E)

    def test_w_change(self):
        spec = make_field(2, 2)
        E = reference_pair().E
        w_from, w_to = spec.element(2), spec.element(3)
        pair_from, pair_to = BasisPair.from_w(E, w_from), BasisPair.from_w(E, w_to)
        for L in sl2_group(spec)[::5]:
            K = w_change_map(L, w_from, w_to)
            self.assertEqual(K.det, spec.one)
            assert_proportional(
                self, unitary_for_linear(L, pair_to), unitary_for_linear(K, pair_from)
            )


class TestChoiceAction(unittest.TestCase):
    def test_generators_match_index_arithmetic(self):
        family = mub_family(make_field(2, 2), reference_pair())
        actions = dict(zip(("L1", "L2", "L3"), generator_actions(family)))
        for choice in enumerate_choices(family.pair.spec, max_order=4):
            for name, action in actions.items():
                self.assertEqual(action.apply(choice), index_transform(name, choice), name)

    def test_identity_acts_trivially(self):
        spec = make_field(3)
        family = mub_family(spec, BasisPair.default(spec))
        action = choice_action(LinearMap.identity(spec), family)
        for choice in enumerate_choices(spec, representatives=True):
            self.assertEqual(action.apply(choice), choice)

    def test_composition(self):
        spec = make_field(3)
        family = mub_family(spec, BasisPair.default(spec))
        group = sl2_group(spec)
        g, h = group[3], group[10]
        choice = RayChoice.parse(spec, ["0", "0", "1", "2"])
        # Q' = U_g^+ Q(g .) U_g, so acting by g and then by h is acting by g h
        gh = choice_action(g @ h, family)
        self.assertEqual(
            choice_action(h, family).apply(choice_action(g, family).apply(choice)),
            gh.apply(choice),
        )
