#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


import itertools
import unittest

import numpy as np
from wignerff.field import FieldBasis, field_of_order, make_field, parse_element
from wignerff.geometry import PhasePoint, all_points, striations
from wignerff.operators import (
    BasisPair,
    WeylOperators,
    commutation_phase,
    eta_power,
    parallel_translations_commute,
    shift_clock,
    translation_operator,
    validate_basis_pair,
)
from wignerff.operators.weyl import (
    commutation_exponent,
    product_exponent,
    symplectic_exponent,
)
from wignerff.utils.errors import FieldError, NoSuchW


def f4_basis(*names):
    spec = make_field(2, 2)
    return FieldBasis(parse_element(spec, s) for s in names)


def self_dual_pair_f4():
    return BasisPair(f4_basis("w", "1"), f4_basis("w", "1"))


class TestShiftClock(unittest.TestCase):
    def test_pauli(self):
        X, Z = shift_clock(2)
        np.testing.assert_allclose(X, [[0, 1], [1, 0]])
        np.testing.assert_allclose(Z, [[1, 0], [0, -1]], atol=1e-12)

    def test_commutation(self):
        for r in (2, 3, 5, 7):
            X, Z = shift_clock(r)
            np.testing.assert_allclose(Z @ X, eta_power(r, 1) * X @ Z, atol=1e-12)
            np.testing.assert_allclose(
                np.linalg.matrix_power(X, r), np.eye(r), atol=1e-12
            )
            np.testing.assert_allclose(
                np.linalg.matrix_power(Z, r), np.eye(r), atol=1e-12
            )


class TestBasisPair(unittest.TestCase):
    def test_validate(self):
        spec = make_field(2, 2)
        self.assertEqual(
            validate_basis_pair(f4_basis("w", "1"), f4_basis("w", "1")),
            parse_element(spec, "w"),
        )
        self.assertEqual(
            validate_basis_pair(f4_basis("w", "1"), f4_basis("1", "wbar")), spec.one
        )
        with self.assertRaises(NoSuchW):
            validate_basis_pair(f4_basis("w", "1"), f4_basis("wbar", "1"))

    def test_from_w(self):
        spec = make_field(3, 2)
        for w in spec.nonzero_elements():
            self.assertEqual(BasisPair.default(spec, w).w, w)

    def test_parallel_commute(self):
        self.assertTrue(parallel_translations_commute(f4_basis("w", "1"), f4_basis("w", "1")))
        self.assertFalse(
            parallel_translations_commute(f4_basis("w", "1"), f4_basis("wbar", "1"))
        )
        for N in (2, 3, 4, 5):
            spec = field_of_order(N)
            for w in spec.nonzero_elements():
                pair = BasisPair.default(spec, w)
                self.assertTrue(parallel_translations_commute(pair.E, pair.F))

    def test_unvalidated_pairs_fail_to_commute(self):
        spec = make_field(2, 3)
        elems = spec.nonzero_elements()
        E = BasisPair.default(spec).E
        for F_elems in itertools.permutations(elems, 3):
            try:
                F = FieldBasis(F_elems)
            except FieldError:
                continue
            try:
                validate_basis_pair(E, F)
                valid = True
            except NoSuchW:
                valid = False
            self.assertEqual(parallel_translations_commute(E, F), valid)


class TestTranslationOperators(unittest.TestCase):
    def test_self_dual_examples(self):
        spec = make_field(2, 2)
        pair = self_dual_pair_f4()
        X, Z = shift_clock(2)
        w, wbar = parse_element(spec, "w"), parse_element(spec, "wbar")
        np.testing.assert_allclose(
            translation_operator(PhasePoint(spec.one, w), pair), np.kron(Z, X)
        )
        np.testing.assert_allclose(
            translation_operator(PhasePoint(w, wbar), pair), np.kron(X @ Z, Z)
        )
        np.testing.assert_allclose(
            translation_operator(PhasePoint.origin(spec), pair), np.eye(4)
        )

    def test_group_law(self):
        for N in (2, 3, 4):
            spec = field_of_order(N)
            pair = BasisPair.default(spec)
            ops = WeylOperators(pair)
            points = all_points(spec)
            for a, b in itertools.product(points, repeat=2):
                k = product_exponent(a, b, pair)
                np.testing.assert_allclose(
                    ops(a) @ ops(b), eta_power(spec.r, k) * ops(a + b), atol=1e-10
                )
                np.testing.assert_allclose(
                    np.trace(ops(a).conj().T @ ops(b)), N if a == b else 0, atol=1e-10
                )
            for a in points:
                U = ops(a)
                np.testing.assert_allclose(U @ U.conj().T, np.eye(N), atol=1e-10)
                if not a.is_origin():
                    self.assertAlmostEqual(abs(np.trace(U)), 0.0, places=10)

    def test_commutation_phase(self):
        spec2 = make_field(2)
        pair2 = BasisPair.default(spec2)
        self.assertAlmostEqual(
            commutation_phase(
                PhasePoint(spec2.one, spec2.zero), PhasePoint(spec2.zero, spec2.one), pair2
            ),
            -1,
        )
        for N in (3, 4, 5):
            spec = field_of_order(N)
            for w in spec.nonzero_elements():
                pair = BasisPair.default(spec, w)
                ops = WeylOperators(pair)
                for a, b in itertools.product(all_points(spec), repeat=2):
                    self.assertEqual(
                        commutation_exponent(a, b, pair), symplectic_exponent(a, b, w)
                    )
                    if N == 3:
                        lhs = ops(a) @ ops(b) @ ops(a).conj().T @ ops(b).conj().T
                        np.testing.assert_allclose(
                            lhs, commutation_phase(a, b, pair) * np.eye(N), atol=1e-10
                        )
                    if a == b:
                        self.assertAlmostEqual(commutation_phase(a, b, pair), 1)

    def test_parallel_translations(self):
        for N in (2, 3, 4, 5):
            spec = field_of_order(N)
            pair = BasisPair.default(spec)
            for s in striations(spec):
                d = s.direction
                for x, y in itertools.product(spec.elements(), repeat=2):
                    self.assertAlmostEqual(
                        commutation_phase(d.scale(x), d.scale(y), pair), 1
                    )

    def test_generators(self):
        pair = self_dual_pair_f4()
        xs, zs = WeylOperators(pair).generators()
        X, Z = shift_clock(2)
        I = np.eye(2)
        np.testing.assert_allclose(xs[0], np.kron(X, I))
        np.testing.assert_allclose(xs[1], np.kron(I, X))
        np.testing.assert_allclose(zs[0], np.kron(Z, I), atol=1e-12)
        np.testing.assert_allclose(zs[1], np.kron(I, Z), atol=1e-12)
