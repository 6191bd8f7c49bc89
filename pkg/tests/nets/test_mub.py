#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


import unittest

import numpy as np
from wignerff.field import field_of_order, make_field, parse_element
from wignerff.geometry import PhasePoint, striations
from wignerff.nets import mub_family, reference_pair, striation_eigenbasis, verify_mub
from wignerff.operators import BasisPair, translation_operator
from wignerff.utils.errors import MalformedInputError


I = 1j
# striation bases of the reference F_4 pair, rows in label order 0, 1, w, wbar
REFERENCE_BASES = [
    [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]],
    [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]],
    [[1, -I, I, 1], [1, I, I, -1], [1, -I, -I, -1], [1, I, -I, 1]],
    [[1, 1, I, -I], [1, -1, I, I], [1, 1, -I, I], [1, -1, -I, -I]],
    [[1, -I, 1, I], [1, I, 1, -I], [1, -I, -1, -I], [1, I, -1, I]],
]


class TestStriationBases(unittest.TestCase):
    def test_reference_bases(self):
        family = mub_family(make_field(2, 2), reference_pair())
        for basis, golden in zip(family.bases, REFERENCE_BASES):
            golden = np.array(golden) / 2
            for v, g in zip(basis.vectors, golden):
                self.assertAlmostEqual(abs(np.vdot(g, v)), 1.0, delta=1e-10)

    def test_diagonal_example(self):
        spec = make_field(2, 2)
        S = striations(spec)[3]
        self.assertEqual(str(S.direction), "(1, w)")
        basis = striation_eigenbasis(S, reference_pair())
        expected = np.array(
            [[-1, 1, I, I], [1, -1, I, I], [1, 1, -I, I], [1, 1, I, -I]]
        ) / 2
        overlaps = np.abs(expected.conj() @ basis.vectors.T)
        np.testing.assert_allclose(np.sort(overlaps.max(axis=1)), np.ones(4), atol=1e-10)

    def test_vertical_and_horizontal(self):
        for N in (2, 3, 4, 5, 8, 9):
            spec = field_of_order(N)
            for w in spec.nonzero_elements()[:2]:
                family = mub_family(spec, BasisPair.default(spec, w))
                vertical, horizontal = family[0], family[1]
                # a permutation of the standard basis
                np.testing.assert_allclose(
                    np.abs(vertical.vectors).max(axis=1), np.ones(N), atol=1e-12
                )
                np.testing.assert_allclose(
                    np.abs(horizontal.vectors), np.full((N, N), N ** -0.5), atol=1e-12
                )
                # label 0 of the horizontal striation is the uniform vector
                np.testing.assert_allclose(
                    horizontal.vectors[0], np.full(N, N ** -0.5), atol=1e-12
                )

    def test_pair_independence(self):
        spec = make_field(3, 2)
        pairs = [BasisPair.default(spec), BasisPair.default(spec, spec.element(4))]
        families = [mub_family(spec, p) for p in pairs]
        for i in (0, 1):
            overlaps = np.abs(families[0][i].vectors.conj() @ families[1][i].vectors.T)
            np.testing.assert_allclose(overlaps.max(axis=1), np.ones(9), atol=1e-10)

    def test_methods_agree(self):
        for N in (2, 3, 4, 5, 8):
            spec = field_of_order(N)
            pair = BasisPair.default(spec)
            for S in striations(spec):
                a = striation_eigenbasis(S, pair, method="projector")
                b = striation_eigenbasis(S, pair, method="sequential")
                for u, v in zip(a.vectors, b.vectors):
                    self.assertAlmostEqual(abs(np.vdot(u, v)), 1.0, delta=1e-9)
        spec = make_field(2)
        with self.assertRaises(MalformedInputError):
            striation_eigenbasis(striations(spec)[0], BasisPair.default(spec), "eig")


class TestMutualUnbiasedness(unittest.TestCase):
    def test_mub_property(self):
        for N in (2, 3, 4, 5, 7, 8, 9):
            spec = field_of_order(N)
            family = mub_family(spec, BasisPair.default(spec))
            self.assertEqual(len(family), N + 1)
            report = verify_mub(family)
            self.assertLess(report.max_deviation, 1e-9)
            self.assertLess(report.max_orthonormality_residual, 1e-10)
            self.assertEqual(report.pair_count, N * (N + 1) // 2 * N * N)
            self.assertTrue(report.ok())

    def test_reference_family(self):
        report = verify_mub(mub_family(make_field(2, 2), reference_pair()))
        self.assertLess(report.max_deviation, 1e-10)

    def test_corrupted_vector(self):
        family = mub_family(make_field(3), BasisPair.default(make_field(3)))
        family.bases[2].vectors[0] = family.bases[0].vectors[0]
        report = verify_mub(family)
        self.assertGreater(report.max_deviation, 0.5)
        self.assertFalse(report.ok())

    def test_label_translation(self):
        spec = make_field(2, 2)
        pair = reference_pair()
        family = mub_family(spec, pair)
        one = spec.one
        # labels follow the vertical translations
        T = translation_operator(PhasePoint(spec.zero, parse_element(spec, "w")), pair)
        for basis in family.bases[1:]:
            for t in spec.elements():
                v = T @ basis.vector(t)
                self.assertEqual(basis.label_of(v), t + parse_element(spec, "w"))
        self.assertEqual(family[0].label_of(family[0].vector(one)), one)
