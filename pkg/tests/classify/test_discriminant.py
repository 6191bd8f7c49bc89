#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


import collections
import unittest

from wignerff.classify import discriminant_D, index_transform
from wignerff.field import format_element, make_field, parse_element
from wignerff.geometry import all_points
from wignerff.nets import RayChoice, enumerate_choices
from wignerff.utils.errors import FieldMismatchError, MalformedInputError


class TestDiscriminant(unittest.TestCase):
    def setUp(self):
        self.spec = make_field(2, 2)

    def test_values(self):
        zero = self.spec.zero
        self.assertEqual(discriminant_D(["0", "0", "0", "0", "0"]), zero)
        self.assertEqual(discriminant_D(["0", "0", "wbar", "w", "1"]), zero)
        self.assertEqual(discriminant_D(["1", "0", "0", "0", "0"]), parse_element(self.spec, "w"))

    def test_first_generator_on_zero(self):
        moved = index_transform("L1", RayChoice.zero(self.spec))
        self.assertEqual(moved, RayChoice.parse(self.spec, ["0", "1", "w", "wbar", "0"]))
        self.assertEqual(discriminant_D(moved), self.spec.zero)

    def test_level_sets(self):
        counts = collections.Counter(
            format_element(discriminant_D(c))
            for c in enumerate_choices(self.spec, representatives=True)
        )
        self.assertEqual(counts["0"], 20)
        self.assertEqual(counts["1"], 20)
        self.assertEqual(sorted(counts.values()), [12, 12, 20, 20])

    def test_invariance(self):
        moves = ["L1", "L2", "L3"] + all_points(self.spec)
        for choice in enumerate_choices(self.spec):
            D = discriminant_D(choice)
            for g in moves:
                self.assertEqual(discriminant_D(index_transform(g, choice)), D, (g, str(choice)))

    def test_errors(self):
        with self.assertRaises(FieldMismatchError):
            discriminant_D(RayChoice.zero(make_field(3)))
        with self.assertRaises(MalformedInputError):
            index_transform("L4", RayChoice.zero(self.spec))
