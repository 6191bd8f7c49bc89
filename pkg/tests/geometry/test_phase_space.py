#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


import itertools
import unittest

from wignerff.field import field_of_order, make_field, parse_element
from wignerff.geometry import (
    Line,
    PhasePoint,
    all_lines,
    all_points,
    striation_of,
    striations,
    translate_line,
)
from wignerff.utils.errors import GeometryError


class TestLines(unittest.TestCase):
    def test_line_counts(self):
        for N, count in ((2, 6), (3, 12), (4, 20), (5, 30), (8, 72)):
            lines = all_lines(field_of_order(N))
            self.assertEqual(len(lines), count)
            self.assertEqual(len(set(lines)), count)
            for line in lines:
                self.assertEqual(len(line.points), N)
                for x in line.points:
                    self.assertTrue(line.contains(x))

    def test_canonical_form(self):
        spec = make_field(5)
        two, three = spec.element(2), spec.element(3)
        line = Line(two, three, spec.one)
        self.assertEqual(line.a, spec.one)
        self.assertEqual(Line(spec.one, three / two, spec.one / two), line)
        with self.assertRaises(GeometryError):
            Line(spec.zero, spec.zero, spec.one)

    def test_two_points_one_line(self):
        spec = make_field(3)
        points = all_points(spec)
        lines = all_lines(spec)
        for x, y in itertools.permutations(points, 2):
            through = [l for l in lines if l.contains(x) and l.contains(y)]
            self.assertEqual(len(through), 1)
            self.assertEqual(Line.through(x, y), through[0])
        with self.assertRaises(GeometryError):
            Line.through(points[0], points[0])

    def test_affine_plane_properties(self):
        for N in (2, 3, 4, 5):
            spec = field_of_order(N)
            lines = all_lines(spec)
            for l1, l2 in itertools.combinations(lines, 2):
                common = l1.point_set() & l2.point_set()
                if l1.is_parallel(l2):
                    self.assertEqual(len(common), 0)
                else:
                    self.assertEqual(len(common), 1)
            # unique parallel through a point off the line
            for line in lines[:: N + 1]:
                for x in all_points(spec):
                    if line.contains(x):
                        continue
                    parallels = [
                        l for l in lines if l.is_parallel(line) and l.contains(x)
                    ]
                    self.assertEqual(len(parallels), 1)

    def test_mod4_artifact_is_not_a_line(self):
        spec = make_field(2, 2)
        # (0,0), (1,2), (2,0), (3,2) under integer labels 0..3
        artifact = {
            PhasePoint.from_indices(spec, q, p)
            for q, p in ((0, 0), (1, 2), (2, 0), (3, 2))
        }
        self.assertNotIn(artifact, [l.point_set() for l in all_lines(spec)])


class TestStriations(unittest.TestCase):
    def test_order(self):
        spec = make_field(2, 2)
        dirs = [str(s.direction) for s in striations(spec)]
        self.assertEqual(dirs, ["(0, 1)", "(1, 0)", "(1, 1)", "(1, w)", "(1, wbar)"])
        self.assertEqual(len(striations(make_field(2))), 3)

    def test_partition(self):
        for N in (2, 3, 4, 5):
            spec = field_of_order(N)
            for s in striations(spec):
                covered = [x for line in s.lines for x in line.points]
                self.assertEqual(len(covered), N * N)
                self.assertEqual(len(set(covered)), N * N)
                self.assertTrue(s.ray.contains(PhasePoint.origin(spec)))
                for line in s.lines:
                    self.assertIs(striation_of(line), s)

    def test_offsets(self):
        spec = make_field(2, 2)
        for s in striations(spec):
            for t in spec.elements():
                line = s.line(t)
                self.assertEqual(
                    line, translate_line(s.ray, s.offset_shift(t))
                )
                for x in line.points:
                    self.assertEqual(s.offset(x), t)

    def test_diagonal_line_f4(self):
        spec = make_field(2, 2)
        w = parse_element(spec, "w")
        ray = striations(spec)[3].ray
        self.assertEqual(
            {x.index for x in ray.points}, {(0, 0), (1, w.index), (2, 3), (3, 1)}
        )


class TestTranslations(unittest.TestCase):
    def test_identity_and_vertical(self):
        spec = make_field(2, 2)
        origin = PhasePoint.origin(spec)
        vertical = striations(spec)[0].ray
        self.assertEqual(translate_line(vertical, origin), vertical)
        moved = translate_line(vertical, PhasePoint(spec.one, spec.zero))
        self.assertEqual(moved, Line(spec.one, spec.zero, spec.one))
        self.assertTrue(moved.is_parallel(vertical))

    def test_composition(self):
        spec = make_field(3)
        points = all_points(spec)
        for line in all_lines(spec):
            for a, b in itertools.product(points, repeat=2):
                self.assertEqual(
                    translate_line(translate_line(line, a), b),
                    translate_line(line, a + b),
                )
                self.assertEqual(
                    translate_line(line, a).point_set(),
                    frozenset(x + a for x in line.points),
                )
