#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

"""
The N x N phase space over F_N: points (q, p), lines a*q + b*p = c, and the
N + 1 striations of parallel lines.

Striations are ordered vertical first, then the slope-m striations (direction
(1, m)) with m in field enumeration order, so the horizontal striation is
second. Inside a striation, the line with offset t is the ray translated by
(t, 0) for the vertical striation and by (0, t) otherwise.
"""

import functools
from dataclasses import dataclass
from typing import List, Optional, Tuple

from wignerff.field.gf import FieldElement, FieldSpec
from wignerff.utils.errors import FieldMismatchError, GeometryError


@dataclass(frozen=True)
class PhasePoint:
    q: FieldElement
    p: FieldElement

    def __post_init__(self):
        if self.q.spec != self.p.spec:
            raise FieldMismatchError("phase point coordinates from different fields")

    @property
    def spec(self) -> FieldSpec:
        return self.q.spec

    @classmethod
    def origin(cls, spec: FieldSpec) -> "PhasePoint":
        return cls(spec.zero, spec.zero)

    @classmethod
    def from_indices(cls, spec: FieldSpec, q: int, p: int) -> "PhasePoint":
        return cls(spec.element(q), spec.element(p))

    def __add__(self, other: "PhasePoint") -> "PhasePoint":
        return PhasePoint(self.q + other.q, self.p + other.p)

    def __sub__(self, other: "PhasePoint") -> "PhasePoint":
        return PhasePoint(self.q - other.q, self.p - other.p)

    def __neg__(self) -> "PhasePoint":
        return PhasePoint(-self.q, -self.p)

    def scale(self, s: FieldElement) -> "PhasePoint":
        return PhasePoint(s * self.q, s * self.p)

    def wedge(self, other: "PhasePoint") -> FieldElement:
        """(x, y) ^ (x', y') = x y' - y x'."""
        return self.q * other.p - self.p * other.q

    def is_origin(self) -> bool:
        return self.q.is_zero() and self.p.is_zero()

    @property
    def index(self) -> Tuple[int, int]:
        return (self.q.index, self.p.index)

    def __str__(self):
        return f"({self.q}, {self.p})"


def all_points(spec: FieldSpec) -> List[PhasePoint]:
    """All N^2 points, q-major in enumeration order."""
    elems = spec.elements()
    return [PhasePoint(q, p) for q in elems for p in elems]


class Line(object):
    """
    The solution set of a*q + b*p = c, with (a, b, c) scaled so that the first
    nonzero coefficient among (a, b) is 1.
    """

    __slots__ = ("a", "b", "c", "points", "_key")

    def __init__(self, a: FieldElement, b: FieldElement, c: FieldElement):
        if a.is_zero() and b.is_zero():
            raise GeometryError("a line needs (a, b) != (0, 0)")
        scale = a.inverse() if not a.is_zero() else b.inverse()
        self.a, self.b, self.c = a * scale, b * scale, c * scale
        spec = a.spec
        if self.b.is_zero():
            q = self.c / self.a
            points = [PhasePoint(q, p) for p in spec.elements()]
        else:
            points = [
                PhasePoint(q, (self.c - self.a * q) / self.b) for q in spec.elements()
            ]
        self.points = tuple(sorted(points, key=lambda x: x.index))
        self._key = (self.a.index, self.b.index, self.c.index)

    @classmethod
    def through(cls, alpha: PhasePoint, beta: PhasePoint) -> "Line":
        if alpha == beta:
            raise GeometryError(f"two distinct points are needed, got {alpha} twice")
        d = beta - alpha
        a, b = d.p, -d.q
        return cls(a, b, a * alpha.q + b * alpha.p)

    @property
    def spec(self) -> FieldSpec:
        return self.a.spec

    @property
    def direction(self) -> PhasePoint:
        """(0, 1) for vertical lines, else (1, m) with m the slope."""
        spec = self.spec
        if self.b.is_zero():
            return PhasePoint(spec.zero, spec.one)
        return PhasePoint(spec.one, -self.a / self.b)

    def contains(self, alpha: PhasePoint) -> bool:
        return self.a * alpha.q + self.b * alpha.p == self.c

    def is_parallel(self, other: "Line") -> bool:
        return self._key[:2] == other._key[:2]

    def point_set(self) -> frozenset:
        return frozenset(self.points)

    def __eq__(self, other):
        return isinstance(other, Line) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Line({self.a}*q + {self.b}*p = {self.c})"


class Striation(object):
    """A complete set of N parallel lines, indexed by offset."""

    def __init__(self, index: int, direction: PhasePoint):
        spec = direction.spec
        self.index = index
        self.direction = direction
        self.slope: Optional[FieldElement] = (
            None if direction.q.is_zero() else direction.p / direction.q
        )
        self.lines: Tuple[Line, ...] = tuple(self._line(t) for t in spec.elements())
        self.ray = self.lines[0]

    @property
    def spec(self) -> FieldSpec:
        return self.direction.spec

    @property
    def is_vertical(self) -> bool:
        return self.slope is None

    def _line(self, t: FieldElement) -> Line:
        spec = t.spec
        if self.is_vertical:
            return Line(spec.one, spec.zero, t)
        return Line(-self.slope, spec.one, t)

    def line(self, t: FieldElement) -> Line:
        return self.lines[t.index]

    def offset(self, alpha: PhasePoint) -> FieldElement:
        """The t with alpha on line(t)."""
        if self.is_vertical:
            return alpha.q
        return alpha.p - self.slope * alpha.q

    def offset_shift(self, t: FieldElement) -> PhasePoint:
        """The translation carrying the ray onto line(t)."""
        spec = t.spec
        return PhasePoint(t, spec.zero) if self.is_vertical else PhasePoint(spec.zero, t)

    def line_through(self, alpha: PhasePoint) -> Line:
        return self.line(self.offset(alpha))

    def __repr__(self):
        return f"Striation({self.index}, direction={self.direction})"


@functools.lru_cache(maxsize=None)
def striations(spec: FieldSpec) -> Tuple[Striation, ...]:
    vertical = Striation(0, PhasePoint(spec.zero, spec.one))
    sloped = [
        Striation(1 + m.index, PhasePoint(spec.one, m)) for m in spec.elements()
    ]
    return (vertical,) + tuple(sloped)


def all_lines(spec: FieldSpec) -> List[Line]:
    return [line for s in striations(spec) for line in s.lines]


def striation_index(direction: PhasePoint) -> int:
    """Index of the striation whose ray is spanned by a nonzero direction."""
    if direction.is_origin():
        raise GeometryError("the zero vector spans no ray")
    if direction.q.is_zero():
        return 0
    return 1 + (direction.p / direction.q).index


def striation_of(line: Line) -> Striation:
    return striations(line.spec)[striation_index(line.direction)]


def translate_line(line: Line, alpha: PhasePoint) -> Line:
    """The pointwise translate {beta + alpha : beta in line}."""
    if line.spec != alpha.spec:
        raise FieldMismatchError("line and translation from different fields")
    return Line(line.a, line.b, line.c + line.a * alpha.q + line.b * alpha.p)
