#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

"""
2x2 linear maps of the phase space, the group SL(2, F_N) of unit-determinant
maps, and words in the generators

    L1 = [[1, 0], [1, 1]],  L2 = [[1, 1], [0, 1]],  L3 = diag(z, 1/z)

acting on column vectors (q, p). A word (g1, g2, ..., gk) stands for the
product g1 @ g2 @ ... @ gk.
"""

import collections
import functools
import logging
from typing import Dict, List, Sequence, Tuple, Union

from wignerff.field.gf import FieldElement, FieldSpec, parse_element
from wignerff.geometry.phase_space import Line, PhasePoint
from wignerff.utils.errors import (
    FieldMismatchError,
    GeometryError,
    NonUnitDeterminant,
    SingularMapError,
)


logger = logging.getLogger(__name__)

GENERATOR_NAMES = ("L1", "L2", "L3")
INVERSE_SUFFIX = "^-1"


class LinearMap(object):
    """The matrix [[a, b], [c, d]]: (q, p) -> (a q + b p, c q + d p)."""

    __slots__ = ("a", "b", "c", "d", "det", "_key")

    def __init__(self, a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement):
        spec = a.spec
        if any(x.spec != spec for x in (b, c, d)):
            raise FieldMismatchError("matrix entries from different fields")
        self.a, self.b, self.c, self.d = a, b, c, d
        self.det = a * d - b * c
        self._key = (a.index, b.index, c.index, d.index)

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows: Sequence[Sequence]) -> "LinearMap":
        (a, b), (c, d) = rows
        return cls(*(parse_element(spec, x) for x in (a, b, c, d)))

    @classmethod
    def identity(cls, spec: FieldSpec) -> "LinearMap":
        return cls(spec.one, spec.zero, spec.zero, spec.one)

    @classmethod
    def diagonal(cls, x: FieldElement, y: FieldElement) -> "LinearMap":
        spec = x.spec
        return cls(x, spec.zero, spec.zero, y)

    @property
    def spec(self) -> FieldSpec:
        return self.a.spec

    @property
    def key(self) -> Tuple[int, int, int, int]:
        return self._key

    def rows(self) -> List[List[FieldElement]]:
        return [[self.a, self.b], [self.c, self.d]]

    def is_singular(self) -> bool:
        return self.det.is_zero()

    def require_unit_det(self) -> "LinearMap":
        if self.det != self.spec.one:
            raise NonUnitDeterminant(f"det = {self.det} for {self!r}, expected 1")
        return self

    def inverse(self) -> "LinearMap":
        if self.is_singular():
            raise SingularMapError(f"{self!r} is singular")
        s = self.det.inverse()
        return LinearMap(s * self.d, -s * self.b, -s * self.c, s * self.a)

    def __matmul__(self, other):
        if isinstance(other, LinearMap):
            return LinearMap(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        if isinstance(other, PhasePoint):
            return PhasePoint(
                self.a * other.q + self.b * other.p, self.c * other.q + self.d * other.p
            )
        return NotImplemented

    def __eq__(self, other):
        return (
            isinstance(other, LinearMap)
            and self.spec == other.spec
            and self._key == other._key
        )

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "LinearMap([[{}, {}], [{}, {}]])".format(self.a, self.b, self.c, self.d)


def apply_linear(L: LinearMap, x: Union[PhasePoint, Line]) -> Union[PhasePoint, Line]:
    """
    Image of a point or a line under an invertible map. A line with normal
    (a, b) goes to the line with normal (a, b) @ inverse(L), same c.
    """
    if L.is_singular():
        raise SingularMapError(f"{L!r} is singular")
    if x.spec != L.spec:
        raise FieldMismatchError("map and argument from different fields")
    if isinstance(x, PhasePoint):
        return L @ x
    if isinstance(x, Line):
        inv = L.inverse()
        return Line(x.a * inv.a + x.b * inv.c, x.a * inv.b + x.b * inv.d, x.c)
    raise TypeError(f"cannot apply a linear map to {type(x).__name__}")


def sl2_group(spec: FieldSpec) -> List[LinearMap]:
    """All N^3 - N unit-determinant maps, ordered by entry indices."""
    one = spec.one
    group = []
    for a in spec.elements():
        for c in spec.elements():
            if a.is_zero() and c.is_zero():
                continue
            if not a.is_zero():
                for b in spec.elements():
                    group.append(LinearMap(a, b, c, (one + b * c) / a))
            else:
                b = -c.inverse()
                for d in spec.elements():
                    group.append(LinearMap(a, b, c, d))
    group.sort(key=lambda L: L.key)
    assert len(group) == spec.N ** 3 - spec.N, len(group)
    return group


def generator_matrices(spec: FieldSpec, z: FieldElement) -> Dict[str, LinearMap]:
    if z.spec != spec:
        raise FieldMismatchError("z is not an element of the given field")
    if z.is_zero():
        raise GeometryError("L3 needs a nonzero z")
    one, zero = spec.one, spec.zero
    return {
        "L1": LinearMap(one, zero, one, one),
        "L2": LinearMap(one, one, zero, one),
        "L3": LinearMap.diagonal(z, z.inverse()),
    }


def _token_matrices(spec: FieldSpec, z: FieldElement) -> Dict[str, LinearMap]:
    gens = generator_matrices(spec, z)
    tokens = dict(gens)
    for name in GENERATOR_NAMES:
        tokens[name + INVERSE_SUFFIX] = gens[name].inverse()
    return tokens


def word_matrix(word: Sequence[str], spec: FieldSpec, z: FieldElement) -> LinearMap:
    tokens = _token_matrices(spec, z)
    acc = LinearMap.identity(spec)
    for token in word:
        if token not in tokens:
            raise GeometryError(f"unknown generator token {token!r}")
        acc = acc @ tokens[token]
    return acc


@functools.lru_cache(maxsize=None)
def _cayley_words(spec: FieldSpec, z: FieldElement) -> Dict[Tuple[int, ...], Tuple[str, ...]]:
    identity = LinearMap.identity(spec)
    tokens = [
        (name, m) for name, m in _token_matrices(spec, z).items() if m != identity
    ]
    words = {identity.key: ()}
    frontier = collections.deque([identity])
    while frontier:
        L = frontier.popleft()
        word = words[L.key]
        for name, g in tokens:
            M = L @ g
            if M.key not in words:
                words[M.key] = word + (name,)
                frontier.append(M)
    logger.debug(
        "Cayley graph of SL(2, F_{}) with z={}: {} elements, diameter {}".format(
            spec.N, z, len(words), max(len(w) for w in words.values())
        )
    )
    return words


def decompose_sl2(L: LinearMap, z: FieldElement) -> Tuple[str, ...]:
    """
    A shortest word in L1, L2, L3 and their inverses whose product is L,
    found by breadth-first search over the Cayley graph.
    """
    L.require_unit_det()
    words = _cayley_words(L.spec, z)
    if L.key not in words:
        raise GeometryError(f"{L!r} is not generated by L1, L2, L3 with z={z}")
    word = words[L.key]
    assert word_matrix(word, L.spec, z) == L, "word does not multiply back to L"
    return word


def conjugacy_classes(group: Sequence[LinearMap]) -> List[Tuple[LinearMap, int]]:
    """(representative, class size) for each conjugacy class, in group order."""
    seen = set()
    classes = []
    inverses = [g.inverse() for g in group]
    for g in group:
        if g.key in seen:
            continue
        members = {(h @ g @ h_inv).key for h, h_inv in zip(group, inverses)}
        seen |= members
        classes.append((g, len(members)))
    assert sum(size for _, size in classes) == len(group)
    return classes
