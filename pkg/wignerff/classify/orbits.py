#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

"""
Similarity classes: orbits of SL(2, F_N) acting on the N^(N-1) equivalence
classes of quantum nets, each class represented by its ray choice with
vertical and horizontal labels 0.

The orbits come from union-find over the generators L1, L2, L3; Burnside's
lemma over conjugacy classes gives an independent count.
"""

import functools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from wignerff.classify.discriminant import discriminant_D
from wignerff.classify.symplectic import choice_action, generator_actions
from wignerff.distributed import launch_map
from wignerff.field.basis import FieldBasis
from wignerff.field.gf import FieldSpec, format_element, make_field
from wignerff.geometry.linear import LinearMap, conjugacy_classes, sl2_group
from wignerff.nets.mub import MubFamily, mub_family, reference_pair
from wignerff.nets.net import RayChoice, enumerate_choices, representative
from wignerff.operators.weyl import BasisPair
from wignerff.utils.errors import FieldMismatchError, WignerFFError
from wignerff.utils.misc import format_table


logger = logging.getLogger(__name__)


@dataclass
class BurnsideRow:
    representative: LinearMap
    class_size: int
    fixed: int


@dataclass
class OrbitReport:
    spec: FieldSpec
    pair: BasisPair
    group_order: int
    orbits: List[List[RayChoice]]
    burnside: List[BurnsideRow] = field(default_factory=list)
    discriminants: Optional[List[Any]] = None

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)

    @property
    def orbit_sizes(self) -> List[int]:
        return sorted((len(o) for o in self.orbits), reverse=True)

    @property
    def representatives(self) -> List[RayChoice]:
        return [o[0] for o in self.orbits]

    @property
    def burnside_count(self) -> Optional[int]:
        if not self.burnside:
            return None
        total = sum(row.class_size * row.fixed for row in self.burnside)
        if total % self.group_order:
            raise WignerFFError(f"Burnside sum {total} is not divisible by |G|={self.group_order}")
        return total // self.group_order

    def is_consistent(self) -> bool:
        count = self.burnside_count
        return (count is None or count == self.orbit_count) and sum(
            self.orbit_sizes
        ) == self.spec.N ** (self.spec.N - 1)

    def orbit_index(self, choice: RayChoice) -> int:
        rep = representative(choice)
        for i, orbit in enumerate(self.orbits):
            if rep in orbit:
                return i
        raise KeyError(f"{choice} is not over F_{self.spec.N}")

    def table_rows(self) -> List[List]:
        rows = []
        for i, orbit in enumerate(self.orbits):
            row = [i, len(orbit), str(orbit[0])]
            if self.discriminants is not None:
                row.append(format_element(self.discriminants[i]))
            rows.append(row)
        return rows

    def table_headers(self) -> List[str]:
        headers = ["orbit", "size", "representative"]
        if self.discriminants is not None:
            headers.append("D")
        return headers

    def burnside_rows(self) -> List[List]:
        return [
            [str(row.representative.rows()), row.class_size, row.fixed]
            for row in self.burnside
        ]

    def format(self) -> str:
        text = format_table(self.table_rows(), self.table_headers())
        if self.burnside:
            text += "\n\n" + format_table(self.burnside_rows(), ["class", "size", "fixed"])
            text += f"\n\nBurnside count {self.burnside_count}, direct count {self.orbit_count}"
        return text

    def to_dict(self) -> Dict[str, Any]:
        out = {
            "field": {"r": self.spec.r, "n": self.spec.n},
            "w": format_element(self.pair.w),
            "group_order": self.group_order,
            "orbit_count": self.orbit_count,
            "orbit_sizes": self.orbit_sizes,
            "orbits": [
                {"size": len(o), "representative": o[0].to_strings()} for o in self.orbits
            ],
            "burnside": [
                {
                    "class": [[format_element(x) for x in r] for r in row.representative.rows()],
                    "class_size": row.class_size,
                    "fixed": row.fixed,
                }
                for row in self.burnside
            ],
            "burnside_count": self.burnside_count,
        }
        if self.discriminants is not None:
            for entry, D in zip(out["orbits"], self.discriminants):
                entry["D"] = format_element(D)
        return out


class _UnionFind(object):
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)


def _orbits(reps: Sequence[RayChoice], actions) -> List[List[RayChoice]]:
    position = {c.key: i for i, c in enumerate(reps)}
    uf = _UnionFind(len(reps))
    for i, c in enumerate(reps):
        for action in actions:
            uf.union(i, position[representative(action.apply(c)).key])
    groups: Dict[int, List[RayChoice]] = {}
    for i, c in enumerate(reps):
        groups.setdefault(uf.find(i), []).append(c)
    # reps are sorted, so each group starts with its minimal choice
    return sorted(groups.values(), key=lambda g: g[0].key)


@functools.lru_cache(maxsize=None)
def _family(r: int, n: int, E: Tuple[int, ...], F: Tuple[int, ...]) -> MubFamily:
    spec = make_field(r, n)
    pair = BasisPair(FieldBasis(spec.element(i) for i in E), FieldBasis(spec.element(i) for i in F))
    return mub_family(spec, pair)


def _count_fixed(task) -> int:
    """Number of equivalence classes fixed by one group element."""
    r, n, E, F, g_key = task
    family = _family(r, n, E, F)
    spec = family.pair.spec
    g = LinearMap(*(spec.element(i) for i in g_key))
    action = choice_action(g, family)
    return sum(
        1
        for c in enumerate_choices(spec, representatives=True, max_order=spec.N)
        if representative(action.apply(c)) == c
    )


def burnside_table(family: MubFamily, num_workers: int = 1) -> List[BurnsideRow]:
    pair = family.pair
    spec = pair.spec
    classes = conjugacy_classes(sl2_group(spec))
    E = tuple(e.index for e in pair.E)
    F = tuple(f.index for f in pair.F)
    tasks = [(spec.r, spec.n, E, F, g.key) for g, _ in classes]
    fixed = launch_map(_count_fixed, tasks, num_workers)
    return [BurnsideRow(g, size, k) for (g, size), k in zip(classes, fixed)]


def similarity_orbits(
    spec: FieldSpec,
    pair: BasisPair,
    max_order: Optional[int] = None,
    burnside: bool = True,
    num_workers: int = 1,
    family: Optional[MubFamily] = None,
) -> OrbitReport:
    if pair.spec != spec:
        raise FieldMismatchError("basis pair does not belong to the given field")
    reps = list(enumerate_choices(spec, representatives=True, max_order=max_order))
    family = family or mub_family(spec, pair)
    logger.info(f"Classifying {len(reps)} equivalence classes over F_{spec.N}, w={pair.w}")
    orbits = _orbits(reps, generator_actions(family))
    report = OrbitReport(spec, pair, spec.N ** 3 - spec.N, orbits)
    if burnside:
        report.burnside = burnside_table(family, num_workers)
    if pair == reference_pair():
        report.discriminants = [discriminant_D(o[0]) for o in orbits]
    logger.info(
        f"Found {report.orbit_count} similarity classes of sizes {report.orbit_sizes}"
    )
    if not report.is_consistent():
        raise WignerFFError(
            f"orbit count {report.orbit_count} disagrees with Burnside count {report.burnside_count}"
        )
    return report
