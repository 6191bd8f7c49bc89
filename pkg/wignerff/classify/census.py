#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

"""
Nets for different w are not unitarily related, so each of the N - 1 values
of w contributes its own N^(N-1) equivalence classes.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from wignerff.classify.orbits import OrbitReport, similarity_orbits
from wignerff.field.basis import FieldBasis, polynomial_basis
from wignerff.field.gf import FieldSpec, format_element
from wignerff.operators.weyl import BasisPair
from wignerff.utils.misc import format_table


logger = logging.getLogger(__name__)


@dataclass
class CensusReport:
    spec: FieldSpec
    reports: List[OrbitReport]

    @property
    def total(self) -> int:
        return sum(sum(r.orbit_sizes) for r in self.reports)

    def rows(self) -> List[List]:
        return [
            [format_element(r.pair.w), sum(r.orbit_sizes), r.orbit_count, " ".join(map(str, r.orbit_sizes))]
            for r in self.reports
        ]

    def format(self) -> str:
        table = format_table(self.rows(), ["w", "equivalence classes", "similarity classes", "sizes"])
        return f"{table}\n\ntotal {self.total} equivalence classes over F_{self.spec.N}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "field": {"r": self.spec.r, "n": self.spec.n},
            "total": self.total,
            "per_w": [
                {
                    "w": format_element(r.pair.w),
                    "equivalence_classes": sum(r.orbit_sizes),
                    "orbit_sizes": r.orbit_sizes,
                }
                for r in self.reports
            ],
        }


def w_variant_census(
    spec: FieldSpec,
    E: Optional[FieldBasis] = None,
    max_order: Optional[int] = None,
    num_workers: int = 1,
) -> CensusReport:
    E = E or polynomial_basis(spec)
    reports = []
    for w in spec.nonzero_elements():
        logger.info(f"Census of F_{spec.N}: w = {w}")
        reports.append(
            similarity_orbits(
                spec,
                BasisPair.from_w(E, w),
                max_order=max_order,
                burnside=False,
                num_workers=num_workers,
            )
        )
    report = CensusReport(spec, reports)
    assert report.total == (spec.N - 1) * spec.N ** (spec.N - 1), report.total
    return report
