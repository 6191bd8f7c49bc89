#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


from typing import List, Optional

import numpy as np
from tabulate import tabulate
from wignerff.field.gf import format_element
from wignerff.utils.misc import as_fraction
from wignerff.wigner.transform import WignerMap


def format_value(x: float, N: int, digits: int = 4) -> str:
    """k/N^2 when exact, else a decimal."""
    frac = as_fraction(x, N * N)
    if frac is not None:
        return frac
    return f"{x:.{digits}f}"


def heatmap_rows(values: np.ndarray, spec, digits: int = 4) -> List[List[str]]:
    """Rows top-down, p from last to 0, each led by its p label."""
    N = spec.N
    elems = spec.elements()
    rows = []
    for p in reversed(elems):
        rows.append(
            [format_element(p)]
            + [format_value(values[q.index, p.index], N, digits) for q in elems]
        )
    return rows


def render_heatmap(W: WignerMap, title: Optional[str] = None, digits: int = 4) -> str:
    """Text grid with the origin in the lower-left corner, q across, p up."""
    headers = ["p \\ q"] + [format_element(q) for q in W.spec.elements()]
    table = tabulate(heatmap_rows(W.values, W.spec, digits), headers=headers, tablefmt="grid")
    if title:
        return f"{title}\n{table}"
    return table
