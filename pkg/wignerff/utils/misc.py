#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

import fractions
from typing import Any, List, Optional, Sequence

import numpy as np
from tabulate import tabulate

# identities built from exact roots of unity
ALGEBRAIC_TOL = 1e-10
# results of eigen-decompositions and linear solves
NUMERIC_TOL = 1e-8
# per-striation probability sums
PROBABILITY_TOL = 1e-6

# amplitudes below this count as zero when fixing phases
_PHASE_EPS = 1e-9


def max_abs(a) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def unitarity_residual(U: np.ndarray) -> float:
    return max_abs(U @ U.conj().T - np.eye(U.shape[0]))


def is_unitary(U: np.ndarray, tol: float = ALGEBRAIC_TOL) -> bool:
    return unitarity_residual(U) < tol


def fix_phase(v: np.ndarray) -> np.ndarray:
    """Rotate v so that its first nonzero entry (row-major) is real positive."""
    flat = v.reshape(-1)
    nz = np.flatnonzero(np.abs(flat) > _PHASE_EPS)
    if not nz.size:
        return v
    lead = flat[nz[0]]
    return v * (abs(lead) / lead)


def rank1_projector(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=complex).reshape(-1)
    return np.outer(v, v.conj())


def as_fraction(x: float, denominator: int, tol: float = ALGEBRAIC_TOL) -> Optional[str]:
    """'k/d' when x is within tol of a multiple of 1/d, else None."""
    k = round(x * denominator)
    if abs(x - k / denominator) > tol:
        return None
    frac = fractions.Fraction(int(k), denominator)
    return str(frac)


def format_number(x, digits: int = 12) -> Any:
    """Round to ``digits`` significant digits; complex values as [re, im]."""
    if isinstance(x, (complex, np.complexfloating)):
        return [format_number(x.real, digits), format_number(x.imag, digits)]
    x = float(x)
    if x == 0.0:
        return 0.0
    return float(f"{x:.{digits}g}")


def complex_to_json(a, digits: int = 12) -> List:
    """Nested lists of [re, im] pairs."""
    a = np.asarray(a, dtype=complex)
    if a.ndim == 0:
        return format_number(complex(a), digits)
    return [complex_to_json(x, digits) for x in a]


def complex_from_json(data) -> np.ndarray:
    a = np.asarray(data, dtype=float)
    if a.shape[-1] != 2:
        raise ValueError("complex entries must be [re, im] pairs")
    return a[..., 0] + 1j * a[..., 1]


def real_to_json(a, digits: int = 12) -> List:
    return np.vectorize(lambda x: format_number(x, digits), otypes=[float])(
        np.asarray(a, dtype=float)
    ).tolist()


def format_table(rows: Sequence[Sequence], headers: Sequence[str] = ()) -> str:
    return tabulate(rows, headers=list(headers), tablefmt="pipe")
