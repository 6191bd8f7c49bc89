#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


import itertools
import logging
from typing import Sequence

import numpy as np
from wignerff.field.basis import FieldBasis
from wignerff.field.gf import FieldElement, FieldSpec
from wignerff.geometry.phase_space import PhasePoint
from wignerff.operators.weyl import BasisPair, WeylOperators
from wignerff.utils.errors import ConjugationError, NoSuchW
from wignerff.utils.misc import NUMERIC_TOL, fix_phase, unitarity_residual


logger = logging.getLogger(__name__)


def solve_conjugation(
    sources: Sequence[np.ndarray],
    targets: Sequence[np.ndarray],
    tol: float = NUMERIC_TOL,
) -> np.ndarray:
    """
    The unitary S with S A_k S^+ = B_k for every k, as the null vector of the
    stacked system (B_k (x) I - I (x) A_k^T) vec(S) = 0 (row-major vec).

    Unique up to phase when the A_k generate the full matrix algebra; the
    phase is fixed so that the first nonzero entry of S is real positive.
    """
    if len(sources) != len(targets) or not sources:
        raise ConjugationError("need matching, non-empty source and target lists")
    dim = sources[0].shape[0]
    eye = np.eye(dim)
    gram = np.zeros((dim * dim, dim * dim), dtype=complex)
    for A, B in zip(sources, targets):
        M = np.kron(B, eye) - np.kron(eye, A.T)
        gram += M.conj().T @ M
    evals, evecs = np.linalg.eigh(gram)
    scale = max(1.0, float(evals[-1]))
    nullity = int(np.sum(evals < tol * scale))
    if nullity != 1:
        raise ConjugationError(
            f"conjugation solution space has dimension {nullity}, expected 1"
        )
    S = evecs[:, 0].reshape(dim, dim)
    gram_S = S @ S.conj().T
    c = np.trace(gram_S).real / dim
    if c <= 0:
        raise ConjugationError("degenerate conjugation solution")
    S = S / np.sqrt(c)
    residual = unitarity_residual(S)
    if residual > tol ** 0.5:
        raise ConjugationError(f"no unitary solution, unitarity residual {residual:.3g}")
    S = fix_phase(S)
    for A, B in zip(sources, targets):
        err = np.max(np.abs(S @ A @ S.conj().T - B))
        if err > tol ** 0.5:
            raise ConjugationError(f"conjugation residual {err:.3g} too large")
    return S


def rebasing_unitary(pair_from: BasisPair, pair_to: BasisPair) -> np.ndarray:
    """
    C with C T^from_alpha C^+ proportional to T^to_alpha for every alpha. Only
    pairs with the same w are unitarily related this way.
    """
    if pair_from.spec != pair_to.spec:
        raise ConjugationError("pairs belong to different fields")
    if pair_from.w != pair_to.w:
        raise ConjugationError(
            f"pairs with w={pair_from.w} and w={pair_to.w} are not unitarily related"
        )
    ops_from, ops_to = WeylOperators(pair_from), WeylOperators(pair_to)
    zero = pair_from.spec.zero
    points = [PhasePoint(e, zero) for e in pair_from.E] + [
        PhasePoint(zero, f) for f in pair_from.F
    ]
    return solve_conjugation(
        [ops_from(x) for x in points], [ops_to(x) for x in points]
    )


def self_dual_pair(spec: FieldSpec, w: FieldElement) -> BasisPair:
    """
    A pair with E = F, i.e. a basis orthonormal for tr(x y / w), found by
    backtracking in element order.
    """
    w_inv = w.inverse()

    def form(x, y):
        return (w_inv * x * y).trace().index

    candidates = [x for x in spec.nonzero_elements() if form(x, x) == 1]

    def extend(chosen):
        if len(chosen) == spec.n:
            return chosen
        start = candidates.index(chosen[-1]) + 1 if chosen else 0
        for x in itertools.islice(candidates, start, None):
            if all(form(x, e) == 0 for e in chosen):
                found = extend(chosen + [x])
                if found is not None:
                    return found
        return None

    elems = extend([])
    if elems is None:
        raise NoSuchW(f"F_{spec.N} has no self-dual basis for w={w}")
    E = FieldBasis(elems)
    pair = BasisPair(E, E)
    assert pair.w == w
    return pair

