#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

"""
Each striation picks out the joint eigenbasis of its N commuting translation
operators; the N + 1 bases are mutually unbiased.

Labels: the label-0 vector of a striation with direction d is the joint
eigenvector, with eigenvalue 1, of the operators

    D_beta = zeta^{B(beta)} T_beta,   beta = e_i * d,  i = 1..n

where B(beta) = x . y is the dot product of the expanded coordinates of
beta, zeta^B = eta^{B/2} (B/2 taken mod r) for odd r and i^B for r = 2. The
label-t vector is T_(0,t) applied to the label-0 vector, or T_(t,0) for the
vertical striation, so labels follow the offsets of the lines.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from wignerff.field.basis import FieldBasis
from wignerff.field.gf import FieldElement, FieldSpec, make_field, parse_element
from wignerff.geometry.phase_space import (
    Striation,
    striations,
)
from wignerff.operators.weyl import BasisPair, WeylOperators, eta_power
from wignerff.utils.errors import FieldMismatchError, MalformedInputError, WignerFFError
from wignerff.utils.misc import ALGEBRAIC_TOL, NUMERIC_TOL, fix_phase, rank1_projector

logger = logging.getLogger(__name__)

EIGENBASIS_METHODS = ("projector", "sequential")

# label-0 vectors that override the generic rule, keyed by
# (field key, E indices, F indices) and then by striation index. The
# reference F_4 net (E = F = (w, 1)) is labelled so that the similarity
# index arithmetic on ray choices holds literally.
_HALF = 0.5
LABEL_ANCHORS: Dict[Tuple, Dict[int, np.ndarray]] = {
    ((2, 2, (1, 1, 1)), (2, 1), (2, 1)): {
        2: _HALF * np.array([1, -1j, 1j, 1]),
        4: _HALF * np.array([1, -1j, 1, 1j]),
    }
}


def reference_pair() -> BasisPair:
    """The F_4 pair E = F = (w, 1), with multiplier w."""
    spec = make_field(2, 2)
    E = FieldBasis([parse_element(spec, "w"), spec.one])
    return BasisPair(E, E)


def _pair_key(pair: BasisPair) -> Tuple:
    return (
        pair.spec.key(),
        tuple(e.index for e in pair.E),
        tuple(f.index for f in pair.F),
    )


@dataclass
class StriationBasis:
    """vectors[t.index] is the unit vector labelled t."""

    striation: Striation
    vectors: np.ndarray
    labels: List[FieldElement]

    @property
    def index(self) -> int:
        return self.striation.index

    def vector(self, t: FieldElement) -> np.ndarray:
        return self.vectors[t.index]

    def projector(self, t: FieldElement) -> np.ndarray:
        return rank1_projector(self.vectors[t.index])

    def label_of(self, v: np.ndarray) -> FieldElement:
        """Label of the basis vector with the largest overlap with v."""
        overlaps = np.abs(self.vectors.conj() @ np.asarray(v).reshape(-1))
        return self.labels[int(np.argmax(overlaps))]

    def __len__(self):
        return len(self.labels)


@dataclass
class MubFamily:
    pair: BasisPair
    bases: Tuple[StriationBasis, ...]

    def __getitem__(self, i: int) -> StriationBasis:
        return self.bases[i]

    def __len__(self):
        return len(self.bases)


@dataclass
class MubReport:
    max_deviation: float
    max_orthonormality_residual: float
    pair_count: int

    def ok(self, tol: float = 1e-9) -> bool:
        return self.max_deviation < tol and self.max_orthonormality_residual < tol


def _symmetrized_generators(S: Striation, pair: BasisPair, ops: WeylOperators) -> List[np.ndarray]:
    r = pair.r
    out = []
    for e in pair.E:
        beta = S.direction.scale(e)
        x, y = pair.exponents(beta)
        B = int(np.dot(x, y))
        if r == 2:
            phase = 1j ** (B % 4)
        else:
            phase = eta_power(r, (B % r) * (r + 1) // 2)
        out.append(phase * ops(beta))
    return out


def _label_zero_projector(gens: Sequence[np.ndarray], r: int) -> np.ndarray:
    dim = gens[0].shape[0]
    P = np.eye(dim, dtype=complex)
    for D in gens:
        avg = np.zeros((dim, dim), dtype=complex)
        power = np.eye(dim, dtype=complex)
        for _ in range(r):
            avg += power
            power = power @ D
        P = P @ (avg / r)
    return P


def _vector_from_projector(P: np.ndarray) -> np.ndarray:
    col = int(np.argmax(np.linalg.norm(P, axis=0)))
    v = P[:, col]
    return fix_phase(v / np.linalg.norm(v))


def _split_hermitian(Q: np.ndarray, H: np.ndarray, tol: float) -> List[Tuple[float, np.ndarray]]:
    """Eigenspaces of the Hermitian H restricted to the column span of Q."""
    evals, evecs = np.linalg.eigh(Q.conj().T @ H @ Q)
    out: List[Tuple[float, np.ndarray]] = []
    start = 0
    for i in range(1, len(evals) + 1):
        if i == len(evals) or evals[i] - evals[start] > tol:
            out.append((float(np.mean(evals[start:i])), Q @ evecs[:, start:i]))
            start = i
    return out


def _joint_blocks(gens: Sequence[np.ndarray], tol: float) -> List[Tuple[Tuple[complex, ...], np.ndarray]]:
    """
    Simultaneous eigenspaces of commuting unitaries, splitting by the real
    and then the imaginary part of one operator at a time.
    """
    dim = gens[0].shape[0]
    blocks = [((), np.eye(dim, dtype=complex))]
    for D in gens:
        re, im = (D + D.conj().T) / 2, (D - D.conj().T) / 2j
        refined = []
        for values, Q in blocks:
            for h, Qh in _split_hermitian(Q, re, tol):
                for k, Qk in _split_hermitian(Qh, im, tol):
                    refined.append((values + (complex(h, k),), Qk))
        blocks = refined
    return blocks


def _label_zero_vector(gens: Sequence[np.ndarray], r: int, method: str) -> np.ndarray:
    if method == "projector":
        return _vector_from_projector(_label_zero_projector(gens, r))
    if method == "sequential":
        for values, Q in _joint_blocks(gens, NUMERIC_TOL):
            if all(abs(v - 1) < NUMERIC_TOL for v in values):
                if Q.shape[1] != 1:
                    raise WignerFFError("translation family is not maximal")
                return fix_phase(Q[:, 0])
        raise WignerFFError("no joint eigenvector with eigenvalue 1")
    raise MalformedInputError(
        f"unknown eigenbasis method {method!r}, use one of {EIGENBASIS_METHODS}"
    )


def striation_eigenbasis(
    S: Striation,
    pair: BasisPair,
    method: str = "projector",
    ops: Optional[WeylOperators] = None,
) -> StriationBasis:
    if S.spec != pair.spec:
        raise FieldMismatchError("striation and basis pair from different fields")
    ops = ops or WeylOperators(pair)
    spec = pair.spec
    v0 = _label_zero_vector(_symmetrized_generators(S, pair, ops), pair.r, method)
    anchor = LABEL_ANCHORS.get(_pair_key(pair), {}).get(S.index)
    labels = spec.elements()
    vectors = np.stack([fix_phase(ops(S.offset_shift(t)) @ v0) for t in labels])
    if anchor is not None:
        # relabel so that the anchor carries label 0
        t0 = labels[int(np.argmax(np.abs(vectors.conj() @ anchor)))]
        v0 = vectors[t0.index]
        vectors = np.stack([fix_phase(ops(S.offset_shift(t)) @ v0) for t in labels])
    basis = StriationBasis(S, vectors, labels)
    _check_eigenbasis(basis, pair, ops)
    return basis


def _check_eigenbasis(basis: StriationBasis, pair: BasisPair, ops: WeylOperators):
    gram = basis.vectors.conj() @ basis.vectors.T
    err = np.max(np.abs(gram - np.eye(len(basis))))
    assert err < ALGEBRAIC_TOL ** 0.5, f"basis of {basis.striation} not orthonormal ({err})"
    d = basis.striation.direction
    for s in pair.spec.elements():
        T = ops(d.scale(s))
        for v in basis.vectors:
            Tv = T @ v
            lam = np.vdot(v, Tv)
            assert np.linalg.norm(Tv - lam * v) < 1e-9, "not a joint eigenvector"


def mub_family(spec: FieldSpec, pair: BasisPair, method: str = "projector") -> MubFamily:
    if pair.spec != spec:
        raise FieldMismatchError("basis pair does not belong to the given field")
    ops = WeylOperators(pair)
    bases = tuple(striation_eigenbasis(S, pair, method, ops) for S in striations(spec))
    logger.debug(f"Built {len(bases)} striation bases for F_{spec.N}")
    return MubFamily(pair, bases)


def verify_mub(family: MubFamily) -> MubReport:
    N = family.pair.dim
    max_dev, max_orth, count = 0.0, 0.0, 0
    for i, bi in enumerate(family.bases):
        gram = bi.vectors.conj() @ bi.vectors.T
        max_orth = max(max_orth, float(np.max(np.abs(gram - np.eye(N)))))
        for bj in family.bases[i + 1 :]:
            overlaps = np.abs(bi.vectors.conj() @ bj.vectors.T) ** 2
            max_dev = max(max_dev, float(np.max(np.abs(overlaps - 1.0 / N))))
            count += overlaps.size
    return MubReport(max_dev, max_orth, count)
