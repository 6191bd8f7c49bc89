#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

"""
Phase-point operators A_alpha = sum_{lines through alpha} Q(line) - I and the
discrete Wigner function W_alpha = Tr(rho A_alpha) / N built from them.

Arrays over phase space are indexed [q.index, p.index].
"""

import functools
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from wignerff.field.gf import FieldSpec
from wignerff.geometry.phase_space import (
    Line,
    PhasePoint,
    all_lines,
    all_points,
    striation_of,
    striations,
)
from wignerff.nets.net import QuantumNet
from wignerff.operators.weyl import BasisPair, translation_operator
from wignerff.utils.errors import DimensionMismatch, FieldMismatchError
from wignerff.utils.misc import ALGEBRAIC_TOL, NUMERIC_TOL
from wignerff.wigner.states import validate_density_matrix


logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=None)
def offset_table(spec: FieldSpec) -> np.ndarray:
    """offsets[i, q, p]: offset of the line of striation i through (q, p)."""
    N = spec.N
    table = np.zeros((N + 1, N, N), dtype=np.int64)
    for S in striations(spec):
        for alpha in all_points(spec):
            table[(S.index,) + alpha.index] = S.offset(alpha).index
    table.setflags(write=False)
    return table


class PhasePointOperators(object):
    """``ops[q, p]`` is the Hermitian operator A_(q, p)."""

    def __init__(self, net: QuantumNet):
        spec, N = net.spec, net.dim
        offsets = offset_table(spec)
        ops = np.zeros((N, N, N, N), dtype=complex)
        for i in range(N + 1):
            ops += net.projectors[i][offsets[i]]
        ops -= np.eye(N)
        self.net = net
        self.ops = ops

    @property
    def spec(self) -> FieldSpec:
        return self.net.spec

    @property
    def dim(self) -> int:
        return self.net.dim

    def __getitem__(self, alpha: PhasePoint) -> np.ndarray:
        return self.ops[alpha.index]

    def flat(self) -> np.ndarray:
        """Operators stacked in q-major point order, shape (N^2, N, N)."""
        N = self.dim
        return self.ops.reshape(N * N, N, N)

    def check_invariants(self, tol: float = NUMERIC_TOL):
        N = self.dim
        flat = self.flat()
        assert np.max(np.abs(flat - flat.conj().transpose(0, 2, 1))) < tol, "A not Hermitian"
        traces = np.einsum("aii->a", flat)
        assert np.max(np.abs(traces - 1)) < tol, "Tr A != 1"
        gram = np.einsum("aij,bji->ab", flat, flat)
        assert np.max(np.abs(gram - N * np.eye(N * N))) < tol, "Tr(A A') != N delta"
        for line in all_lines(self.spec):
            total = sum(self[x] for x in line.points)
            assert np.max(np.abs(total - N * self.net.projector(line))) < tol, (
                f"sum of A over {line} != N Q"
            )


def phase_point_operators(net: QuantumNet) -> PhasePointOperators:
    return PhasePointOperators(net)


@dataclass
class WignerMap:
    """values[q, p] = W_(q, p). ``deviation`` records input normalization."""

    spec: FieldSpec
    values: np.ndarray
    deviation: Optional[float] = None

    def __getitem__(self, alpha: PhasePoint) -> float:
        return float(self.values[alpha.index])

    def total(self) -> float:
        return float(self.values.sum())

    def marginals(self) -> np.ndarray:
        """Line sums as an (N + 1) x N array [striation, offset]."""
        offsets = offset_table(self.spec)
        N = self.spec.N
        out = np.zeros((N + 1, N))
        for i in range(N + 1):
            np.add.at(out[i], offsets[i].ravel(), self.values.ravel())
        return out


def _as_operators(net_or_ops) -> PhasePointOperators:
    if isinstance(net_or_ops, PhasePointOperators):
        return net_or_ops
    return phase_point_operators(net_or_ops)


def _check_dim(M: np.ndarray, N: int, what: str):
    if M.shape != (N, N):
        raise DimensionMismatch(f"{what} has shape {M.shape}, expected ({N}, {N})")


def wigner_transform(rho: np.ndarray, net, tol: float = ALGEBRAIC_TOL) -> WignerMap:
    """
    W_alpha = Tr(rho A_alpha) / N; ``net`` may also be a PhasePointOperators.
    Raises InvalidStateError unless rho is a density matrix within ``tol``.
    """
    ops = _as_operators(net)
    N = ops.dim
    rho = np.asarray(rho, dtype=complex)
    _check_dim(rho, N, "density matrix")
    rho = validate_density_matrix(rho, tol)
    values = np.einsum("ij,qpji->qp", rho, ops.ops) / N
    return WignerMap(ops.spec, values.real)


def inverse_wigner(W: WignerMap, net) -> np.ndarray:
    """rho = sum_alpha W_alpha A_alpha."""
    ops = _as_operators(net)
    if W.spec != ops.spec:
        raise FieldMismatchError("Wigner map and net live on different phase spaces")
    return np.einsum("qp,qpij->ij", W.values, ops.ops)


def line_marginal(W: WignerMap, line: Line, net: Optional[QuantumNet] = None) -> float:
    """Sum of W over the points of a line."""
    if line.spec != W.spec or (net is not None and net.spec != W.spec):
        raise FieldMismatchError("line, map and net must share one phase space")
    return float(sum(W.values[x.index] for x in line.points))


def line_probabilities(rho: np.ndarray, net: QuantumNet) -> np.ndarray:
    """Tr(rho Q(line)) as an (N + 1) x N array [striation, offset]."""
    rho = np.asarray(rho, dtype=complex)
    _check_dim(rho, net.dim, "density matrix")
    return np.einsum("ij,stji->st", rho, net.projectors).real


def expand_operator(M: np.ndarray, net) -> np.ndarray:
    """c[q, p] = Tr(M A_(q, p)) / N, so that M = sum c_alpha A_alpha."""
    ops = _as_operators(net)
    M = np.asarray(M, dtype=complex)
    _check_dim(M, ops.dim, "operator")
    return np.einsum("ij,qpji->qp", M, ops.ops) / ops.dim


def translate_state(rho: np.ndarray, beta: PhasePoint, pair: BasisPair) -> np.ndarray:
    T = translation_operator(beta, pair)
    return T @ np.asarray(rho, dtype=complex) @ T.conj().T


def marginal_of_line(probabilities: np.ndarray, line: Line) -> float:
    S = striation_of(line)
    return float(probabilities[S.index, S.offset(line.points[0]).index])

