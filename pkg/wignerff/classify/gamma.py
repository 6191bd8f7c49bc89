#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

"""
The unitarily invariant triple product

    Gamma_{alpha beta gamma} = (1/N) Tr(A_alpha A_beta A_gamma)

which determines a quantum net up to unitary equivalence.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from wignerff.field.gf import FieldSpec, format_element, parse_element
from wignerff.geometry.phase_space import PhasePoint, all_points, striation_index, striations
from wignerff.nets.net import QuantumNet, build_net, choice_from_states
from wignerff.operators.conjugation import solve_conjugation
from wignerff.utils.errors import ConjugationError, FieldMismatchError
from wignerff.utils.misc import NUMERIC_TOL, as_fraction
from wignerff.wigner.transform import PhasePointOperators, phase_point_operators


logger = logging.getLogger(__name__)


@dataclass
class GammaTensor:
    """values[a, b, c] with points flattened as q.index * N + p.index."""

    spec: FieldSpec
    values: np.ndarray

    def _flat(self, alpha: PhasePoint) -> int:
        q, p = alpha.index
        return q * self.spec.N + p

    def __call__(self, alpha: PhasePoint, beta: PhasePoint, gamma: PhasePoint) -> complex:
        return complex(self.values[self._flat(alpha), self._flat(beta), self._flat(gamma)])

    def slice(self, alpha: PhasePoint, beta: PhasePoint) -> np.ndarray:
        """Gamma_{alpha beta gamma} over gamma, as an array [q, p]."""
        N = self.spec.N
        return self.values[self._flat(alpha), self._flat(beta)].reshape(N, N)


def _operators(net_or_ops) -> PhasePointOperators:
    if isinstance(net_or_ops, PhasePointOperators):
        return net_or_ops
    return phase_point_operators(net_or_ops)


def gamma(net) -> GammaTensor:
    ops = _operators(net)
    A = ops.flat()
    values = np.einsum("aij,bjk,cki->abc", A, A, A, optimize=True) / ops.dim
    return GammaTensor(ops.spec, values)


def gamma_slice(net, alpha: PhasePoint, beta: PhasePoint) -> np.ndarray:
    """Gamma_{alpha beta gamma} over gamma as an N x N array [q, p], without the full tensor."""
    ops = _operators(net)
    AB = ops[alpha] @ ops[beta]
    return np.einsum("ij,qpji->qp", AB, ops.ops) / ops.dim


def format_gamma_value(x: complex, N: int) -> str:
    if abs(x.imag) < NUMERIC_TOL:
        frac = as_fraction(x.real, N * N, NUMERIC_TOL)
        return frac if frac is not None else f"{x.real:.4f}"
    return f"{x.real:.4f}{x.imag:+.4f}i"


def gamma_grid_rows(grid: np.ndarray, spec: FieldSpec) -> List[List[str]]:
    """A [q, p] grid as rows from the top (largest p) down, each led by its p label."""
    elems = spec.elements()
    return [
        [format_element(p)] + [format_gamma_value(complex(grid[q.index, p.index]), spec.N) for q in elems]
        for p in reversed(elems)
    ]


def are_equivalent(net1: QuantumNet, net2: QuantumNet, tol: float = NUMERIC_TOL) -> bool:
    if net1.spec != net2.spec or net1.pair != net2.pair:
        raise FieldMismatchError("nets must share the field and the basis pair")
    return bool(np.max(np.abs(gamma(net1).values - gamma(net2).values)) < tol)


def find_equivalence_unitary(net1: QuantumNet, net2: QuantumNet) -> Optional[np.ndarray]:
    """U with U A1_alpha U^+ = A2_alpha for every alpha, or None."""
    if net1.spec != net2.spec:
        raise FieldMismatchError("nets over different fields")
    ops1, ops2 = phase_point_operators(net1), phase_point_operators(net2)
    try:
        return solve_conjugation(list(ops1.flat()), list(ops2.flat()))
    except ConjugationError as e:
        logger.debug(f"No equivalence unitary: {e}")
        return None


def conjugate_net(net: QuantumNet) -> QuantumNet:
    """
    The net of entrywise conjugated projectors; the state of line lambda
    moves to the reflected line (q, p) -> (q, -p).
    """
    rays = []
    for S in striations(net.spec):
        d = S.direction
        rays.append(net.states[striation_index(PhasePoint(d.q, -d.p)), 0].conj())
    return build_net(net.pair, choice_from_states(net.family, rays), net.family)


def gamma_signature(net) -> Tuple:
    """
    Similarity-class signature of an N = 4 net from Gamma_{00 gamma}: the
    sorted values of 16 Gamma and, when Gamma_000 = 19/16, the value of
    16 Gamma at w * gamma for a gamma with 16 Gamma = 3.
    """
    ops = _operators(net)
    spec = ops.spec
    origin = PhasePoint.origin(spec)
    N2 = spec.N ** 2
    grid = np.rint(gamma_slice(ops, origin, origin).real * N2).astype(int)
    values = tuple(sorted(int(x) for x in grid.ravel()))
    orientation = None
    if grid[0, 0] == 19:
        w = parse_element(spec, "w")
        for x in all_points(spec):
            if grid[x.index] == 3:
                orientation = int(grid[x.scale(w).index])
                break
    return values, orientation
