#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

"""
Unitaries U_L with U_L T_alpha U_L^+ proportional to T_(L alpha) for unit
determinant L, and the induced action on ray choices.

Two constructions:

- "solve": conjugate the generators X_i = T_(e_i, 0), Z_i = T_(0, f_i) onto
  zeta^B T_(L alpha), where the phase zeta^B (i^B for qubits, eta^(B/2) for
  odd r, B = x . y) makes every target have the same order as its source.
- "word": qubits only. L is written as a word in L1, L2, L3 and U_L is the
  matching product of U1 = (x) diag(1, i), U2 = (x) (1/sqrt 2)[[1, i], [i, 1]]
  and U3 = multiplication by z permuting the computational basis, all in a
  self-dual frame E = F that is then rebased onto the requested pair.
"""

import functools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np
from wignerff.field.basis import FieldBasis, expand, expansion_matrix, inverse_mod, power_basis
from wignerff.field.gf import FieldElement, FieldSpec, parse_element, primitive_element
from wignerff.geometry.linear import LinearMap, decompose_sl2, generator_matrices
from wignerff.geometry.phase_space import PhasePoint, all_points, striation_index, striations
from wignerff.nets.mub import MubFamily
from wignerff.nets.net import RayChoice
from wignerff.operators.conjugation import rebasing_unitary, self_dual_pair, solve_conjugation
from wignerff.operators.gates import (
    basis_permutation,
    quarter_turn_x,
    quarter_turn_z,
    swap_cnot_circuit,
)
from wignerff.operators.weyl import BasisPair, WeylOperators, eta_power
from wignerff.utils.errors import ConjugationError, FieldMismatchError, MalformedInputError
from wignerff.utils.misc import NUMERIC_TOL


logger = logging.getLogger(__name__)

UNITARY_METHODS = ("solve", "word")


def generator_z(spec: FieldSpec) -> FieldElement:
    """The z of L3 = diag(z, 1/z): wbar for F_4, otherwise the smallest primitive element."""
    if spec.key() == (2, 2, (1, 1, 1)):
        return parse_element(spec, "wbar")
    return primitive_element(spec)


def symmetric_phase(pair: BasisPair, beta: PhasePoint) -> complex:
    x, y = pair.exponents(beta)
    B = int(np.dot(x, y))
    if pair.r == 2:
        return 1j ** (B % 4)
    return eta_power(pair.r, (B % pair.r) * (pair.r + 1) // 2)


def _solve_unitary(L: LinearMap, pair: BasisPair, ops: WeylOperators) -> np.ndarray:
    zero = pair.spec.zero
    points = [PhasePoint(e, zero) for e in pair.E] + [PhasePoint(zero, f) for f in pair.F]
    sources = [ops(x) for x in points]
    targets = [symmetric_phase(pair, L @ x) * ops(L @ x) for x in points]
    return solve_conjugation(sources, targets)


def multiplication_gate(z: FieldElement, E: FieldBasis) -> np.ndarray:
    """
    Multiplication by z on the qubit register labelled by the basis E: the
    SWAP/CNOT circuit acting in the power basis of z, relabelled onto E.
    """
    spec = z.spec
    if spec.r != 2:
        raise ConjugationError("the multiplication circuit needs characteristic 2")
    powers = power_basis(z)
    C = expansion_matrix(E, powers)
    circuit = swap_cnot_circuit(spec.n, expand(z ** spec.n, powers))
    return basis_permutation(inverse_mod(C, 2), 2) @ circuit @ basis_permutation(C, 2)


@functools.lru_cache(maxsize=None)
def _self_dual_gates(spec: FieldSpec, w: FieldElement, z: FieldElement) -> Tuple[BasisPair, Dict[str, np.ndarray]]:
    frame = self_dual_pair(spec, w)
    n = spec.n
    U3 = multiplication_gate(z, frame.E)
    gates = {"L1": quarter_turn_z(n), "L2": quarter_turn_x(n), "L3": U3}
    for name in list(gates):
        gates[name + "^-1"] = gates[name].conj().T
    return frame, gates


def _word_unitary(L: LinearMap, pair: BasisPair) -> np.ndarray:
    if pair.r != 2:
        raise ConjugationError("the gate-word construction needs characteristic 2")
    spec = pair.spec
    z = generator_z(spec)
    frame, gates = _self_dual_gates(spec, pair.w, z)
    U = np.eye(pair.dim, dtype=complex)
    for token in decompose_sl2(L, z):
        U = U @ gates[token]
    if frame != pair:
        C = rebasing_unitary(frame, pair)
        U = C @ U @ C.conj().T
    return U


def covariance_residual(U: np.ndarray, L: LinearMap, ops: WeylOperators) -> float:
    """max over alpha of N - |Tr(T_(L alpha)^+ U T_alpha U^+)|; 0 for an exact U_L."""
    N = ops.pair.dim
    worst = 0.0
    for alpha in all_points(ops.spec):
        overlap = np.trace(ops(L @ alpha).conj().T @ U @ ops(alpha) @ U.conj().T)
        worst = max(worst, N - abs(overlap))
    return worst


def unitary_for_linear(
    L: LinearMap,
    pair: BasisPair,
    method: Optional[str] = None,
    ops: Optional[WeylOperators] = None,
) -> np.ndarray:
    if L.spec != pair.spec:
        raise FieldMismatchError("linear map and basis pair from different fields")
    L.require_unit_det()
    if method is None:
        method = "word" if pair.r == 2 else "solve"
    ops = ops or WeylOperators(pair)
    if method == "solve":
        U = _solve_unitary(L, pair, ops)
    elif method == "word":
        U = _word_unitary(L, pair)
    else:
        raise MalformedInputError(f"unknown method {method!r}, use one of {UNITARY_METHODS}")
    residual = covariance_residual(U, L, ops)
    if residual > NUMERIC_TOL:
        raise ConjugationError(f"U_L fails covariance for {L!r} by {residual:.3g}")
    return U


def w_change_map(L: LinearMap, w_from: FieldElement, w_to: FieldElement) -> LinearMap:
    """
    K L K^-1 with K = diag(1, w_from / w_to). U_L for the pair with w_to is
    U_(K L K^-1) for the pair with w_from, the E basis being shared.
    """
    K = LinearMap.diagonal(w_from.spec.one, w_from / w_to)
    return K @ L @ K.inverse()


@dataclass
class ChoiceAction:
    """
    Ray-choice action of one L, Q'(lambda) = U_L^+ Q(L lambda) U_L: the new
    label of striation i is ``perms[i][labels[sources[i]]]`` (label indices).
    """

    linear: LinearMap
    sources: np.ndarray
    perms: np.ndarray

    def apply_key(self, key) -> Tuple[int, ...]:
        key = np.asarray(key)
        return tuple(int(x) for x in self.perms[np.arange(len(self.sources)), key[self.sources]])

    def apply(self, choice: RayChoice) -> RayChoice:
        spec = choice.spec
        return RayChoice(tuple(spec.element(i) for i in self.apply_key(choice.key)))


def exact_label(basis, v: np.ndarray, tol: float = NUMERIC_TOL) -> int:
    """Index of the basis vector equal to v up to phase."""
    overlaps = np.abs(basis.vectors.conj() @ v)
    k = int(np.argmax(overlaps))
    if abs(overlaps[k] - 1) > tol ** 0.5:
        raise ConjugationError(
            f"state is not a vector of the {basis.striation} basis (overlap {overlaps[k]:.3g})"
        )
    return basis.labels[k].index


def choice_action(L: LinearMap, family: MubFamily, U: Optional[np.ndarray] = None) -> ChoiceAction:
    pair = family.pair
    if U is None:
        U = unitary_for_linear(L, pair)
    spec = pair.spec
    sources, perms = [], []
    for S in striations(spec):
        src = striation_index(L @ S.direction)
        sources.append(src)
        basis = family.bases[src]
        perms.append(
            [exact_label(family.bases[S.index], U.conj().T @ basis.vector(t)) for t in spec.elements()]
        )
    return ChoiceAction(L, np.array(sources), np.array(perms, dtype=np.int64))


def generator_actions(family: MubFamily) -> List[ChoiceAction]:
    """Actions of L1, L2, L3, which generate SL(2, F_N)."""
    spec = family.pair.spec
    gens = generator_matrices(spec, generator_z(spec))
    return [choice_action(gens[name], family) for name in ("L1", "L2", "L3")]
