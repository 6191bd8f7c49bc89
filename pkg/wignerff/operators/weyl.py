#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

"""
Generalized Pauli operators on n qudits of dimension r.

With a basis pair (E, F) for the two phase-space axes, the translation by
alpha = (q, p) is

    T_alpha = (X^{x_1} Z^{y_1}) (x) ... (x) (X^{x_n} Z^{y_n})

where x = expand(q, E), y = expand(p, F) and particle 1 is the leftmost
tensor factor. These satisfy

    T_alpha T_beta = eta^{y_alpha . x_beta} T_{alpha + beta}
    T_alpha T_beta T_alpha^+ T_beta^+ = eta^{y_alpha . x_beta - x_alpha . y_beta}

with eta = exp(2 pi i / r) and exponents reduced mod r before lifting.
"""

import functools
import logging
from typing import Dict, List, Optional, Tuple

import numpy as np
from wignerff.field.basis import FieldBasis, dual_basis, expand, polynomial_basis
from wignerff.field.gf import FieldElement, FieldSpec
from wignerff.geometry.phase_space import PhasePoint, all_points, striations
from wignerff.utils.errors import FieldMismatchError, NoSuchW

logger = logging.getLogger(__name__)


def eta_power(r: int, k: int) -> complex:
    """eta^k with k reduced mod r first."""
    return np.exp(2j * np.pi * (int(k) % r) / r)


@functools.lru_cache(maxsize=None)
def shift_clock(r: int) -> Tuple[np.ndarray, np.ndarray]:
    """X |k> = |k + 1>, Z |k> = eta^k |k>."""
    X = np.roll(np.eye(r, dtype=complex), 1, axis=0)
    Z = np.diag([eta_power(r, k) for k in range(r)])
    X.setflags(write=False)
    Z.setflags(write=False)
    return X, Z


def validate_basis_pair(E: FieldBasis, F: FieldBasis) -> FieldElement:
    """
    Returns the w with f_i = w * dual(E)_i for every i. Raises NoSuchW if
    there is none; such a pair has non-commuting parallel translations.
    """
    if E.spec != F.spec:
        raise FieldMismatchError("the two bases belong to different fields")
    dual = dual_basis(E)
    w = F[0] / dual[0]
    if w.is_zero() or any(f != w * d for f, d in zip(F, dual)):
        raise NoSuchW(f"no w relates {E} and {F}")
    return w


class BasisPair(object):
    """Field bases E (horizontal axis) and F (vertical axis) with F = w * dual(E)."""

    def __init__(self, E: FieldBasis, F: FieldBasis):
        self.w = validate_basis_pair(E, F)
        self.E = E
        self.F = F
        spec = E.spec
        # coordinates of every field element in E and in F, row = element index
        self.q_coords = np.array([expand(x, E) for x in spec.elements()], dtype=np.int64)
        self.p_coords = np.array([expand(x, F) for x in spec.elements()], dtype=np.int64)

    @classmethod
    def from_w(cls, E: FieldBasis, w: FieldElement) -> "BasisPair":
        return cls(E, dual_basis(E).scaled(w))

    @classmethod
    def default(cls, spec: FieldSpec, w: Optional[FieldElement] = None) -> "BasisPair":
        """Polynomial basis for E, F = w * dual(E), w = 1 unless given."""
        return cls.from_w(polynomial_basis(spec), spec.one if w is None else w)

    @property
    def spec(self) -> FieldSpec:
        return self.E.spec

    @property
    def r(self) -> int:
        return self.spec.r

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def dim(self) -> int:
        return self.spec.N

    def exponents(self, alpha: PhasePoint) -> Tuple[np.ndarray, np.ndarray]:
        if alpha.spec != self.spec:
            raise FieldMismatchError("point and basis pair from different fields")
        return self.q_coords[alpha.q.index], self.p_coords[alpha.p.index]

    def __eq__(self, other):
        return isinstance(other, BasisPair) and (self.E, self.F) == (other.E, other.F)

    def __hash__(self):
        return hash((self.E, self.F))

    def __repr__(self):
        return f"BasisPair(E={self.E}, F={self.F}, w={self.w})"


def _qudit_operator(x: np.ndarray, y: np.ndarray, r: int) -> np.ndarray:
    X, Z = shift_clock(r)
    out = np.ones((1, 1), dtype=complex)
    for xi, yi in zip(x, y):
        factor = np.linalg.matrix_power(X, int(xi)) @ np.linalg.matrix_power(Z, int(yi))
        out = np.kron(out, factor)
    return out


def translation_operator(alpha: PhasePoint, pair: BasisPair) -> np.ndarray:
    x, y = pair.exponents(alpha)
    return _qudit_operator(x, y, pair.r)


def commutation_exponent(alpha: PhasePoint, beta: PhasePoint, pair: BasisPair) -> int:
    xa, ya = pair.exponents(alpha)
    xb, yb = pair.exponents(beta)
    return int(np.dot(ya, xb) - np.dot(xa, yb)) % pair.r


def commutation_phase(alpha: PhasePoint, beta: PhasePoint, pair: BasisPair) -> complex:
    """The scalar c with T_alpha T_beta T_alpha^+ T_beta^+ = c I."""
    return eta_power(pair.r, commutation_exponent(alpha, beta, pair))


def symplectic_exponent(alpha: PhasePoint, beta: PhasePoint, w: FieldElement) -> int:
    """tr[(p_alpha q_beta - q_alpha p_beta) / w] as an integer in [0, r)."""
    return ((alpha.p * beta.q - alpha.q * beta.p) / w).trace().index


def product_exponent(alpha: PhasePoint, beta: PhasePoint, pair: BasisPair) -> int:
    """k with T_alpha T_beta = eta^k T_{alpha + beta}."""
    _, ya = pair.exponents(alpha)
    xb, _ = pair.exponents(beta)
    return int(np.dot(ya, xb)) % pair.r


class WeylOperators(object):
    """
    Lazily built translation operators of one basis pair. Points are indexed
    as q.index * N + p.index wherever the whole family is stacked.
    """

    def __init__(self, pair: BasisPair):
        self.pair = pair
        self._cache: Dict[Tuple[int, int], np.ndarray] = {}

    @property
    def spec(self) -> FieldSpec:
        return self.pair.spec

    def __call__(self, alpha: PhasePoint) -> np.ndarray:
        key = alpha.index
        if key not in self._cache:
            T = translation_operator(alpha, self.pair)
            T.setflags(write=False)
            self._cache[key] = T
        return self._cache[key]

    def stacked(self) -> np.ndarray:
        return np.stack([self(alpha) for alpha in all_points(self.spec)])

    def generators(self) -> Tuple[List[np.ndarray], List[np.ndarray]]:
        """(X_i = T_(e_i, 0), Z_i = T_(0, f_i)) for i = 1..n."""
        zero = self.spec.zero
        xs = [self(PhasePoint(e, zero)) for e in self.pair.E]
        zs = [self(PhasePoint(zero, f)) for f in self.pair.F]
        return xs, zs


def _raw_commutator_exponent(
    alpha: PhasePoint, beta: PhasePoint, E: FieldBasis, F: FieldBasis
) -> int:
    r = E.spec.r
    xa, ya = np.array(expand(alpha.q, E)), np.array(expand(alpha.p, F))
    xb, yb = np.array(expand(beta.q, E)), np.array(expand(beta.p, F))
    return int(np.dot(ya, xb) - np.dot(xa, yb)) % r


def parallel_translations_commute(E: FieldBasis, F: FieldBasis) -> bool:
    """
    Whether T_(s d) and T_(t d) commute for every direction d and all s, t,
    with T built from (E, F) directly. Holds exactly for pairs accepted by
    validate_basis_pair.
    """
    spec = E.spec
    for s in striations(spec):
        d = s.direction
        for a in spec.elements():
            for b in spec.elements():
                if _raw_commutator_exponent(d.scale(a), d.scale(b), E, F):
                    logger.debug(f"translations along {d} do not commute for {E}, {F}")
                    return False
    return True
