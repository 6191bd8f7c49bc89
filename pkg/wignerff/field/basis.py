#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

"""
Field bases of F_{r^n} over F_r, dual bases under the trace form, and
coordinate expansions x = sum_i x_i e_i with x_i = tr(x * dual(e)_i).
"""

import logging
from typing import Iterable, Sequence, Tuple

import numpy as np
from wignerff.field.gf import FieldElement, FieldSpec
from wignerff.utils.errors import FieldError, FieldMismatchError


logger = logging.getLogger(__name__)


def rank_mod(mat: np.ndarray, r: int) -> int:
    a = np.array(mat, dtype=np.int64) % r
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, rows) if a[i, col]), None)
        if pivot is None:
            continue
        a[[rank, pivot]] = a[[pivot, rank]]
        a[rank] = (a[rank] * pow(int(a[rank, col]), r - 2, r)) % r
        for i in range(rows):
            if i != rank and a[i, col]:
                a[i] = (a[i] - a[i, col] * a[rank]) % r
        rank += 1
    return rank


def inverse_mod(mat: np.ndarray, r: int) -> np.ndarray:
    """Gauss-Jordan inverse of a square matrix over F_r."""
    a = np.array(mat, dtype=np.int64) % r
    n = a.shape[0]
    aug = np.concatenate([a, np.eye(n, dtype=np.int64)], axis=1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i, col]), None)
        if pivot is None:
            raise FieldError("matrix is singular over F_{}".format(r))
        aug[[col, pivot]] = aug[[pivot, col]]
        aug[col] = (aug[col] * pow(int(aug[col, col]), r - 2, r)) % r
        for i in range(n):
            if i != col and aug[i, col]:
                aug[i] = (aug[i] - aug[i, col] * aug[col]) % r
    return aug[:, n:]


class FieldBasis(object):
    """
    An ordered basis (e_1, ..., e_n) of F_{r^n} over F_r. ``matrix`` holds the
    coefficient vectors of the e_i as rows.
    """

    def __init__(self, elems: Iterable[FieldElement]):
        elems = tuple(elems)
        if not elems:
            raise FieldError("a field basis needs at least one element")
        spec = elems[0].spec
        for e in elems:
            if e.spec != spec:
                raise FieldMismatchError("basis elements from different fields")
        if len(elems) != spec.n:
            raise FieldError(
                f"a basis of F_{spec.N} has {spec.n} elements, got {len(elems)}"
            )
        matrix = np.array([e.coeffs for e in elems], dtype=np.int64)
        if rank_mod(matrix, spec.r) != spec.n:
            raise FieldError(
                "elements {} are linearly dependent over F_{}".format(
                    [str(e) for e in elems], spec.r
                )
            )
        self.spec = spec
        self.elems = elems
        self.matrix = matrix
        self._dual = None

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __getitem__(self, i):
        return self.elems[i]

    def __eq__(self, other):
        return isinstance(other, FieldBasis) and self.elems == other.elems

    def __hash__(self):
        return hash(self.elems)

    def __repr__(self):
        return "FieldBasis({})".format(", ".join(str(e) for e in self.elems))

    def scaled(self, w: FieldElement) -> "FieldBasis":
        return FieldBasis(w * e for e in self.elems)


def _trace_gram(E: FieldBasis) -> np.ndarray:
    """G[i, k] = tr(e_i x^k) as residues mod r."""
    spec = E.spec
    monomials = [spec.element(spec.r ** k) for k in range(spec.n)]
    return np.array(
        [[(e * m).trace().index for m in monomials] for e in E], dtype=np.int64
    )


def dual_basis(E: FieldBasis) -> FieldBasis:
    """
    The unique basis with tr(e_i * dual_j) = delta_ij, obtained by solving the
    n^2 linear trace equations over F_r.
    """
    if E._dual is None:
        spec = E.spec
        coeffs = inverse_mod(_trace_gram(E), spec.r).T
        dual = FieldBasis(spec.from_coeffs(row) for row in coeffs)
        for i, e in enumerate(E):
            for j, d in enumerate(dual):
                assert (e * d).trace().index == (i == j), "dual basis check failed"
        E._dual = dual
    return E._dual


def expand(x: FieldElement, E: FieldBasis) -> Tuple[int, ...]:
    """Coordinates of x in the basis E, each a residue in [0, r)."""
    if x.spec != E.spec:
        raise FieldMismatchError("element and basis from different fields")
    return tuple((x * d).trace().index for d in dual_basis(E))


def reconstruct(coeffs: Sequence[int], E: FieldBasis) -> FieldElement:
    spec = E.spec
    acc = spec.zero
    for c, e in zip(coeffs, E):
        acc = acc + spec.from_prime(c) * e
    return acc


def power_basis(z: FieldElement) -> FieldBasis:
    """(1, z, ..., z^{n-1}); a basis whenever z generates the field over F_r."""
    spec = z.spec
    return FieldBasis(z ** k for k in range(spec.n))


def polynomial_basis(spec: FieldSpec) -> FieldBasis:
    """(1, x, ..., x^{n-1}) for the modulus root x."""
    return FieldBasis(spec.element(spec.r ** k) for k in range(spec.n))


def expansion_matrix(E: FieldBasis, F: FieldBasis) -> np.ndarray:
    """C with expand(q, F) = C @ expand(q, E) (mod r)."""
    spec = E.spec
    cols = [expand(e, F) for e in E]
    return np.array(cols, dtype=np.int64).T % spec.r


def multiplication_matrix(z: FieldElement, E: FieldBasis) -> np.ndarray:
    """M with expand(z * x, E) = M @ expand(x, E) (mod r)."""
    cols = [expand(z * e, E) for e in E]
    return np.array(cols, dtype=np.int64).T % E.spec.r
