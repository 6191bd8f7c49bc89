#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

"""
Qubit gates realizing the symplectic generators L1, L2, L3 when E = F.
Qubit 0 is the leftmost tensor factor; a basis index k = (k_0, ..., k_{n-1})
is sum_i k_i r^(n-1-i).
"""

import functools
from typing import Sequence

import numpy as np
from wignerff.utils.errors import MalformedInputError


def _kron_all(factor: np.ndarray, n: int) -> np.ndarray:
    return functools.reduce(np.kron, [factor] * n, np.ones((1, 1), dtype=complex))


def quarter_turn_z(n: int) -> np.ndarray:
    """diag(1, i) on every qubit."""
    return _kron_all(np.diag([1.0, 1j]), n)


def quarter_turn_x(n: int) -> np.ndarray:
    """(1/sqrt 2) [[1, i], [i, 1]] on every qubit."""
    return _kron_all(np.array([[1.0, 1j], [1j, 1.0]]) / np.sqrt(2), n)


def digits_of(index: int, r: int, n: int) -> np.ndarray:
    return np.array([(index // r ** (n - 1 - i)) % r for i in range(n)], dtype=np.int64)


def index_of(digits: Sequence[int], r: int) -> int:
    n = len(digits)
    return int(sum(int(d) * r ** (n - 1 - i) for i, d in enumerate(digits)))


def basis_permutation(M: np.ndarray, r: int) -> np.ndarray:
    """The permutation |k> -> |M k mod r> for an invertible n x n matrix M."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[0]
    dim = r ** n
    P = np.zeros((dim, dim), dtype=complex)
    for k in range(dim):
        P[index_of(M.dot(digits_of(k, r, n)) % r, r), k] = 1
    assert np.allclose(P.sum(axis=0), 1) and np.allclose(P.sum(axis=1), 1), (
        "matrix is not invertible mod {}".format(r)
    )
    return P


def swap_gate(n: int, i: int, j: int) -> np.ndarray:
    M = np.eye(n, dtype=np.int64)
    M[[i, j]] = M[[j, i]]
    return basis_permutation(M, 2)


def cnot_gate(n: int, control: int, target: int) -> np.ndarray:
    M = np.eye(n, dtype=np.int64)
    M[target, control] = 1
    return basis_permutation(M, 2)


def swap_cnot_circuit(n: int, a: Sequence[int]) -> np.ndarray:
    """
    Multiplication by z in the power basis (1, z, ..., z^(n-1)) where
    z^n = sum_j a_j z^j: a chain of SWAPs moving qubit n-1 to the front, then
    a CNOT from qubit 0 onto every qubit j >= 1 with a_j = 1.
    """
    a = [int(x) % 2 for x in a]
    if len(a) != n or a[0] != 1:
        raise MalformedInputError(f"need n={n} coefficients with a_0 = 1, got {a}")
    U = np.eye(2 ** n, dtype=complex)
    for k in range(n - 1, 0, -1):
        U = swap_gate(n, k - 1, k) @ U
    for j in range(1, n):
        if a[j]:
            U = cnot_gate(n, 0, j) @ U
    return U
