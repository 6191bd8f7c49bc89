#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


import functools
import json
import logging
from typing import List, Optional, Sequence

import numpy as np
from fvcore.common.file_io import PathManager
from wignerff.utils.errors import InvalidStateError, MalformedInputError
from wignerff.utils.misc import ALGEBRAIC_TOL, complex_from_json, rank1_projector


logger = logging.getLogger(__name__)

_SQRT_HALF = np.sqrt(0.5)

# single-qubit states, "up" = |0>
SPIN_STATES = {
    "up": np.array([1.0, 0.0], dtype=complex),
    "down": np.array([0.0, 1.0], dtype=complex),
    "right": np.array([_SQRT_HALF, _SQRT_HALF], dtype=complex),
    "left": np.array([_SQRT_HALF, -_SQRT_HALF], dtype=complex),
}


def spin_product(names: Sequence[str]) -> np.ndarray:
    """Pure product state, e.g. ("up", "right") for |up right>."""
    try:
        factors = [SPIN_STATES[name] for name in names]
    except KeyError as e:
        raise InvalidStateError(f"unknown spin state {e}, use one of {sorted(SPIN_STATES)}")
    return functools.reduce(np.kron, factors)


def singlet() -> np.ndarray:
    """(|01> - |10>) / sqrt 2."""
    return _SQRT_HALF * np.array([0, 1, -1, 0], dtype=complex)


def maximally_mixed(N: int) -> np.ndarray:
    return np.eye(N, dtype=complex) / N


def pure_density(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=complex).reshape(-1)
    norm = np.linalg.norm(v)
    if norm == 0:
        raise InvalidStateError("zero state vector")
    return rank1_projector(v / norm)


def random_density_matrices(
    N: int, count: int, seed: Optional[int] = 0, rank: Optional[int] = None
) -> List[np.ndarray]:
    """Ginibre-distributed density matrices G G^+ / Tr(G G^+)."""
    rng = np.random.default_rng(seed)
    rank = rank or N
    out = []
    for _ in range(count):
        G = rng.normal(size=(N, rank)) + 1j * rng.normal(size=(N, rank))
        rho = G @ G.conj().T
        out.append(rho / np.trace(rho).real)
    return out


def validate_density_matrix(rho: np.ndarray, tol: float = ALGEBRAIC_TOL) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise InvalidStateError(f"density matrix must be square, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        raise InvalidStateError("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1) > tol:
        raise InvalidStateError(f"density matrix has trace {np.trace(rho).real:.6g}")
    if np.min(np.linalg.eigvalsh(rho)) < -1e-8:
        raise InvalidStateError("density matrix is not positive semidefinite")
    return rho


NAMED_STATES = {
    "singlet": lambda: pure_density(singlet()),
}


def named_state(name: str, N: int) -> np.ndarray:
    """
    "singlet", "mixed", or spin products written with dashes such as
    "up-right".
    """
    if name == "mixed":
        return maximally_mixed(N)
    if name in NAMED_STATES:
        rho = NAMED_STATES[name]()
    else:
        rho = pure_density(spin_product(name.split("-")))
    if rho.shape[0] != N:
        raise InvalidStateError(f"state {name!r} has dimension {rho.shape[0]}, not {N}")
    return rho


def load_state(path: str, tol: float = ALGEBRAIC_TOL) -> np.ndarray:
    """
    A JSON file with either "amplitudes" (a pure state) or "density" (a
    matrix), entries given as [re, im] pairs.
    """
    with PathManager.open(path, "r") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise MalformedInputError(f"{path} is not valid JSON: {e}")
    try:
        if "amplitudes" in data:
            return pure_density(complex_from_json(data["amplitudes"]))
        if "density" in data:
            return validate_density_matrix(complex_from_json(data["density"]), tol)
    except (ValueError, TypeError) as e:
        raise MalformedInputError(f"invalid state in {path}: {e}")
    raise MalformedInputError(f"{path} has neither 'amplitudes' nor 'density'")
