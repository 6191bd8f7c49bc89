#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

"""
Reconstruction of the Wigner function from measured line probabilities:

    W_alpha = (1/N) [ sum_{lines through alpha} P(line) - 1 ]

Probabilities are an (N + 1) x N array indexed [striation, offset].
"""

import json
import logging

import numpy as np
from fvcore.common.file_io import PathManager
from wignerff.nets.net import QuantumNet
from wignerff.utils.errors import DimensionMismatch, InconsistentProbabilities, MalformedInputError
from wignerff.utils.misc import PROBABILITY_TOL
from wignerff.wigner.transform import WignerMap, offset_table


logger = logging.getLogger(__name__)


def probability_deviation(P: np.ndarray) -> float:
    """Largest deviation of a striation total from 1."""
    return float(np.max(np.abs(P.sum(axis=1) - 1)))


def tomographic_reconstruct(
    P: np.ndarray, net: QuantumNet, normalize: bool = False, tol: float = PROBABILITY_TOL
) -> WignerMap:
    spec, N = net.spec, net.dim
    P = np.asarray(P, dtype=float)
    if P.shape != (N + 1, N):
        raise DimensionMismatch(f"probabilities have shape {P.shape}, expected ({N + 1}, {N})")
    if np.any(P < -tol):
        raise InconsistentProbabilities("negative line probability")
    deviation = probability_deviation(P)
    if deviation > tol:
        if not normalize:
            raise InconsistentProbabilities(
                f"striation totals deviate from 1 by {deviation:.3g}"
            )
        totals = P.sum(axis=1, keepdims=True)
        empty = np.flatnonzero(totals[:, 0] <= tol)
        if empty.size:
            raise InconsistentProbabilities(
                f"cannot renormalize striations {empty.tolist()} with zero total"
            )
        logger.warning(f"Renormalizing striations, totals deviated by {deviation:.3g}")
        P = P / totals
    offsets = offset_table(spec)
    # sum over striations of P[i, offset of the line of i through (q, p)]
    through = sum(P[i][offsets[i]] for i in range(N + 1))
    return WignerMap(spec, (through - 1) / N, deviation)


def load_probabilities(path: str) -> np.ndarray:
    """JSON {"probabilities": [[...], ...]}, one row per striation."""
    with PathManager.open(path, "r") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise MalformedInputError(f"{path} is not valid JSON: {e}")
    try:
        return np.asarray(data["probabilities"], dtype=float)
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedInputError(f"invalid probabilities in {path}: {e}")
