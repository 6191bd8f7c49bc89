#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

"""
Distinguished quantum nets: for odd prime N the net whose Gamma is fixed by
every unit-determinant map, and for N = 4 the two nets whose phase-point
operators are tensor products of qubit ones.
"""

import logging
from typing import Optional, Tuple

import numpy as np
from wignerff.classify.gamma import gamma_slice
from wignerff.classify.symplectic import exact_label
from wignerff.field.basis import FieldBasis
from wignerff.field.gf import FieldElement, FieldSpec, is_prime, make_field, parse_element
from wignerff.geometry.phase_space import PhasePoint, all_points, striations
from wignerff.nets.io import field_from_cfg
from wignerff.nets.mub import MubFamily, mub_family, reference_pair
from wignerff.nets.net import (
    NET_BUILDER_REGISTRY,
    QuantumNet,
    RayChoice,
    build_net,
    enumerate_choices,
)
from wignerff.operators.weyl import BasisPair, WeylOperators, eta_power
from wignerff.utils.errors import FieldError, WignerFFError
from wignerff.utils.misc import NUMERIC_TOL
from wignerff.wigner.transform import phase_point_operators


logger = logging.getLogger(__name__)


def _check_odd_prime(spec: FieldSpec):
    if spec.n != 1 or spec.r == 2 or not is_prime(spec.r):
        raise FieldError(f"the special net needs an odd prime N, got F_{spec.N}")


def special_pair(spec: FieldSpec, w: Optional[FieldElement] = None) -> BasisPair:
    """E = (1), F = (w); w defaults to -2 so that Gamma carries eta^-(...)."""
    _check_odd_prime(spec)
    if w is None:
        w = -spec.from_prime(2)
    return BasisPair(FieldBasis([spec.one]), FieldBasis([w]))


def parity_operator(N: int) -> np.ndarray:
    """|k> -> |-k mod N>."""
    P = np.zeros((N, N), dtype=complex)
    for k in range(N):
        P[(-k) % N, k] = 1
    return P


def _choice_from_operators(A: np.ndarray, family: MubFamily) -> RayChoice:
    """
    Ray choice of the net whose phase-point operators are A[q, p]: the state
    on a ray is the top eigenvector of (1/N) sum of A over its points.
    """
    spec = family.pair.spec
    N = spec.N
    labels = []
    for S, basis in zip(striations(spec), family.bases):
        Q = sum(A[x.index] for x in S.ray.points) / N
        evals, evecs = np.linalg.eigh(Q)
        if abs(evals[-1] - 1) > NUMERIC_TOL ** 0.5 or abs(evals[-2]) > NUMERIC_TOL ** 0.5:
            raise WignerFFError(f"line operator of {S} is not a rank-1 projector")
        labels.append(spec.element(exact_label(basis, evecs[:, -1])))
    return RayChoice(tuple(labels))


def _net_from_operators(A: np.ndarray, pair: BasisPair, family: Optional[MubFamily] = None) -> QuantumNet:
    family = family or mub_family(pair.spec, pair)
    net = build_net(pair, _choice_from_operators(A, family), family)
    err = np.max(np.abs(phase_point_operators(net).ops - A))
    if err > NUMERIC_TOL:
        raise WignerFFError(f"rebuilt net differs from the operator family by {err:.3g}")
    return net


def special_net_odd_prime(spec: FieldSpec, w: Optional[FieldElement] = None) -> QuantumNet:
    """The displaced-parity net A_alpha = T_alpha Pi T_alpha^+."""
    pair = special_pair(spec, w)
    ops = WeylOperators(pair)
    Pi = parity_operator(spec.N)
    A = np.zeros((spec.N,) * 4, dtype=complex)
    for alpha in all_points(spec):
        T = ops(alpha)
        A[alpha.index] = T @ Pi @ T.conj().T
    net = _net_from_operators(A, pair)
    logger.info(f"Special net over F_{spec.N}: choice {net.choice}")
    return net


def special_gamma(spec: FieldSpec, factor: FieldElement) -> np.ndarray:
    """
    (1/N) eta^(tr[factor (a^b + b^c + c^a)]) over all point triples, flattened
    like GammaTensor.values. For the special net factor = 2 / w.
    """
    points = all_points(spec)
    M = len(points)
    r = spec.r
    wedge = np.array([[(factor * x.wedge(y)).trace().index for y in points] for x in points])
    exps = wedge[:, :, None] + wedge[None, :, :] + wedge.T[:, None, :]
    # exps[a, b, c] = e(a^b) + e(b^c) + e(c^a)
    return np.array(
        [eta_power(r, int(k)) for k in exps.ravel() % r], dtype=complex
    ).reshape(M, M, M) / spec.N


def search_special_net(spec: FieldSpec, pair: Optional[BasisPair] = None) -> QuantumNet:
    """The representative whose Gamma_{00 gamma} is 1/N everywhere, by exhaustive search."""
    pair = pair or special_pair(spec)
    family = mub_family(spec, pair)
    origin = PhasePoint.origin(spec)
    for choice in enumerate_choices(spec, representatives=True, max_order=spec.N):
        net = build_net(pair, choice, family)
        if np.max(np.abs(gamma_slice(net, origin, origin) - 1.0 / spec.N)) < NUMERIC_TOL:
            return net
    raise WignerFFError(f"no net over F_{spec.N} has a flat Gamma_00")


def tensor_product_nets_n4() -> Tuple[QuantumNet, QuantumNet]:
    """
    Nets for the reference F_4 pair with A_alpha = A2_(x1, y1) (x) conj(A2_(x2, y2))
    and with the factors swapped, where alpha = (x1 w + x2, y1 w + y2) and A2
    belongs to the qubit net with all labels 0.
    """
    f2 = make_field(2)
    qubit_pair = BasisPair.default(f2)
    A2 = phase_point_operators(build_net(qubit_pair, RayChoice.zero(f2))).ops
    pair = reference_pair()
    spec = pair.spec
    family = mub_family(spec, pair)
    nets = []
    for first_conj in (False, True):
        A = np.zeros((4, 4, 4, 4), dtype=complex)
        for alpha in all_points(spec):
            x, y = pair.exponents(alpha)
            left, right = A2[x[0], y[0]], A2[x[1], y[1]]
            if first_conj:
                left = left.conj()
            else:
                right = right.conj()
            A[alpha.index] = np.kron(left, right)
        nets.append(_net_from_operators(A, pair, family))
    return nets[0], nets[1]


def realignment_rank(A: np.ndarray, tol: float = NUMERIC_TOL) -> int:
    """Schmidt rank of a 4 x 4 operator across the two qubits; 1 for a product."""
    R = A.reshape(2, 2, 2, 2).transpose(0, 2, 1, 3).reshape(4, 4)
    return int(np.sum(np.linalg.svd(R, compute_uv=False) > tol))


def build_special_net(cfg) -> QuantumNet:
    spec = field_from_cfg(cfg)
    w = parse_element(spec, cfg.PAIR.W) if cfg.PAIR.W else None
    return special_net_odd_prime(spec, w)


NET_BUILDER_REGISTRY._do_register("special_odd_prime", build_special_net)


def build_tensor_product_net(cfg) -> QuantumNet:
    return tensor_product_nets_n4()[0]


NET_BUILDER_REGISTRY._do_register("tensor_product", build_tensor_product_net)


def build_tensor_product_conjugate_net(cfg) -> QuantumNet:
    return tensor_product_nets_n4()[1]


NET_BUILDER_REGISTRY._do_register("tensor_product_conjugate", build_tensor_product_conjugate_net)
