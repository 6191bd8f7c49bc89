#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np
from fvcore.common.registry import Registry
from wignerff.field.gf import FieldElement, FieldSpec, format_element, parse_element
from wignerff.geometry.phase_space import Line, PhasePoint, all_points, striation_of, striations
from wignerff.nets.mub import MubFamily, mub_family
from wignerff.operators.weyl import BasisPair, WeylOperators
from wignerff.utils.errors import (
    EnumerationCapExceeded,
    FieldMismatchError,
    MalformedInputError,
)
from wignerff.utils.misc import ALGEBRAIC_TOL


logger = logging.getLogger(__name__)

# largest N whose ray choices are enumerated
DEFAULT_ENUMERATION_CAP = 5

# named net constructions: builder(cfg) -> QuantumNet. "choice" lives in
# wignerff.nets.io, the special and tensor-product ones in wignerff.classify
NET_BUILDER_REGISTRY = Registry("NET_BUILDER")


@dataclass(frozen=True)
class RayChoice:
    """labels[i] selects the basis vector given to the ray of striation i."""

    labels: Tuple[FieldElement, ...]

    def __post_init__(self):
        if not self.labels:
            raise MalformedInputError("empty ray choice")
        spec = self.labels[0].spec
        if any(t.spec != spec for t in self.labels):
            raise FieldMismatchError("ray choice labels from different fields")
        if len(self.labels) != spec.N + 1:
            raise MalformedInputError(
                f"a ray choice over F_{spec.N} has {spec.N + 1} labels, got {len(self.labels)}"
            )

    @classmethod
    def zero(cls, spec: FieldSpec) -> "RayChoice":
        return cls(tuple(spec.zero for _ in range(spec.N + 1)))

    @classmethod
    def parse(cls, spec: FieldSpec, labels: Sequence) -> "RayChoice":
        return cls(tuple(parse_element(spec, t) for t in labels))

    @property
    def spec(self) -> FieldSpec:
        return self.labels[0].spec

    @property
    def key(self) -> Tuple[int, ...]:
        return tuple(t.index for t in self.labels)

    def __getitem__(self, i: int) -> FieldElement:
        return self.labels[i]

    def __iter__(self):
        return iter(self.labels)

    def __lt__(self, other: "RayChoice") -> bool:
        return self.key < other.key

    def to_strings(self):
        return [format_element(t) for t in self.labels]

    def __str__(self):
        return "(" + ", ".join(self.to_strings()) + ")"


def translate_choice(choice: RayChoice, alpha: PhasePoint) -> RayChoice:
    """Labels of the net lambda -> Q(T_alpha lambda): each shifts by the offset of alpha."""
    if alpha.spec != choice.spec:
        raise FieldMismatchError("translation and choice from different fields")
    return RayChoice(
        tuple(t + S.offset(alpha) for t, S in zip(choice, striations(choice.spec)))
    )


def representative(choice: RayChoice) -> RayChoice:
    """The translate with vertical and horizontal labels equal to 0."""
    return translate_choice(choice, PhasePoint(-choice[0], -choice[1]))


def enumerate_choices(
    spec: FieldSpec, representatives: bool = False, max_order: Optional[int] = None
) -> Iterator[RayChoice]:
    """
    All N^(N+1) ray choices, or with ``representatives`` the N^(N-1) choices
    with the first two labels 0 (one per equivalence class), in ascending
    order of label indices.
    """
    cap = DEFAULT_ENUMERATION_CAP if max_order is None else max_order
    if spec.N > cap:
        raise EnumerationCapExceeded(f"N={spec.N} exceeds the enumeration cap {cap}")
    elems = spec.elements()
    if representatives:
        head = (spec.zero, spec.zero)
        for tail in itertools.product(elems, repeat=spec.N - 1):
            yield RayChoice(head + tail)
    else:
        for labels in itertools.product(elems, repeat=spec.N + 1):
            yield RayChoice(labels)


class QuantumNet(object):
    """
    A translation covariant assignment of pure states to the N(N+1) lines.
    ``states[i, t]`` is the state on the line of striation i with offset t.
    """

    def __init__(
        self,
        pair: BasisPair,
        choice: RayChoice,
        family: MubFamily,
        ops: Optional[WeylOperators] = None,
    ):
        self.pair = pair
        self.choice = choice
        self.family = family
        self.ops = ops or WeylOperators(pair)
        spec = pair.spec
        states = np.zeros((spec.N + 1, spec.N, spec.N), dtype=complex)
        for S, basis, c in zip(striations(spec), family.bases, choice):
            for t in spec.elements():
                states[S.index, t.index] = basis.vector(c + t)
        self.states = states
        self.projectors = np.einsum("ltk,ltj->ltkj", states, states.conj())

    @property
    def spec(self) -> FieldSpec:
        return self.pair.spec

    @property
    def dim(self) -> int:
        return self.pair.dim

    def _slot(self, line: Line) -> Tuple[int, int]:
        if line.spec != self.spec:
            raise FieldMismatchError("line does not belong to this net's phase space")
        S = striation_of(line)
        return S.index, S.offset(line.points[0]).index

    def state(self, line: Line) -> np.ndarray:
        return self.states[self._slot(line)]

    def projector(self, line: Line) -> np.ndarray:
        return self.projectors[self._slot(line)]

    def check_invariants(self, tol: float = 1e-9):
        """Raises AssertionError naming the first violated net property."""
        spec, N = self.spec, self.dim
        eye = np.eye(N)
        for i, S in enumerate(striations(spec)):
            Qs = self.projectors[i]
            for Q in Qs:
                assert np.max(np.abs(Q - Q.conj().T)) < tol, "projector not Hermitian"
                assert np.max(np.abs(Q @ Q - Q)) < tol, "projector not idempotent"
                assert abs(np.trace(Q) - 1) < tol, "projector not rank 1"
            assert np.max(np.abs(Qs.sum(axis=0) - eye)) < tol, (
                f"striation {i} does not resolve the identity"
            )
            for alpha in all_points(spec):
                T = self.ops(alpha)
                shift = S.offset(alpha)
                for t in spec.elements():
                    moved = self.projectors[i, (t + shift).index]
                    err = np.max(np.abs(T @ Qs[t.index] @ T.conj().T - moved))
                    assert err < tol, f"covariance fails on striation {i} by {err:.3g}"

    def __repr__(self):
        return f"QuantumNet(F_{self.spec.N}, choice={self.choice}, w={self.pair.w})"


def build_net(
    pair: BasisPair, choice: RayChoice, family: Optional[MubFamily] = None
) -> QuantumNet:
    if choice.spec != pair.spec:
        raise FieldMismatchError("ray choice and basis pair from different fields")
    if family is None:
        family = mub_family(pair.spec, pair)
    return QuantumNet(pair, choice, family)


def translate_net(net: QuantumNet, alpha: PhasePoint) -> QuantumNet:
    """The net lambda -> Q(T_alpha lambda)."""
    return QuantumNet(net.pair, translate_choice(net.choice, alpha), net.family, net.ops)


def nets_equal(net1: QuantumNet, net2: QuantumNet, tol: float = ALGEBRAIC_TOL) -> bool:
    return net1.projectors.shape == net2.projectors.shape and bool(
        np.max(np.abs(net1.projectors - net2.projectors)) < tol
    )


def choice_from_states(family: MubFamily, ray_states: Sequence[np.ndarray]) -> RayChoice:
    """Ray choice whose ray states best match the given vectors, striation by striation."""
    return RayChoice(
        tuple(basis.label_of(v) for basis, v in zip(family.bases, ray_states))
    )

