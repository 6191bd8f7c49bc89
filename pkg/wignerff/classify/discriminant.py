#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

"""
N = 4 with E = F = (w, 1): a ray choice is the label tuple (a, b, c, d, e)
over F_4, and the similarity class of its net is read off from

    D = w (a + b + c) + wbar * v M v^T,   v = (a, b, c, d, e)

with M the strictly upper triangular matrix below. The generators L1, L2,
L3 (z = wbar) act on the labels as affine maps v -> P v + o.
"""

from typing import Sequence, Union

from wignerff.field.gf import FieldElement, make_field, parse_element
from wignerff.geometry.phase_space import PhasePoint
from wignerff.nets.net import RayChoice, translate_choice
from wignerff.utils.errors import FieldMismatchError, MalformedInputError


QUADRATIC_FORM = (
    ("0", "1", "1", "1", "1"),
    ("0", "0", "1", "wbar", "w"),
    ("0", "0", "0", "w", "wbar"),
    ("0", "0", "0", "0", "1"),
    ("0", "0", "0", "0", "0"),
)

# new label i = scale * old label source + offset, per generator
INDEX_TRANSFORMS = {
    "L1": {
        "source": (0, 2, 1, 4, 3),
        "scale": ("1", "1", "1", "1", "1"),
        "offset": ("0", "1", "w", "wbar", "0"),
    },
    "L2": {
        "source": (2, 1, 0, 4, 3),
        "scale": ("1", "1", "1", "1", "1"),
        "offset": ("1", "0", "w", "0", "w"),
    },
    "L3": {
        "source": (0, 1, 4, 2, 3),
        "scale": ("w", "wbar", "wbar", "wbar", "wbar"),
        "offset": ("0", "0", "wbar", "w", "0"),
    },
}


def _f4():
    return make_field(2, 2)


def _check(choice: RayChoice):
    if choice.spec != _f4():
        raise FieldMismatchError(f"the discriminant is defined over F_4, got F_{choice.spec.N}")


def discriminant_D(choice: Union[RayChoice, Sequence]) -> FieldElement:
    if not isinstance(choice, RayChoice):
        choice = RayChoice.parse(_f4(), choice)
    _check(choice)
    spec = choice.spec
    w, wbar = parse_element(spec, "w"), parse_element(spec, "wbar")
    v = choice.labels
    quad = spec.zero
    for i, row in enumerate(QUADRATIC_FORM):
        for j, m in enumerate(row):
            if m != "0":
                quad = quad + parse_element(spec, m) * v[i] * v[j]
    return w * (v[0] + v[1] + v[2]) + wbar * quad


def index_transform(g: Union[str, PhasePoint], choice: RayChoice) -> RayChoice:
    """Labels after one of "L1", "L2", "L3", or after a translation by a point."""
    _check(choice)
    if isinstance(g, PhasePoint):
        return translate_choice(choice, g)
    if g not in INDEX_TRANSFORMS:
        raise MalformedInputError(f"unknown generator {g!r}, use L1, L2, L3 or a point")
    spec = choice.spec
    t = INDEX_TRANSFORMS[g]
    return RayChoice(
        tuple(
            parse_element(spec, s) * choice[src] + parse_element(spec, o)
            for src, s, o in zip(t["source"], t["scale"], t["offset"])
        )
    )
