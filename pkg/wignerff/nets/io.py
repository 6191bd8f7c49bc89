#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

"""
Net files and config-driven construction. A net file is JSON of the form

    {"field": {"r": 2, "n": 2},
     "pair": {"E": ["w", "1"], "F": ["w", "1"]},
     "choice": ["0", "0", "0", "0", "0"]}

Projectors are always rebuilt, never stored.
"""

import json
import logging
from typing import Any, Dict

from fvcore.common.file_io import PathManager
from wignerff.field.basis import FieldBasis, polynomial_basis
from wignerff.field.gf import FieldSpec, format_element, make_field, parse_element
from wignerff.nets.net import NET_BUILDER_REGISTRY, QuantumNet, RayChoice, build_net
from wignerff.operators.weyl import BasisPair
from wignerff.utils.errors import MalformedInputError

logger = logging.getLogger(__name__)


def pair_to_dict(pair: BasisPair) -> Dict[str, Any]:
    return {
        "E": [format_element(e) for e in pair.E],
        "F": [format_element(f) for f in pair.F],
    }


def pair_from_dict(spec: FieldSpec, data: Dict[str, Any]) -> BasisPair:
    try:
        E = FieldBasis(parse_element(spec, x) for x in data["E"])
        if data.get("F"):
            return BasisPair(E, FieldBasis(parse_element(spec, x) for x in data["F"]))
        return BasisPair.from_w(E, parse_element(spec, data.get("w", "1")))
    except (KeyError, TypeError) as e:
        raise MalformedInputError(f"invalid basis pair {data!r}: {e}")


def net_to_dict(net: QuantumNet) -> Dict[str, Any]:
    spec = net.spec
    return {
        "field": {"r": spec.r, "n": spec.n},
        "pair": pair_to_dict(net.pair),
        "choice": net.choice.to_strings(),
    }


def net_from_dict(data: Dict[str, Any], max_order=None) -> QuantumNet:
    try:
        field = data["field"]
        spec = make_field(int(field["r"]), int(field.get("n", 1)), max_order=max_order)
        pair = pair_from_dict(spec, data["pair"])
        choice = (
            RayChoice.parse(spec, data["choice"])
            if data.get("choice")
            else RayChoice.zero(spec)
        )
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedInputError(f"invalid net description: {e}")
    return build_net(pair, choice)


def dump_net(net: QuantumNet, path: str):
    with PathManager.open(path, "w") as f:
        json.dump(net_to_dict(net), f, indent=2)
    logger.info(f"Wrote net {net.choice} to {path}")


def load_net(path: str, max_order=None) -> QuantumNet:
    with PathManager.open(path, "r") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise MalformedInputError(f"{path} is not valid JSON: {e}")
    return net_from_dict(data, max_order=max_order)


def field_from_cfg(cfg) -> FieldSpec:
    # MAX_ORDER 0 defers to WIGNERFF_CAP
    return make_field(cfg.FIELD.R, cfg.FIELD.N, max_order=cfg.FIELD.MAX_ORDER or None)


def pair_from_cfg(cfg) -> BasisPair:
    """
    PAIR.E empty means the polynomial basis; PAIR.F empty means
    F = PAIR.W * dual(E).
    """
    spec = field_from_cfg(cfg)
    if cfg.PAIR.E:
        E = FieldBasis(parse_element(spec, x) for x in cfg.PAIR.E)
    else:
        E = polynomial_basis(spec)
    if cfg.PAIR.F:
        return BasisPair(E, FieldBasis(parse_element(spec, x) for x in cfg.PAIR.F))
    return BasisPair.from_w(E, parse_element(spec, cfg.PAIR.W or "1"))


def build_net_from_choice(cfg) -> QuantumNet:
    pair = pair_from_cfg(cfg)
    if cfg.NET.CHOICE:
        choice = RayChoice.parse(pair.spec, cfg.NET.CHOICE)
    else:
        choice = RayChoice.zero(pair.spec)
    return build_net(pair, choice)


NET_BUILDER_REGISTRY._do_register("choice", build_net_from_choice)


def net_from_cfg(cfg) -> QuantumNet:
    # registers the special and tensor-product builders
    import wignerff.classify  # noqa

    name = cfg.NET.BUILDER
    try:
        builder = NET_BUILDER_REGISTRY.get(name)
    except KeyError:
        raise MalformedInputError(f"unknown net builder {name!r}")
    net = builder(cfg)
    logger.info(f"Built {net!r} with builder {name!r}")
    return net


def add_net_default_configs(_C):
    from wignerff.config import CfgNode as CN

    _C.FIELD = CN()
    _C.FIELD.R = 2
    _C.FIELD.N = 2
    # 0 defers to WIGNERFF_CAP, then to the built-in cap
    _C.FIELD.MAX_ORDER = 0

    _C.PAIR = CN()
    # element strings; empty E is the polynomial basis, empty F is W * dual(E)
    _C.PAIR.E = []
    _C.PAIR.F = []
    _C.PAIR.W = ""

    _C.NET = CN()
    _C.NET.BUILDER = "choice"
    # labels per striation; empty means all zero
    _C.NET.CHOICE = []
