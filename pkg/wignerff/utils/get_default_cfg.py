#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved
from wignerff.config import CfgNode as CN
from wignerff.nets.io import add_net_default_configs
from wignerff.utils.misc import ALGEBRAIC_TOL, NUMERIC_TOL, PROBABILITY_TOL


def add_tolerance_default_configs(_C):
    _C.TOLERANCE = CN()
    # exact identities (unitarity, projector algebra)
    _C.TOLERANCE.ALGEBRAIC = ALGEBRAIC_TOL
    # results of eigen-solvers and least squares
    _C.TOLERANCE.NUMERIC = NUMERIC_TOL
    # consistency of measured probabilities
    _C.TOLERANCE.PROBABILITY = PROBABILITY_TOL


def add_classify_default_configs(_C):
    _C.CLASSIFY = CN()
    # largest N for which ray choices are enumerated
    _C.CLASSIFY.MAX_ORDER = 5
    _C.CLASSIFY.NUM_WORKERS = 1
    _C.CLASSIFY.BURNSIDE = True


def add_output_default_configs(_C):
    _C.OUTPUT = CN()
    _C.OUTPUT.SIGNIFICANT_DIGITS = 12
    _C.OUTPUT_DIR = ""


def get_default_cfg():
    _C = CN()
    # _C.FIELD, _C.PAIR, _C.NET
    add_net_default_configs(_C)
    # _C.TOLERANCE
    add_tolerance_default_configs(_C)
    # _C.CLASSIFY
    add_classify_default_configs(_C)
    # _C.OUTPUT, _C.OUTPUT_DIR
    add_output_default_configs(_C)
    return _C
