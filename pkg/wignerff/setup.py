#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


import argparse
import logging
import os
import platform
import re
import sys

import numpy as np
from fvcore.common.file_io import PathManager
from tabulate import tabulate
from wignerff.config import get_cfg_diff_table, temp_defrost
from wignerff.utils.get_default_cfg import get_default_cfg
from wignerff.utils.errors import MalformedInputError
from wignerff.utils.helper import reroute_config_path, run_once
from wignerff.utils.logger import setup_logger


logger = logging.getLogger(__name__)


def basic_argument_parser(
    description: str = "Discrete Wigner functions over finite fields", add_help: bool = True
):
    """ Basic cli tool parser for wignerff subcommands """
    parser = argparse.ArgumentParser(description=description, add_help=add_help)
    parser.add_argument(
        "--config-file",
        help="path to config file, or a preset such as wignerff://paper-n4.yaml",
        default="",
        metavar="FILE",
    )
    parser.add_argument(
        "--output-dir",
        help="When given, this will override the OUTPUT_DIR in the config-file",
        default=None,
        type=str,
    )
    parser.add_argument(
        "--field",
        help="field as r,n or r^n (e.g. 2^2 for F_4), overrides FIELD.R and FIELD.N",
        default=None,
        type=str,
    )
    parser.add_argument(
        "--tol",
        help="overrides TOLERANCE.PROBABILITY, the accepted deviation of striation totals",
        default=None,
        type=float,
    )
    parser.add_argument("--workers", help="overrides CLASSIFY.NUM_WORKERS", default=None, type=int)
    return parser


def add_opts_argument(parser):
    parser.add_argument(
        "opts",
        help="Modify config options using the command-line",
        default=None,
        nargs=argparse.REMAINDER,
    )


def _flag_opts(args):
    opts = []
    if getattr(args, "field", None):
        try:
            r, n = (int(x) for x in re.split(r"[,^]", args.field))
        except ValueError:
            raise MalformedInputError(f"--field expects r,n or r^n, got {args.field!r}")
        opts += ["FIELD.R", r, "FIELD.N", n]
    if getattr(args, "tol", None) is not None:
        opts += ["TOLERANCE.PROBABILITY", args.tol]
    if getattr(args, "workers", None) is not None:
        opts += ["CLASSIFY.NUM_WORKERS", args.workers]
    return opts


def prepare_for_launch(args):
    """
    Load config and figure out the working directory.
        - when args.config_file is empty, returned cfg will be the default one
        - args.output_dir has higher priority than cfg.OUTPUT_DIR; the
            returned output_dir may be empty, meaning nothing is written
    """
    cfg = get_default_cfg()
    if args.config_file:
        with PathManager.open(reroute_config_path(args.config_file), "r") as f:
            logger.debug("Loaded config file {}:\n{}".format(args.config_file, f.read()))
        cfg.merge_from_file(args.config_file)
    cfg.merge_from_list(_flag_opts(args))
    cfg.merge_from_list(args.opts or [])
    cfg.freeze()

    output_dir = args.output_dir or cfg.OUTPUT_DIR
    return cfg, output_dir


def setup_after_launch(cfg, output_dir):
    """
    Set things up before running a subcommand, including
        - creating working directory
        - setting up logger
        - logging environment
        - dumping the effective config
    """
    if output_dir:
        PathManager.mkdirs(output_dir)
    setup_loggers(output_dir or None)
    if cfg.OUTPUT_DIR != output_dir:
        with temp_defrost(cfg):
            logger.warning(
                "Override cfg.OUTPUT_DIR ({}) to be the same as output_dir {}".format(
                    cfg.OUTPUT_DIR, output_dir
                )
            )
            cfg.OUTPUT_DIR = output_dir
    log_info(cfg)
    if output_dir:
        dump_cfg(cfg, os.path.join(output_dir, "config.yaml"))


@run_once()
def setup_loggers(output_dir, color=None):
    if color is None:
        color = sys.stdout.isatty()

    wignerff_logger = setup_logger(output_dir, color=color, name="wignerff")
    fvcore_logger = setup_logger(output_dir, color=color, name="fvcore")

    # NOTE: the root logger might has been configured by other applications,
    # since this already sub-top level, just don't propagate to root.
    wignerff_logger.propagate = False
    fvcore_logger.propagate = False


def collect_env_info() -> str:
    import fvcore

    import wignerff

    data = [
        ("sys.platform", sys.platform),
        ("Python", sys.version.replace("\n", "")),
        ("machine", platform.machine()),
        ("numpy", np.__version__),
        ("fvcore", getattr(fvcore, "__version__", "unknown")),
        ("wignerff", wignerff.__version__),
    ]
    return tabulate(data)


def log_info(cfg):
    logger.info("Environment info:\n" + collect_env_info())
    diff = get_cfg_diff_table(cfg, get_default_cfg())
    if diff:
        logger.info("Config differs from the defaults in:\n{}".format(diff))
    logger.info("Running with full config:\n{}".format(cfg))


def dump_cfg(cfg, path):
    with PathManager.open(path, "w") as f:
        f.write(cfg.dump())
    logger.info("Full config saved to {}".format(path))
