#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


import functools
import logging
import os
import sys
from typing import Optional

from fvcore.common.file_io import PathManager
from termcolor import colored

_DATEFMT = "%m/%d %H:%M:%S"


class _ColorfulFormatter(logging.Formatter):
    """Green timestamp and logger name; warnings and errors get a red tag."""

    def formatMessage(self, record):
        log = super().formatMessage(record)
        if record.levelno >= logging.ERROR:
            return colored("ERROR", "red", attrs=["underline"]) + " " + log
        if record.levelno == logging.WARNING:
            return colored("WARNING", "red") + " " + log
        return log


@functools.lru_cache()  # one set of handlers per (output, name)
def setup_logger(
    output: Optional[str] = None,
    *,
    color: bool = True,
    name: str = "wignerff",
    level: int = logging.INFO,
):
    """
    Log ``name`` to stdout and, when ``output`` is given, to a file: ``output``
    itself if it ends with ".txt" or ".log", otherwise ``output/log.txt``.
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)
    logger.propagate = False

    plain = logging.Formatter("[%(asctime)s] %(name)s %(levelname)s: %(message)s", _DATEFMT)
    ch = logging.StreamHandler(stream=sys.stdout)
    ch.setLevel(level)
    if color:
        prefix = colored("[%(asctime)s %(name)s]: ", "green")
        ch.setFormatter(_ColorfulFormatter(prefix + "%(message)s", _DATEFMT))
    else:
        ch.setFormatter(plain)
    logger.addHandler(ch)

    if output is not None:
        filename = output if output.endswith((".txt", ".log")) else os.path.join(output, "log.txt")
        PathManager.mkdirs(os.path.dirname(filename))
        fh = logging.StreamHandler(_cached_log_stream(filename))
        fh.setLevel(level)
        fh.setFormatter(plain)
        logger.addHandler(fh)
    return logger


# several loggers may share one log file
@functools.lru_cache(maxsize=None)
def _cached_log_stream(filename):
    return PathManager.open(filename, "a")
