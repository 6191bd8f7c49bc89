#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


import importlib
import os
import unittest
from functools import wraps
from tempfile import TemporaryDirectory
from typing import Optional

import numpy as np

SKIP_SLOW_ENV = "WIGNERFF_SKIP_SLOW"


def get_resource_path(file: Optional[str] = None):
    path_list = [
        os.path.dirname(importlib.import_module("tests").__file__),
        "resources",
    ]
    if file is not None:
        path_list.append(file)

    return os.path.join(*path_list)


def slow_test(func):
    """Exhaustive checks that are skipped when WIGNERFF_SKIP_SLOW is set."""
    return unittest.skipIf(
        bool(os.environ.get(SKIP_SLOW_ENV)), f"{SKIP_SLOW_ENV} is set"
    )(func)


def tempdir(func):
    """ A decorator for creating a tempory directory that is cleaned up after function execution. """

    @wraps(func)
    def wrapper(self, *args, **kwargs):
        with TemporaryDirectory() as temp:
            return func(self, temp, *args, **kwargs)

    return wrapper


def assert_proportional(test: unittest.TestCase, A, B, tol: float = 1e-8):
    """A = c B for some unimodular c."""
    A, B = np.asarray(A), np.asarray(B)
    k = np.unravel_index(np.argmax(np.abs(B)), B.shape)
    c = A[k] / B[k]
    test.assertAlmostEqual(abs(c), 1.0, delta=tol)
    np.testing.assert_allclose(A, c * B, atol=tol)
