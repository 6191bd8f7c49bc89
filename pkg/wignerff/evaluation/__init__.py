#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

from .golden_evaluation import (  # noqa, forward namespace
    GOLDEN_CHECK_REGISTRY,
    GoldenEvaluator,
    GoldenResult,
    load_golden,
)
