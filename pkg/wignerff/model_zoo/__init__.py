#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

from .model_zoo import get_config, get_config_file, get_golden_file, list_presets  # noqa
