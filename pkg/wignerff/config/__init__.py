#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


from .config import (  # noqa, forward namespace
    CfgNode,
    get_cfg_diff_table,
    reroute_load_yaml_with_base,
)
from .utils import temp_defrost  # noqa, forward namespace
