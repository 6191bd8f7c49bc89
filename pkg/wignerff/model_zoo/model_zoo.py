#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved
import os
from typing import List

import pkg_resources
from wignerff.utils.errors import UnknownPresetError


def _resource_dir(name: str) -> str:
    return pkg_resources.resource_filename("wignerff.model_zoo", name)


def list_presets() -> List[str]:
    return sorted(
        f[: -len(".yaml")] for f in os.listdir(_resource_dir("configs")) if f.endswith(".yaml")
    )


def get_config_file(config_path):
    """
    Returns path to a builtin config file.
    Args:
        config_path (str): preset name or config file name relative to
            wignerff's "model_zoo/configs/" directory, e.g. "paper-n4" or
            "paper-n4.yaml"
    Returns:
        str: the real path to the config file.
    """
    if not config_path.endswith(".yaml"):
        config_path = config_path + ".yaml"
    cfg_file = os.path.join(_resource_dir("configs"), config_path)
    if not os.path.exists(cfg_file):
        raise UnknownPresetError(
            "{} not available in Model Zoo, choose from {}".format(config_path, list_presets())
        )
    return cfg_file


def get_config(config_path):
    """
    Returns the default config merged with a preset.
    Example:
    ::
        from wignerff import model_zoo
        cfg = model_zoo.get_config("paper-n4")
    """
    from wignerff.utils.get_default_cfg import get_default_cfg

    cfg = get_default_cfg()
    cfg.merge_from_file(get_config_file(config_path))
    return cfg


def get_golden_file(name: str) -> str:
    """Path of a bundled golden fixture, e.g. "wigner_n4.json"."""
    golden = os.path.join(_resource_dir("golden"), name)
    if not os.path.exists(golden):
        raise UnknownPresetError("golden fixture {} is not bundled".format(name))
    return golden
