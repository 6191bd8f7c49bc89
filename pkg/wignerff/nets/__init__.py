#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


from .mub import (  # noqa, forward namespace
    MubFamily,
    MubReport,
    StriationBasis,
    mub_family,
    reference_pair,
    striation_eigenbasis,
    verify_mub,
)
from .net import (  # noqa, forward namespace
    NET_BUILDER_REGISTRY,
    QuantumNet,
    RayChoice,
    build_net,
    choice_from_states,
    enumerate_choices,
    nets_equal,
    representative,
    translate_choice,
    translate_net,
)
from .io import (  # noqa, forward namespace
    dump_net,
    load_net,
    net_from_cfg,
    pair_from_cfg,
)
