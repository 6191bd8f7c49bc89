#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


from .linear import (  # noqa, forward namespace
    LinearMap,
    apply_linear,
    conjugacy_classes,
    decompose_sl2,
    generator_matrices,
    sl2_group,
    word_matrix,
)
from .phase_space import (  # noqa, forward namespace
    Line,
    PhasePoint,
    Striation,
    all_lines,
    all_points,
    striation_index,
    striation_of,
    striations,
    translate_line,
)
