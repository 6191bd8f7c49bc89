#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

from wignerff.wigner.render import render_heatmap  # noqa
from wignerff.wigner.states import (  # noqa
    SPIN_STATES,
    load_state,
    maximally_mixed,
    named_state,
    pure_density,
    random_density_matrices,
    singlet,
    spin_product,
    validate_density_matrix,
)
from wignerff.wigner.tomography import (  # noqa
    load_probabilities,
    probability_deviation,
    tomographic_reconstruct,
)
from wignerff.wigner.transform import (  # noqa
    PhasePointOperators,
    WignerMap,
    expand_operator,
    inverse_wigner,
    line_marginal,
    line_probabilities,
    marginal_of_line,
    offset_table,
    phase_point_operators,
    translate_state,
    wigner_transform,
)
