#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


from .conjugation import (  # noqa, forward namespace
    rebasing_unitary,
    self_dual_pair,
    solve_conjugation,
)
from .gates import (  # noqa, forward namespace
    basis_permutation,
    quarter_turn_x,
    quarter_turn_z,
    swap_cnot_circuit,
)
from .weyl import (  # noqa, forward namespace
    BasisPair,
    WeylOperators,
    commutation_phase,
    eta_power,
    parallel_translations_commute,
    shift_clock,
    translation_operator,
    validate_basis_pair,
)
