#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved

from wignerff.classify.census import CensusReport, w_variant_census  # noqa
from wignerff.classify.discriminant import discriminant_D, index_transform  # noqa
from wignerff.classify.gamma import (  # noqa
    GammaTensor,
    are_equivalent,
    conjugate_net,
    find_equivalence_unitary,
    gamma,
    gamma_grid_rows,
    gamma_signature,
    gamma_slice,
)
from wignerff.classify.orbits import OrbitReport, similarity_orbits  # noqa

# registers the "special_odd_prime" and tensor-product net builders
from wignerff.classify.special import (  # noqa
    parity_operator,
    realignment_rank,
    search_special_net,
    special_gamma,
    special_net_odd_prime,
    special_pair,
    tensor_product_nets_n4,
)
from wignerff.classify.symplectic import (  # noqa
    ChoiceAction,
    choice_action,
    covariance_residual,
    generator_actions,
    generator_z,
    multiplication_gate,
    unitary_for_linear,
    w_change_map,
)
