#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


from .basis import (  # noqa, forward namespace
    FieldBasis,
    dual_basis,
    expand,
    expansion_matrix,
    multiplication_matrix,
    polynomial_basis,
    power_basis,
    reconstruct,
)
from .gf import (  # noqa, forward namespace
    F4_ALIASES,
    FieldElement,
    FieldSpec,
    arith,
    field_of_order,
    field_tables,
    format_element,
    is_irreducible,
    make_field,
    multiplicative_order,
    parse_element,
    primitive_element,
    trace,
)
