"""Modular Gray maps and linear codes over Z_{p^s}."""

from .codes import (
    CapExceeded,
    LinearCode,
    PBasis,
    StandardForm,
    cardinality,
    dual,
    enumerate_codewords,
    is_additively_closed,
    is_p_linearly_independent,
    is_self_dual,
    is_self_orthogonal,
    p_basis_matrix,
    standard_form,
)
from .graymaps import (
    GrayMap,
    Layout,
    carlet,
    compose_modular,
    eta,
    extend,
    image_is_rm2,
    vega_map,
    verify_composition_theorem,
    verify_isometry,
    verify_mapped_basis_independence,
    xi,
)
from .ring import RingSpec, from_digits, p_adic_digits, p_valuation
from .weights import WeightKind, distance, min_weight, weight, weight_enumerator

__version__ = "0.1.0"
