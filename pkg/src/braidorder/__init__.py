"""Dehornoy order, cluster mutation and braid-closure invariants in exact arithmetic."""

from .braid import (
    BraidWord,
    BraidWordError,
    FreeWord,
    GroupPresentation,
    Permutation,
    artin_action,
    identity,
    inverse,
    link_group_presentation,
    parse_braid,
    permutation_of,
    product,
)
from .dehornoy import (
    DehornoySign,
    Relation,
    Verdict,
    dehornoy_compare,
    dehornoy_sign,
    dual_right_compare,
    handle_reduce,
    sigma_positive_index,
)
from .garside import left_normal_form, positive_decompose
from .lamination import lamination_sign
from .laurent import LaurentPoly, canonical_text, divide_exact, is_positive, parse_poly, substitute

__version__ = "0.1.0"
