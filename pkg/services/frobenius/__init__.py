from .axioms import (
    COPRODUCT_CHECKS,
    casimir_holds,
    counit_law_holds,
    dual_basis_holds,
    find_coproduct_violation,
    form_is_associative,
    is_bimodule_map,
    is_coassociative,
    is_injective,
    left_right_agree,
    right_delta_one,
    symmetry_consistent,
)
from .coproduct import coproduct, coproduct_matrix, delta_image, frobenius_from_counit, gram_matrix
from .search import find_frobenius
