from .complexes import (
    build_cochain_complex,
    check_coresolution,
    check_resolution,
    free_module_actions,
    is_complex,
)
from .resolution import choose_generators, free_resolution
from .ext import ext, hom_complex, resolve_d
from .cotor import cotor_complex, cotor_direct, injective_coresolution
from .hochschild import (
    algebra_isomorphic_to_d,
    hochschild,
    hochschild_complex,
    side_actions,
    verify_cotor_is_hochschild,
)
