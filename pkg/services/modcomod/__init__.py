from .checks import check_comodule, check_module, require_comodule, require_module
from .conversions import comodule_to_module, module_to_comodule
from .morphisms import hom_basis, hom_system, is_comodule_map, is_module_map, module_hom_space, vector_to_map
from .constructions import (
    dual_module,
    free_module,
    random_module,
    random_quotient,
    random_submodule,
    regular_module,
    simple_module,
)
