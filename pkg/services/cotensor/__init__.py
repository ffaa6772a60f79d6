from .cotensor import (
    bimodule_action,
    box_equals_delta_image,
    compare_D_deltaA,
    cotensor,
    d_module,
    delta_submodule,
    generate_submodule,
    twisted_delta_one,
)
from .hom import annihilator, cotensor_hom_iso, hom_from_cyclic
