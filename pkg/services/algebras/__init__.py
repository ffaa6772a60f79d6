from .builtins import (
    builtin,
    builtin_names,
    exterior2,
    group_cyclic,
    group_sym3,
    matrix,
    parse_builtin_label,
    square_zero,
    trunc_poly,
)
from .regular import (
    bimodule_of_algebra,
    env_action_on_AA,
    env_element_action,
    enveloping,
    left_regular,
    multiply,
    right_regular,
)
