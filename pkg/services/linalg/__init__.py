from .exact_linalg import (
    rref, rank, span, zero_subspace, full_space, kernel, image, solve, inverse,
    kron, kron_all, flat_index, tensor_permute, swap,
    subspace_equal, subspace_contains, subspace_includes, subspace_sum, subspace_intersect,
    induced_map, restrict_action, quotient_action, stable_span,
)
