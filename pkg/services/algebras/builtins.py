"""
Catalog of builtin algebras.

Every builtin is returned as a verified AlgebraPresentation carrying its
canonical Frobenius functional (when it has one) as `default_counit`:
the coefficient of xy for the exterior algebra, the trace for matrix
algebras, the coefficient of the identity for group algebras and the top
coefficient for truncated polynomial rings.
"""
import re
from itertools import permutations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from app.errors import InvalidParameterValueError, UnknownAlgebraError
from models.algebras import AlgebraPresentation
from models.linalg import Field


def _table(field: Field, n: int, products: Callable[[int, int], Dict[int, int]]):
    """Structure constants from a function (i, j) -> {k: integer coefficient}."""
    zero = field.zero
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            v = [zero] * n
            for k, c in products(i, j).items():
                v[k] = field.element(c)
            row.append(tuple(v))
        rows.append(tuple(row))
    return tuple(rows)


def _indicator(field: Field, n: int, positions: Sequence[int]) -> Tuple:
    v = [field.zero] * n
    for p in positions:
        v[p] = field.one
    return tuple(v)


def exterior2(field: Field) -> AlgebraPresentation:
    """Exterior algebra on x, y with basis (1, x, y, xy)."""
    # degree-1 products: x·y = xy, y·x = -xy
    signs = {(1, 2): 1, (2, 1): -1}

    def products(i, j):
        if i == 0:
            return {j: 1}
        if j == 0:
            return {i: 1}
        if (i, j) in signs:
            return {3: signs[(i, j)]}
        return {}

    return AlgebraPresentation(
        field=field,
        basis_names=("1", "x", "y", "xy"),
        structure=_table(field, 4, products),
        unit=_indicator(field, 4, [0]),
        name="exterior2",
        default_counit=_indicator(field, 4, [3]),
    )


def _group_algebra(field: Field, names: Sequence[str], multiply: Callable[[int, int], int],
                   identity: int, label: str) -> AlgebraPresentation:
    n = len(names)
    return AlgebraPresentation(
        field=field,
        basis_names=tuple(names),
        structure=_table(field, n, lambda i, j: {multiply(i, j): 1}),
        unit=_indicator(field, n, [identity]),
        name=label,
        default_counit=_indicator(field, n, [identity]),
    )


def group_cyclic(field: Field, k: int) -> AlgebraPresentation:
    names = ["1", "g"] + [f"g^{a}" for a in range(2, k)]
    return _group_algebra(field, names[:k], lambda i, j: (i + j) % k, 0, f"group_cyclic({k})")


def _cycle_name(perm: Tuple[int, ...]) -> str:
    seen, cycles = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle, current = [], start
        while current not in seen:
            seen.add(current)
            cycle.append(str(current + 1))
            current = perm[current]
        cycles.append("(" + "".join(cycle) + ")")
    return "".join(cycles) or "()"


def group_sym3(field: Field) -> AlgebraPresentation:
    """Group algebra of S3; the product σ·τ is the composite σ∘τ."""
    elements = sorted(permutations(range(3)), key=lambda p: (sum(a != b for a, b in enumerate(p)), p))
    index = {perm: i for i, perm in enumerate(elements)}

    def multiply(i, j):
        s, t = elements[i], elements[j]
        return index[tuple(s[t[a]] for a in range(3))]

    return _group_algebra(field, [_cycle_name(p) for p in elements], multiply, 0, "group_sym3")


def matrix(field: Field, k: int) -> AlgebraPresentation:
    """M_k(K) in the matrix-unit basis E_ij at index i·k + j."""
    n = k * k

    def name(i, j):
        return f"E{i + 1}{j + 1}" if k < 10 else f"E{i + 1},{j + 1}"

    def products(a, b):
        i, j = divmod(a, k)
        l, m = divmod(b, k)
        return {i * k + m: 1} if j == l else {}

    diagonal = [i * k + i for i in range(k)]
    return AlgebraPresentation(
        field=field,
        basis_names=tuple(name(i, j) for i in range(k) for j in range(k)),
        structure=_table(field, n, products),
        unit=_indicator(field, n, diagonal),
        name=f"matrix({k})",
        default_counit=_indicator(field, n, diagonal),
    )


def trunc_poly(field: Field, k: int) -> AlgebraPresentation:
    """K[x]/(x^k) with basis 1, x, ..., x^{k-1}."""
    names = ["1", "x"] + [f"x^{a}" for a in range(2, k)]
    return AlgebraPresentation(
        field=field,
        basis_names=tuple(names[:k]),
        structure=_table(field, k, lambda i, j: {i + j: 1} if i + j < k else {}),
        unit=_indicator(field, k, [0]),
        name=f"trunc_poly({k})",
        default_counit=_indicator(field, k, [k - 1]),
    )


def square_zero(field: Field, k: int) -> AlgebraPresentation:
    """K ⊕ V with V·V = 0, dim V = k. Frobenius only for k = 1."""
    n = k + 1
    names = ["1"] + (["x", "y", "z"][:k] if k <= 3 else [f"v{a}" for a in range(1, n)])

    def products(i, j):
        if i == 0:
            return {j: 1}
        if j == 0:
            return {i: 1}
        return {}

    return AlgebraPresentation(
        field=field,
        basis_names=tuple(names),
        structure=_table(field, n, products),
        unit=_indicator(field, n, [0]),
        name=f"square_zero({k})",
        default_counit=_indicator(field, n, [1]) if k == 1 else None,
    )


_CATALOG = {
    "exterior2": (exterior2, False),
    "group_cyclic": (group_cyclic, True),
    "group_sym3": (group_sym3, False),
    "matrix": (matrix, True),
    "trunc_poly": (trunc_poly, True),
    "square_zero": (square_zero, True),
}


def builtin_names() -> List[str]:
    return sorted(_CATALOG)


def parse_builtin_label(label: str) -> Tuple[str, Optional[int]]:
    """ "matrix(2)" -> ("matrix", 2); "exterior2" -> ("exterior2", None)."""
    match = re.fullmatch(r"\s*(\w+)\s*(?:\(\s*(\d+)\s*\))?\s*", label)
    if not match:
        raise UnknownAlgebraError(f"Unknown builtin algebra: {label!r}")
    param = int(match.group(2)) if match.group(2) else None
    return match.group(1), param


def builtin(name: str, param: Optional[int] = None, field: Field = None) -> AlgebraPresentation:
    """
    Build a catalog algebra.

    Args:
        name (str): One of builtin_names(), optionally with its parameter, e.g. "matrix(2)".
        param (Optional[int]): Size parameter for the parametrized families.
        field (Field): Coefficient field (default Q).

    Raises:
        UnknownAlgebraError: If the name is not in the catalog.
        InvalidParameterValueError: If a required parameter is missing or not positive.
    """
    field = field or Field.rationals()
    base, label_param = parse_builtin_label(name)
    param = param if param is not None else label_param
    if base not in _CATALOG:
        raise UnknownAlgebraError(f"Unknown builtin algebra: {name!r}. Known: {', '.join(builtin_names())}")
    constructor, needs_param = _CATALOG[base]
    if not needs_param:
        return constructor(field)
    if param is None:
        raise InvalidParameterValueError(f"Builtin {base!r} needs a size parameter.")
    if param < 1:
        raise InvalidParameterValueError(f"Builtin {base!r} needs a positive parameter, got {param}.")
    return constructor(field, param)
