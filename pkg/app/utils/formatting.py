"""
Human-readable rendering of vectors in terms of basis names.
"""
from itertools import product
from typing import Any, Sequence

from models.linalg import Field

MINUS = "−"
TENSOR = "⊗"


def format_vector(field: Field, names: Sequence[str], vector: Sequence[Any]) -> str:
    """
    Render Σ c_i e_i as e.g. "x⊗xy − 2·xy⊗x"; the zero vector renders as "0".
    """
    terms = []
    for name, c in zip(names, vector):
        if not c:
            continue
        value = field.to_fraction(c)
        negative = value < 0
        magnitude = -value if negative else value
        if field.is_finite:
            # residues are printed as they are, never negated
            negative, magnitude = False, value
        coefficient = "" if magnitude == 1 else f"{field.to_str(field.element(magnitude))}·"
        terms.append((negative, f"{coefficient}{name}"))
    if not terms:
        return "0"
    head_negative, head = terms[0]
    text = f"{MINUS}{head}" if head_negative else head
    for negative, term in terms[1:]:
        text += f" {MINUS} {term}" if negative else f" + {term}"
    return text


def tensor_names(*factors: Sequence[str]) -> list:
    """Names of the tensor basis in flat-index order."""
    return [TENSOR.join(parts) for parts in product(*factors)]


def format_tensor(field: Field, left: Sequence[str], right: Sequence[str], vector: Sequence[Any]) -> str:
    return format_vector(field, tensor_names(left, right), vector)
