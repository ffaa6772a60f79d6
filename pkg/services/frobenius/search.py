import logging
import warnings
from itertools import product
from random import Random
from typing import Optional, Union

from app.errors import DegenerateFormError, FrobeniusNotFoundError, InvalidParameterValueError
from app.settings import get_settings
from app.warnings import InconclusiveSearchWarning
from models.algebras import AlgebraPresentation
from models.frobenius import FrobeniusData, SearchStrategy
from services.frobenius.coproduct import frobenius_from_counit, gram_matrix
from services.linalg import rank


def _is_nondegenerate(alg: AlgebraPresentation, counit) -> bool:
    return rank(gram_matrix(alg, counit)) == alg.dim


def find_frobenius(
    alg: AlgebraPresentation,
    strategy: Union[SearchStrategy, str] = SearchStrategy.BUILTIN_DEFAULT,
    seed: Optional[int] = None,
    max_tries: Optional[int] = None,
    bound: Optional[int] = None,
    limit: Optional[int] = None,
) -> FrobeniusData:
    """
    Find a functional with nondegenerate form and build its Frobenius structure.

    Args:
        alg (AlgebraPresentation): The algebra to search on.
        strategy (SearchStrategy): builtin-default, randomized or exhaustive.
        seed (Optional[int]): Seed of the randomized search (FROBLAB_SEED by default).
        max_tries (Optional[int]): Budget of the randomized search (FROBLAB_RANDOM_TRIES by default).
        bound (Optional[int]): Random coefficients lie in [-bound, bound] (FROBLAB_COEFF_BOUND by default).
        limit (Optional[int]): Largest p^n the exhaustive search enumerates (FROBLAB_EXHAUSTIVE_LIMIT by default).

    Returns:
        FrobeniusData: Structure of the first nondegenerate functional found.

    Raises:
        FrobeniusNotFoundError: If nothing was found; `conclusive` is True only after
            an exhaustive enumeration over GF(p).
        InvalidParameterValueError: If exhaustive search is asked for over Q or beyond the limit.
    """
    settings = get_settings()
    strategy = SearchStrategy(strategy)

    if strategy is SearchStrategy.BUILTIN_DEFAULT:
        if alg.default_counit is None:
            raise FrobeniusNotFoundError(f"{alg.name} has no default Frobenius functional.")
        try:
            return frobenius_from_counit(alg, alg.default_counit)
        except DegenerateFormError:
            raise FrobeniusNotFoundError(
                f"Default functional of {alg.name} is degenerate over {alg.field}."
            )

    if strategy is SearchStrategy.RANDOMIZED:
        seed = settings.FROBLAB_SEED if seed is None else seed
        max_tries = settings.FROBLAB_RANDOM_TRIES if max_tries is None else max_tries
        bound = settings.FROBLAB_COEFF_BOUND if bound is None else bound
        rng = Random(seed)
        for attempt in range(max_tries):
            counit = [alg.field.random_element(rng, bound) for _ in range(alg.dim)]
            if any(counit) and _is_nondegenerate(alg, counit):
                logging.info(f"Random search on {alg.name} succeeded after {attempt + 1} tries")
                return frobenius_from_counit(alg, counit)
        if not alg.field.is_finite:
            warnings.warn(InconclusiveSearchWarning(max_tries, alg.field.label))
        raise FrobeniusNotFoundError(
            f"No Frobenius functional on {alg.name} in {max_tries} random tries (inconclusive).",
            conclusive=False,
        )

    if not alg.field.is_finite:
        raise InvalidParameterValueError("Exhaustive search needs a finite field.")
    limit = settings.FROBLAB_EXHAUSTIVE_LIMIT if limit is None else limit
    p = alg.field.characteristic
    if p ** alg.dim > limit:
        raise InvalidParameterValueError(
            f"Exhaustive search over {p}^{alg.dim} functionals exceeds the limit of {limit}."
        )
    for counit in product(range(p), repeat=alg.dim):
        if any(counit) and _is_nondegenerate(alg, list(counit)):
            logging.info(f"Exhaustive search on {alg.name} found ε = {list(counit)}")
            return frobenius_from_counit(alg, list(counit))
    raise FrobeniusNotFoundError(
        f"{alg.name} has no Frobenius functional over {alg.field}: all {p ** alg.dim} functionals are degenerate.",
        conclusive=True,
    )
