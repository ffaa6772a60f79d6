"""
Subcommands of the frobenius-lab command line.

Each command takes a JobSpec and returns a CommandReport carrying both the
JSON payload and the human-readable lines.
"""
import logging
from typing import Callable, Dict, List, Sequence

from app.errors import DegenerateFormError
from app.settings import get_settings
from app.utils import format_tensor, format_vector, tensor_names
from models.algebras import AlgebraPresentation
from models.complexes import FunctorResult
from models.files import Command, JobSpec
from models.frobenius import FrobeniusData, SearchStrategy
from models.linalg import Field, Subspace
from models.modules import ModuleRep, Side
from models.reports import CommandReport
from services.algebras import bimodule_of_algebra, builtin, enveloping
from services.cli.io import (
    frobenius_to_json,
    load_algebra,
    load_counit,
    load_module,
    subspace_to_json,
    vector_to_json,
)
from services.cli.verify import run_verify
from services.cotensor import (
    bimodule_action,
    box_equals_delta_image,
    compare_D_deltaA,
    cotensor,
    cotensor_hom_iso,
)
from services.frobenius import find_frobenius, frobenius_from_counit
from services.homological import cotor_direct, ext, hochschild
from services.linalg import rank
from services.modcomod import regular_module, require_module

REGULAR = "regular"


def resolve_algebra(spec: JobSpec) -> AlgebraPresentation:
    if spec.builtin is not None:
        return builtin(spec.builtin, spec.param, Field.parse(spec.field or "Q"))
    return load_algebra(spec.algebra, Field.parse(spec.field) if spec.field else None)


def resolve_frobenius(spec: JobSpec, alg: AlgebraPresentation) -> FrobeniusData:
    """
    The counit file when given, else the requested search, else the algebra's own
    functional, else a search suited to the field.
    """
    if spec.counit is not None:
        return frobenius_from_counit(alg, load_counit(spec.counit, alg))
    if spec.search is not None:
        return find_frobenius(alg, spec.search, seed=spec.seed)
    if alg.default_counit is not None:
        try:
            return frobenius_from_counit(alg, alg.default_counit)
        except DegenerateFormError:
            logging.info(f"Default functional of {alg.name} is degenerate over {alg.field}; searching")
    strategy = SearchStrategy.EXHAUSTIVE if alg.field.is_finite else SearchStrategy.RANDOMIZED
    return find_frobenius(alg, strategy, seed=spec.seed)


def resolve_module(path: str, alg: AlgebraPresentation, side: Side) -> ModuleRep:
    rep = regular_module(alg, side) if path == REGULAR else load_module(path, alg.field)
    require_module(alg, rep, side)
    return rep


def module_names(path: str, alg: AlgebraPresentation, rep: ModuleRep, prefix: str) -> List[str]:
    if path == REGULAR:
        return list(alg.basis_names)
    return [f"{prefix}{i}" for i in range(rep.dim)]


def _max_deg(spec: JobSpec) -> int:
    return get_settings().FROBLAB_MAX_DEG if spec.max_deg is None else spec.max_deg


def _seed(spec: JobSpec) -> int:
    return get_settings().FROBLAB_SEED if spec.seed is None else spec.seed


def _header(alg: AlgebraPresentation) -> dict:
    return {"algebra": alg.name, "field": alg.field.to_json()}


def _basis_lines(field: Field, names: Sequence[str], s: Subspace) -> List[str]:
    return [f"  {format_vector(field, names, v)}" for v in s.vectors()]


def cmd_frobenius(spec: JobSpec) -> CommandReport:
    alg = resolve_algebra(spec)
    fd = resolve_frobenius(spec, alg)
    names = alg.basis_names
    payload = {
        **_header(alg),
        **frobenius_to_json(fd),
        "gram_rank": rank(fd.gram),
        "delta_one": vector_to_json(alg.field, fd.delta_one),
    }
    lines = [
        f"algebra: {alg.name} over {alg.field}",
        f"counit: ε = {format_vector(alg.field, names, fd.counit)}",
        f"gram rank: {payload['gram_rank']}",
        f"symmetric: {str(fd.is_symmetric).lower()}",
        f"δ(1) = {format_tensor(alg.field, names, names, fd.delta_one)}",
    ]
    for i, name in enumerate(names):
        lines.append(f"δ({name}) = {format_tensor(alg.field, names, names, fd.coproduct_matrix.column(i))}")
    return CommandReport(Command.FROBENIUS.value, payload, lines)


def _pair(spec: JobSpec):
    alg = resolve_algebra(spec)
    fd = resolve_frobenius(spec, alg)
    rep_m = resolve_module(spec.M, alg, Side.RIGHT)
    rep_n = resolve_module(spec.N, alg, Side.LEFT)
    return alg, fd, rep_m, rep_n


def cmd_cotensor(spec: JobSpec) -> CommandReport:
    alg, fd, rep_m, rep_n = _pair(spec)
    result = cotensor(fd, rep_m, rep_n)
    payload = {**_header(alg), "box": subspace_to_json(result.box), "dim": result.dim}
    names = tensor_names(module_names(spec.M, alg, rep_m, "m"), module_names(spec.N, alg, rep_n, "n"))
    lines = [f"dim M□N = {result.dim}", "basis:"] + _basis_lines(alg.field, names, result.box)
    if spec.M == REGULAR and spec.N == REGULAR:
        forward, backward = box_equals_delta_image(fd, result.box)
        payload["equals_delta_image"] = forward and backward
        lines.append(f"A□A = δ(A): {str(forward and backward).lower()}")
    return CommandReport(Command.COTENSOR.value, payload, lines)


def cmd_hom(spec: JobSpec) -> CommandReport:
    alg, fd, rep_m, rep_n = _pair(spec)
    result = cotensor_hom_iso(fd, rep_m, rep_n)
    payload = {
        **_header(alg),
        "dim": result.hom.dim,
        "hom": subspace_to_json(result.hom),
        "cotensor_dim": result.box.dim,
        "verified": result.verified,
    }
    names = tensor_names(module_names(spec.N, alg, rep_n, "n"), module_names(spec.M, alg, rep_m, "m"))
    lines = [
        f"dim Hom_A^e(D, N⊗M) = {result.hom.dim}",
        f"dim M□N = {result.box.dim}",
        "values f(T∘δ(1)):",
    ] + _basis_lines(alg.field, names, result.hom)
    return CommandReport(Command.HOM.value, payload, lines)


def _functor_report(command: Command, alg: AlgebraPresentation, functor: str, symbol: str,
                    dims: Sequence[int]) -> CommandReport:
    payload = FunctorResult(functor=functor, dims=tuple(dims)).to_json()
    lines = [f"{alg.name} over {alg.field}"] + [f"{symbol}^{k} = {d}" for k, d in enumerate(dims)]
    return CommandReport(command.value, payload, lines)


def cmd_ext(spec: JobSpec) -> CommandReport:
    alg, fd, rep_m, rep_n = _pair(spec)
    dims = ext(fd, rep_m, rep_n, _max_deg(spec), seed=_seed(spec))
    return _functor_report(Command.EXT, alg, "ext", "Ext", dims)


def cmd_cotor(spec: JobSpec) -> CommandReport:
    alg, fd, rep_m, rep_n = _pair(spec)
    dims = cotor_direct(fd, rep_m, rep_n, _max_deg(spec), resolve=spec.resolve, seed=_seed(spec))
    return _functor_report(Command.COTOR, alg, "cotor", "Cotor", dims)


def cmd_hochschild(spec: JobSpec) -> CommandReport:
    alg = resolve_algebra(spec)
    if spec.coefficients == "algebra":
        bimodule, dim = bimodule_of_algebra(alg), alg.dim
    else:
        rep_m = resolve_module(spec.M, alg, Side.RIGHT)
        rep_n = resolve_module(spec.N, alg, Side.LEFT)
        bimodule, dim = bimodule_action(rep_n, rep_m), rep_n.dim * rep_m.dim
    dims = hochschild(alg, bimodule, dim, _max_deg(spec))
    return _functor_report(Command.HOCHSCHILD, alg, "hochschild", "H", dims)


def cmd_compare_d(spec: JobSpec) -> CommandReport:
    alg = resolve_algebra(spec)
    fd = resolve_frobenius(spec, alg)
    comparison = compare_D_deltaA(fd, enveloping(alg))
    names = tensor_names(alg.basis_names, alg.basis_names)
    payload = {
        **_header(alg),
        "equal": comparison.equal,
        "symmetric": fd.is_symmetric,
        "delta_image": subspace_to_json(comparison.delta_image),
        "D": subspace_to_json(comparison.d_module),
    }
    lines = [f"D = δ(A): {str(comparison.equal).lower()}", "δ(A):"]
    lines += _basis_lines(alg.field, names, comparison.delta_image)
    lines += ["D:"] + _basis_lines(alg.field, names, comparison.d_module)
    return CommandReport(Command.COMPARE_D.value, payload, lines)


def cmd_verify(spec: JobSpec) -> CommandReport:
    return run_verify(spec)


COMMANDS: Dict[Command, Callable[[JobSpec], CommandReport]] = {
    Command.FROBENIUS: cmd_frobenius,
    Command.COTENSOR: cmd_cotensor,
    Command.HOM: cmd_hom,
    Command.EXT: cmd_ext,
    Command.COTOR: cmd_cotor,
    Command.HOCHSCHILD: cmd_hochschild,
    Command.COMPARE_D: cmd_compare_d,
    Command.VERIFY: cmd_verify,
}


def run_command(spec: JobSpec) -> CommandReport:
    logging.info(f"Running {spec.command.value}")
    return COMMANDS[spec.command](spec)
