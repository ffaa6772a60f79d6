"""
The `verify` suite: every check over a grid of (builtin algebra, field) cells.

Cells are independent and run in a worker pool; each check reports pass,
fail (with a message and location) or skip when it does not apply to the cell.
"""
import logging
import os
import warnings
from dataclasses import dataclass, field, replace
from multiprocessing import Pool
from random import Random
from typing import Callable, Dict, List, Optional, Tuple

from app.errors import (
	ComplexTooLargeError,
	CustomError,
	FrobeniusNotFoundError,
	HypothesisViolatedError,
	InvalidParameterValueError,
	VerificationFailedError,
)
from app.settings import get_settings
from app.warnings import ExcessiveProcessesWarning
from models.algebras import AlgebraPresentation, EnvelopingAlgebra
from models.files import Command, JobSpec
from models.frobenius import FrobeniusData, SearchStrategy
from models.linalg import Field
from models.modules import ModuleRep, Side
from models.reports import CellResult, CheckOutcome, CommandReport, Status, VerifyCell
from services.algebras import bimodule_of_algebra, builtin, enveloping, parse_builtin_label
from services.cotensor import (
	bimodule_action,
	box_equals_delta_image,
	compare_D_deltaA,
	cotensor,
	cotensor_hom_iso,
	d_module,
)
from services.frobenius import (
	delta_image,
	find_coproduct_violation,
	find_frobenius,
	frobenius_from_counit,
	is_injective,
	symmetry_consistent,
)
from services.homological import (
	check_coresolution,
	check_resolution,
	cotor_complex,
	cotor_direct,
	ext,
	hochschild,
	hochschild_complex,
	hom_complex,
	injective_coresolution,
	is_complex,
	resolve_d,
	verify_cotor_is_hochschild,
)
from services.linalg import span
from services.modcomod import (
	comodule_to_module,
	hom_basis,
	is_comodule_map,
	is_module_map,
	module_to_comodule,
	random_quotient,
	random_submodule,
	regular_module,
)

DEFAULT_ALGEBRAS = (
	"exterior2", "group_cyclic(2)", "group_cyclic(3)", "group_sym3", "matrix(2)", "matrix(3)", "trunc_poly(2)", "trunc_poly(3)",
)
DEFAULT_FIELDS = ("Q", "F2", "F3", "F5")
AXIOM_CHECK = "algebra-axioms"


@dataclass
class CellContext:
	"""Everything a check needs about one cell; built once per cell in the worker."""
	label: str
	algebra: AlgebraPresentation
	fd: FrobeniusData
	env: EnvelopingAlgebra
	seed: int
	samples: int
	max_deg: int

	def pairs(self, count: Optional[int] = None) -> List[Tuple[ModuleRep, ModuleRep]]:
		"""Seeded small (right M, left N) samples, `samples` of them unless `count` is given."""
		rng = Random(self.seed)
		return [
			(small_module(self.algebra, rng, Side.RIGHT), small_module(self.algebra, rng, Side.LEFT))
			for _ in range(self.samples if count is None else count)
		]


def small_module(alg: AlgebraPresentation, rng: Random, side: Side, tries: int = 32) -> ModuleRep:
	"""A random cyclic submodule or quotient of A with 1 ≤ dim ≤ max(2, n/2); A itself if none turns up."""
	cap = max(2, alg.dim // 2)
	for _ in range(tries):
		builder = random_submodule if rng.random() < 0.5 else random_quotient
		rep = builder(alg, rng, side)
		if 1 <= rep.dim <= cap:
			return rep
	return regular_module(alg, side)


def _outcome(ok: bool, message: str = "", location: Optional[Tuple] = None) -> CheckOutcome:
	if ok:
		return CheckOutcome(Status.PASS)
	return CheckOutcome(Status.FAIL, message, location)


def _skip(reason: str) -> CheckOutcome:
	return CheckOutcome(Status.SKIP, reason)


def check_coproduct_axioms(ctx: CellContext) -> CheckOutcome:
	failing = find_coproduct_violation(ctx.fd)
	return _outcome(failing is None, f"coproduct check '{failing}' fails", (failing,))


def check_delta_injective(ctx: CellContext) -> CheckOutcome:
	ok = is_injective(ctx.fd) and delta_image(ctx.fd).dim == ctx.algebra.dim
	return _outcome(ok, "δ is not injective")


def check_module_comodule(ctx: CellContext) -> CheckOutcome:
	fd, alg = ctx.fd, ctx.algebra
	rng = Random(ctx.seed)
	for side in (Side.RIGHT, Side.LEFT):
		regular = regular_module(alg, side)
		reps = [regular] + [small_module(alg, rng, side) for _ in range(ctx.samples)]
		for k, rep in enumerate(reps):
			corep = module_to_comodule(fd, rep)
			back = comodule_to_module(fd, corep)
			if back != rep:
				return _outcome(False, f"module → comodule → module changes sample {k}", (side.value, k))
			if module_to_comodule(fd, back) != corep:
				return _outcome(False, f"comodule → module → comodule changes sample {k}", (side.value, k))
		for k, rep in enumerate(reps[1:], start=1):
			source, target = module_to_comodule(fd, regular), module_to_comodule(fd, rep)
			for f in hom_basis(regular, rep):
				if not (is_module_map(f, regular, rep) and is_comodule_map(f, source, target)):
					return _outcome(False, f"module map A → sample {k} is not a comodule map", (side.value, k))
	return _outcome(True)


def check_cotensor_regular(ctx: CellContext) -> CheckOutcome:
	forward, backward = box_equals_delta_image(ctx.fd)
	if not forward:
		return _outcome(False, "δ(A) is not contained in A□A", ("forward",))
	return _outcome(backward, "A□A is not contained in δ(A)", ("backward",))


def check_symmetric_d(ctx: CellContext) -> CheckOutcome:
	if not ctx.fd.is_symmetric:
		return _skip("form is not symmetric")
	if not symmetry_consistent(ctx.fd):
		return _outcome(False, "δ(1) is not fixed by the swap", ("delta_one",))
	return _outcome(compare_D_deltaA(ctx.fd, ctx.env).equal, "D ≠ δ(A) on a symmetric algebra")


def exterior_reference(fd: FrobeniusData) -> Dict[str, list]:
	"""
	δ(1), bases of δ(A) and of D for exterior2 with ε = coefficient of xy, flat index i·4 + j.
	"""
	field = fd.field
	one, x, y, xy = range(4)

	def tensor(*terms):
		v = [field.zero] * 16
		for c, a, b in terms:
			v[a * 4 + b] += field.element(c)
		return v

	delta_one = tensor((1, one, xy), (1, xy, one), (-1, x, y), (1, y, x))
	twisted = tensor((1, xy, one), (1, one, xy), (-1, y, x), (1, x, y))
	return {
		"delta_one": delta_one,
		"delta_image": [delta_one, tensor((1, x, xy), (1, xy, x)), tensor((1, y, xy), (1, xy, y)), tensor((1, xy, xy))],
		"D": [twisted, tensor((1, x, xy), (-1, xy, x)), tensor((1, y, xy), (-1, xy, y)), tensor((1, xy, xy))],
	}


def check_exterior_example(ctx: CellContext) -> CheckOutcome:
	if parse_builtin_label(ctx.label)[0] != "exterior2":
		return _skip("exterior2 only")
	fd, field = ctx.fd, ctx.fd.field
	reference = exterior_reference(fd)
	if list(fd.delta_one) != reference["delta_one"]:
		return _outcome(False, "δ(1) differs from 1⊗xy + xy⊗1 − x⊗y + y⊗x", ("delta_one",))
	if delta_image(fd) != span(field, 16, reference["delta_image"]):
		return _outcome(False, "δ(A) differs from the reference basis", ("delta_image",))
	if d_module(fd, ctx.env).span != span(field, 16, reference["D"]):
		return _outcome(False, "D differs from the reference basis", ("D",))
	equal = compare_D_deltaA(fd, ctx.env).equal
	return _outcome(equal == (field.characteristic == 2), f"D = δ(A) is {equal} over {field}", ("compare",))


def check_cotensor_hom(ctx: CellContext) -> CheckOutcome:
	for k, (rep_m, rep_n) in enumerate(ctx.pairs(2 * ctx.samples)):
		try:
			cotensor_hom_iso(ctx.fd, rep_m, rep_n, ctx.env)
		except VerificationFailedError as e:
			return _outcome(False, e.message, (k,))
	return _outcome(True)


def check_cotor_ext(ctx: CellContext) -> CheckOutcome:
	for k, (rep_m, rep_n) in enumerate(ctx.pairs()):
		ext_dims = ext(ctx.fd, rep_m, rep_n, ctx.max_deg, ctx.env, ctx.seed)
		cotor_dims = cotor_direct(ctx.fd, rep_m, rep_n, ctx.max_deg, seed=ctx.seed)
		if ext_dims != cotor_dims:
			return _outcome(False, f"Ext {ext_dims} ≠ Cotor {cotor_dims}", (k,))
		box_dim = cotensor(ctx.fd, rep_m, rep_n).dim
		if ext_dims[0] != box_dim:
			return _outcome(False, f"Ext^0 = {ext_dims[0]} but dim M□N = {box_dim}", (k, 0))
	return _outcome(True)


def check_cotor_hochschild(ctx: CellContext) -> CheckOutcome:
	for k, (rep_m, rep_n) in enumerate(ctx.pairs()):
		try:
			comparison = verify_cotor_is_hochschild(ctx.fd, rep_m, rep_n, ctx.max_deg, ctx.env, ctx.seed)
		except HypothesisViolatedError:
			if ctx.fd.is_symmetric:
				return _outcome(False, "refused on a symmetric algebra", (k,))
			return _outcome(True)
		if not comparison.algebra_isomorphic_to_d:
			return _outcome(False, "A ≇ D", (k,))
		if not comparison.holds:
			return _outcome(
				False, f"Ext {list(comparison.ext_dims)} ≠ H {list(comparison.hochschild_dims)}", (k,)
			)
	return _outcome(True)


def is_semisimple(label: str, field: Field) -> bool:
	"""Matrix algebras always; group algebras when the group order is invertible."""
	name, param = parse_builtin_label(label)
	if name == "matrix":
		return True
	orders = {"group_cyclic": param, "group_sym3": 6}
	if name not in orders:
		return False
	return not field.is_finite or orders[name] % field.characteristic != 0


def check_semisimple_vanishing(ctx: CellContext) -> CheckOutcome:
	if not is_semisimple(ctx.label, ctx.algebra.field):
		return _skip("algebra is not semisimple over this field")
	alg = ctx.algebra
	dims = hochschild(alg, bimodule_of_algebra(alg), alg.dim, ctx.max_deg)
	if any(dims[1:]):
		return _outcome(False, f"H^*(A, A) = {dims}", ("hochschild",))
	for k, (rep_m, rep_n) in enumerate(ctx.pairs()):
		for name, computed in (
			("ext", ext(ctx.fd, rep_m, rep_n, ctx.max_deg, ctx.env, ctx.seed)),
			("cotor", cotor_direct(ctx.fd, rep_m, rep_n, ctx.max_deg, seed=ctx.seed)),
		):
			if any(computed[1:]):
				return _outcome(False, f"{name} = {computed}", (name, k))
	return _outcome(True)


def check_complex_invariants(ctx: CellContext) -> CheckOutcome:
	fd, alg = ctx.fd, ctx.algebra
	length = ctx.max_deg + 1
	res = resolve_d(fd, length, ctx.env, ctx.seed)
	report = check_resolution(res)
	if not report:
		return _outcome(False, f"resolution of D: {report.message}", report.location)
	for k, (rep_m, rep_n) in enumerate(ctx.pairs()):
		report = check_coresolution(injective_coresolution(alg, rep_m, length, ctx.seed))
		if not report:
			return _outcome(False, f"coresolution of sample {k}: {report.message}", report.location)
		complexes = {
			"hom": hom_complex(res, bimodule_action(rep_n, rep_m), rep_n.dim * rep_m.dim),
			"cotor": cotor_complex(fd, rep_m, rep_n, ctx.max_deg, seed=ctx.seed),
			"hochschild": hochschild_complex(alg, bimodule_action(rep_n, rep_m), rep_n.dim * rep_m.dim, ctx.max_deg),
		}
		for name, complex_ in complexes.items():
			if not is_complex(complex_):
				return _outcome(False, f"d∘d ≠ 0 in the {name} complex of sample {k}", (name, k))
	return _outcome(True)


CHECKS: Dict[str, Callable[[CellContext], CheckOutcome]] = {
	"coproduct-axioms": check_coproduct_axioms,
	"delta-injective": check_delta_injective,
	"module-comodule": check_module_comodule,
	"cotensor-regular": check_cotensor_regular,
	"symmetric-D": check_symmetric_d,
	"exterior-example": check_exterior_example,
	"cotensor-hom": check_cotensor_hom,
	"cotor-ext": check_cotor_ext,
	"cotor-hochschild": check_cotor_hochschild,
	"semisimple-vanishing": check_semisimple_vanishing,
	"complex-invariants": check_complex_invariants,
}


def inject_fault(alg: AlgebraPresentation) -> Tuple[AlgebraPresentation, Tuple]:
	"""
	Add 1 to the first structure constant c[i][j][k] (i, j ≥ 1) whose change breaks associativity.

	Returns the corrupted, unverified presentation and the (i, j, k) that was changed.
	"""
	n, field = alg.dim, alg.field
	for i in range(1, n):
		for j in range(1, n):
			for k in range(n):
				table = [[list(v) for v in row] for row in alg.structure]
				table[i][j][k] += field.one
				structure = tuple(tuple(tuple(v) for v in row) for row in table)
				corrupted = replace(alg, structure=structure, verify=False)
				violation = corrupted.find_axiom_violation()
				if violation is not None and violation[0].startswith("associativity"):
					return corrupted, (i, j, k)
	raise InvalidParameterValueError(f"No single structure constant of {alg.name} breaks associativity.")


def frobenius_for_cell(alg: AlgebraPresentation) -> FrobeniusData:
	if alg.default_counit is not None:
		try:
			return frobenius_from_counit(alg, alg.default_counit)
		except CustomError:
			logging.info(f"Default functional of {alg.name} fails over {alg.field}; searching")
	if alg.field.is_finite:
		return find_frobenius(alg, SearchStrategy.EXHAUSTIVE)
	return find_frobenius(alg, SearchStrategy.RANDOMIZED)


def run_cell(cell: VerifyCell) -> CellResult:
	"""Run the selected checks on one cell; a check over the size caps is skipped, any other error fails it."""
	result = CellResult(cell.algebra, cell.field)
	alg = builtin(cell.algebra, field=Field.parse(cell.field))
	if cell.inject_fault:
		alg, changed = inject_fault(alg)
		logging.info(f"Injected fault into {cell.algebra} over {cell.field} at c{list(changed)}")
	violation = alg.find_axiom_violation()
	if violation is not None or AXIOM_CHECK in cell.checks:
		message, location = violation if violation is not None else ("", None)
		result.outcomes[AXIOM_CHECK] = _outcome(violation is None, message, location)
	if violation is not None:
		for name in cell.checks:
			if name != AXIOM_CHECK:
				result.outcomes[name] = _skip("algebra axioms fail")
		return result

	try:
		fd = frobenius_for_cell(alg)
	except FrobeniusNotFoundError as e:
		for name in cell.checks:
			if name != AXIOM_CHECK:
				result.outcomes[name] = _skip(e.message)
		return result

	ctx = CellContext(cell.algebra, alg, fd, enveloping(alg), cell.seed, cell.samples, cell.max_deg)
	for name in cell.checks:
		if name == AXIOM_CHECK:
			continue
		try:
			result.outcomes[name] = CHECKS[name](ctx)
		except ComplexTooLargeError as e:
			result.outcomes[name] = _skip(e.message)
		except CustomError as e:
			result.outcomes[name] = _outcome(False, f"{type(e).__name__}: {e.message}")
		logging.info(f"verify {cell.algebra} over {cell.field}: {name} {result.outcomes[name].status.value}")
	return result


@dataclass
class VerifySuite:
	"""
	Runs the checks over a grid of cells.

	Attributes:
	----------
	algebras : Tuple[str, ...]
		Builtin labels, e.g. "matrix(2)".
	fields : Tuple[str, ...]
		Field labels, e.g. "Q", "F2".
	checks : Tuple[str, ...]
		Check names to run (all by default).
	num_processes : int
		Size of the worker pool; 1 runs in the calling process.
	"""
	algebras: Tuple[str, ...] = DEFAULT_ALGEBRAS
	fields: Tuple[str, ...] = DEFAULT_FIELDS
	checks: Tuple[str, ...] = tuple(CHECKS)
	seed: int = 0
	samples: int = 5
	max_deg: int = 2
	num_processes: int = 1
	inject_fault: bool = False
	cells: List[VerifyCell] = field(init=False, default_factory=list)

	def __post_init__(self):
		"""Validate the check names and warn when the pool is larger than the machine."""
		known = set(CHECKS) | {AXIOM_CHECK}
		unknown = [name for name in self.checks if name not in known]
		if unknown:
			raise InvalidParameterValueError(
				f"Unknown verify checks: {', '.join(unknown)}. Known: {', '.join(sorted(known))}"
			)
		if self.num_processes < 1:
			raise InvalidParameterValueError("The verify pool needs at least one process.")
		available_cores = os.cpu_count() or 1
		if self.num_processes > available_cores:
			warnings.warn(
				ExcessiveProcessesWarning(self.num_processes, available_cores),
				stacklevel=2
			)
		self.cells = [
			VerifyCell(algebra, field_label, tuple(self.checks), self.seed, self.samples, self.max_deg,
					   self.inject_fault)
			for algebra in self.algebras
			for field_label in self.fields
		]

	def run(self) -> List[CellResult]:
		if self.num_processes == 1:
			return [run_cell(cell) for cell in self.cells]
		with Pool(self.num_processes) as pool:
			return pool.map(run_cell, self.cells)


def summarize(results: List[CellResult]) -> CommandReport:
	failures = [(r.algebra, r.field, name) for r in results for name in r.failures]
	payload = {"ok": not failures, "cells": [r.to_json() for r in results]}
	lines = []
	for r in results:
		for name, outcome in r.outcomes.items():
			line = f"{r.algebra:<16} {r.field:<4} {name:<22} {outcome.status.value}"
			if outcome.status is not Status.PASS and outcome.message:
				line += f"  ({outcome.message})"
			if outcome.location is not None and outcome.status is Status.FAIL:
				line += f" at {list(outcome.location)}"
			lines.append(line)
	lines.append(f"{len(failures)} failing checks" if failures else "all checks pass")
	return CommandReport(Command.VERIFY.value, payload, lines, ok=not failures)


def _builtin_label(spec: JobSpec) -> str:
	return f"{spec.builtin}({spec.param})" if spec.param is not None else spec.builtin


def run_verify(spec: JobSpec) -> CommandReport:
	settings = get_settings()
	suite = VerifySuite(
		algebras=(_builtin_label(spec),) if spec.builtin else DEFAULT_ALGEBRAS,
		fields=(spec.field,) if spec.field else DEFAULT_FIELDS,
		checks=tuple(spec.only) if spec.only else tuple(CHECKS),
		seed=settings.FROBLAB_SEED if spec.seed is None else spec.seed,
		samples=settings.FROBLAB_VERIFY_SAMPLES,
		max_deg=settings.FROBLAB_MAX_DEG if spec.max_deg is None else spec.max_deg,
		num_processes=settings.FROBLAB_NUM_PROCESSES if spec.processes is None else spec.processes,
		inject_fault=spec.inject_fault,
	)
	return summarize(suite.run())
