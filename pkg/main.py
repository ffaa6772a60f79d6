#!/usr/bin/env PYTHONPATH=. python

import sys
import logging
import argparse
from typing import List, Optional, Tuple

from pydantic import ValidationError

from app.errors import CustomError, VerificationFailedError
from app.settings import get_settings
from models.files import Command, JobSpec
from models.frobenius import SearchStrategy
from services.algebras import builtin_names
from services.cli import CHECKS, run_command

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobenius-lab",
        description="Frobenius algebras, comodules, cotensor products and their derived functors.",
    )
    parser.add_argument("command", choices=[c.value for c in Command], help="Subcommand to run")
    parser.add_argument("--builtin", help=f"Builtin algebra: {', '.join(builtin_names())}")
    parser.add_argument("--param", type=int, help="Size parameter of a builtin family")
    parser.add_argument("--algebra", help="Path of an algebra JSON file")
    parser.add_argument("--field", help="Q or Fp:P (default: the algebra file's field, else Q)")
    parser.add_argument("--counit", help="Path of a counit JSON file")
    parser.add_argument("--search", choices=[s.value for s in SearchStrategy],
                        help="Frobenius search strategy when no counit file is given")
    parser.add_argument("--M", default="regular", help="Right module file or 'regular'")
    parser.add_argument("--N", default="regular", help="Left module file or 'regular'")
    parser.add_argument("--max-deg", type=int, help="Highest degree of Ext, Cotor and Hochschild cohomology")
    parser.add_argument("--seed", type=int, help="Random seed (FROBLAB_SEED by default)")
    parser.add_argument("--json", action="store_true", help="Emit JSON")
    parser.add_argument("--resolve", choices=["first", "second"], default="first",
                        help="cotor: coresolve M (first) or N (second)")
    parser.add_argument("--coefficients", choices=["tensor", "algebra"], default="tensor",
                        help="hochschild: coefficients in N⊗M or in A")
    parser.add_argument("--only", action="append", default=[],
                        help=f"verify: run only this check (repeatable): {', '.join(CHECKS)}")
    parser.add_argument("--inject-fault", action="store_true",
                        help="verify: corrupt one structure constant first")
    parser.add_argument("--processes", type=int, help="verify: worker pool size")
    parser.add_argument("--verbose", action="store_true", help="Log progress at INFO level")
    return parser


def parse_job(argv: Optional[List[str]] = None) -> Tuple[JobSpec, bool]:
    """
    Parse the command line into a JobSpec and the --verbose flag.

    Raises:
        ValidationError: If the arguments are inconsistent (e.g. two algebra sources).
    """
    args = build_parser().parse_args(argv)
    return JobSpec(
        command=args.command,
        builtin=args.builtin,
        param=args.param,
        algebra=args.algebra,
        field=args.field,
        counit=args.counit,
        search=args.search,
        M=args.M,
        N=args.N,
        max_deg=args.max_deg,
        seed=args.seed,
        json_output=args.json,
        resolve=args.resolve,
        coefficients=args.coefficients,
        only=args.only,
        inject_fault=args.inject_fault,
        processes=args.processes,
    ), args.verbose


def main(argv: Optional[List[str]] = None) -> int:
    settings = get_settings()
    try:
        spec, verbose = parse_job(argv)
    except ValidationError as e:
        print(f"Error: {e.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    logging.basicConfig(level=logging.INFO if verbose else settings.FROBLAB_LOG_LEVEL)

    try:
        report = run_command(spec)
    except VerificationFailedError as e:
        print(f"Verification failed: {e.message}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    except CustomError as e:
        print(f"Error: {e.message}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    print(report.render(spec.json_output))
    return EXIT_OK if report.ok else EXIT_VERIFICATION_FAILED


if __name__ == "__main__":
    sys.exit(main())
