from .io import (
    algebra_to_json,
    frobenius_to_json,
    load_algebra,
    load_counit,
    load_module,
    module_to_json,
    parse_algebra,
    parse_counit,
    parse_module,
    read_json,
    subspace_to_json,
    write_json,
)
from .verify import CHECKS, DEFAULT_ALGEBRAS, DEFAULT_FIELDS, VerifySuite, inject_fault, run_cell, run_verify
from .commands import COMMANDS, run_command
