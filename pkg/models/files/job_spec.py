from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, model_validator


class Command(str, Enum):
    FROBENIUS = "frobenius"
    COTENSOR = "cotensor"
    HOM = "hom"
    EXT = "ext"
    COTOR = "cotor"
    HOCHSCHILD = "hochschild"
    COMPARE_D = "compareD"
    VERIFY = "verify"


class JobSpec(BaseModel):
    """
    A parsed command line.
    """
    command: Command                      # Subcommand to run
    builtin: Optional[str] = None         # Builtin algebra name, e.g. "exterior2" or "matrix(2)"
    param: Optional[int] = None           # Size parameter of a builtin family
    algebra: Optional[str] = None         # Path of an algebra file
    field: Optional[str] = None           # "Q" or "Fp:P"; defaults to the algebra file's field, else Q
    counit: Optional[str] = None          # Path of a counit file overriding the default functional
    search: Optional[str] = None          # Frobenius search strategy when no counit is given
    M: str = "regular"                    # Right module file or "regular"
    N: str = "regular"                    # Left module file or "regular"
    max_deg: Optional[int] = None         # Highest degree of derived functors (FROBLAB_MAX_DEG by default)
    seed: Optional[int] = None            # Random seed (FROBLAB_SEED by default)
    json_output: bool = False             # Emit JSON instead of the human report
    resolve: str = "first"                # Cotor: coresolve M ("first") or N ("second")
    coefficients: str = "tensor"          # Hochschild: N⊗M ("tensor") or A itself ("algebra")
    only: List[str] = []                  # Verify: restrict to these checks
    inject_fault: bool = False            # Verify: corrupt one structure constant first
    processes: Optional[int] = None       # Verify: pool size (FROBLAB_NUM_PROCESSES by default)

    @model_validator(mode="after")
    def _one_algebra_source(self):
        if self.command is Command.VERIFY:
            if self.algebra is not None:
                raise ValueError("verify runs on builtin algebras only")
            return self
        if (self.builtin is None) == (self.algebra is None):
            raise ValueError("exactly one of --builtin and --algebra is required")
        if self.max_deg is not None and self.max_deg < 0:
            raise ValueError("--max-deg must not be negative")
        if self.resolve not in ("first", "second"):
            raise ValueError("--resolve must be 'first' or 'second'")
        if self.coefficients not in ("tensor", "algebra"):
            raise ValueError("--coefficients must be 'tensor' or 'algebra'")
        return self
