from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


@dataclass(frozen=True)
class VerifyCell:
    """One (algebra, field) pair of the verify grid; picklable for the worker pool."""
    algebra: str
    field: str
    checks: Tuple[str, ...]
    seed: int
    samples: int
    max_deg: int
    inject_fault: bool = False


@dataclass(frozen=True)
class CheckOutcome:
    status: Status
    message: str = ""
    location: Optional[Tuple] = None

    def to_json(self) -> dict:
        out = {"status": self.status.value}
        if self.message:
            out["message"] = self.message
        if self.location is not None:
            out["location"] = [str(part) for part in self.location]
        return out


@dataclass
class CellResult:
    algebra: str
    field: str
    outcomes: Dict[str, CheckOutcome] = field(default_factory=dict)

    @property
    def failures(self) -> List[str]:
        return [name for name, outcome in self.outcomes.items() if outcome.status is Status.FAIL]

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "field": self.field,
            "checks": {name: outcome.to_json() for name, outcome in self.outcomes.items()},
        }
