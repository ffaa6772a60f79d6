from dataclasses import dataclass
from typing import Optional, Tuple


@dataclass(frozen=True)
class CheckReport:
    """Outcome of an axiom check: `location` names the first failing index when `ok` is False."""
    ok: bool
    message: str = ""
    location: Optional[Tuple] = None

    @classmethod
    def passed(cls) -> "CheckReport":
        return cls(True)

    @classmethod
    def failed(cls, message: str, location: Optional[Tuple] = None) -> "CheckReport":
        return cls(False, message, location)

    def __bool__(self) -> bool:
        return self.ok
