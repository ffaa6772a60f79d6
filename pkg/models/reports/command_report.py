import json
from dataclasses import dataclass, field
from typing import Any, Dict, List


def dump_json(payload: Any) -> str:
    """Deterministic JSON: sorted keys, fixed indentation, Unicode kept."""
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


@dataclass
class CommandReport:
    """
    Result of one CLI command.

    Attributes:
    ----------
    command : str
        Subcommand that produced the report.
    payload : Dict[str, Any]
        JSON-ready result (only strings, ints, bools, lists and dicts).
    lines : List[str]
        Human-readable rendering.
    ok : bool
        False when a verification inside the command failed.
    """
    command: str
    payload: Dict[str, Any]
    lines: List[str] = field(default_factory=list)
    ok: bool = True

    def render(self, json_output: bool = False) -> str:
        if json_output:
            return dump_json(self.payload)
        return "\n".join(self.lines)
