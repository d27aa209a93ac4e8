"""Result records shared by the predicates and the command line."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .multipoly import MPoly


def fmt(x) -> str:
    """Exact rational as ``"p/q"`` or ``"n"``."""
    return str(Fraction(x))


@dataclass
class Verdict:
    command: str
    member: bool | None
    witnesses: dict[str, Any] = field(default_factory=dict)
    hypothesis_errors: list[str] = field(default_factory=list)
    timing_ms: float = 0.0
    extra: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "member": self.member,
            "witnesses": self.witnesses,
            "hypothesis_errors": list(self.hypothesis_errors),
            "timing_ms": round(self.timing_ms, 3),
            **self.extra,
        }


@dataclass
class IdentityProof:
    lhs: MPoly | None
    rhs: MPoly | None
    difference: MPoly | None
    proved: bool
    mode: str = "symbolic"
    stats: dict[str, Any] = field(default_factory=dict)
    failure_bound: Fraction | None = None  # pit mode only

    def to_json(self) -> dict[str, Any]:
        return {"proved": self.proved, "mode": self.mode, **self.stats}
