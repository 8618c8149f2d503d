"""Pass/fail records returned by the verification routines."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    lhs: Any = None
    rhs: Any = None
    detail: str = ""

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"{self.name}: {self.lhs} vs {self.rhs} : {verdict}{extra}"

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "lhs": _jsonable(self.lhs),
                "rhs": _jsonable(self.rhs), "detail": self.detail}


@dataclass(frozen=True)
class Report:
    title: str
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __bool__(self) -> bool:
        return self.passed

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]

    def to_json(self) -> dict:
        return {"title": self.title, "passed": self.passed,
                "checks": [c.to_json() for c in self.checks]}


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return str(x)
