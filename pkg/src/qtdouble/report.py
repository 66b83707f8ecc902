"""Machine-readable pass/fail reports shared by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "rows") and hasattr(x, "space"):
        return {"space": x.space, "dim": len(x.rows),
                "basis": [[str(c) for c in r] for r in x.rows]}
    return x


@dataclass
class Check:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"check": self.name, "status": "pass" if self.passed else "fail",
                "details": _jsonable(self.details)}


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)

    def add(self, name: str, passed: bool, **details) -> Check:
        c = Check(name, bool(passed), details)
        self.checks.append(c)
        return c

    def extend(self, other: "Report") -> "Report":
        for c in other.checks:
            self.checks.append(Check(f"{other.title}: {c.name}", c.passed, c.details))
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    def first_failure(self):
        for c in self.checks:
            if not c.passed:
                return c
        return None

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"report": self.title, "status": "pass" if self.passed else "fail",
                "checks": [c.to_dict() for c in self.checks]}

    def lines(self) -> list:
        out = [f"== {self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            out.append(f"  [{'pass' if c.passed else 'FAIL'}] {c.name}")
        return out
