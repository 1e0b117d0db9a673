"""Pass/fail reports produced by the verification routines."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    expected: Any = None
    actual: Any = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  {self.name}"
        if not self.passed:
            text += f"  (expected {self.expected!r}, got {self.actual!r})"
        return text


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, expected: Any = None, actual: Any = None) -> Check:
        if any(c.name == name for c in self.checks):
            raise ValueError(f"duplicate check name {name!r}")
        check = Check(name, bool(passed), expected, actual)
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport") -> None:
        for c in other.checks:
            self.add(c.name, c.passed, c.expected, c.actual)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_text(self) -> str:
        lines = [c.line() for c in self.checks]
        n_fail = len(self.failures())
        lines.append(
            f"{len(self.checks)} checks, {n_fail} failed: {'PASS' if self.overall else 'FAIL'}"
        )
        return "\n".join(lines)

    def to_dict(self) -> dict[str, Any]:
        return {
            "overall": "pass" if self.overall else "fail",
            "checks": [
                {
                    "name": c.name,
                    "status": "pass" if c.passed else "fail",
                    "expected": c.expected,
                    "actual": c.actual,
                }
                for c in self.checks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)
