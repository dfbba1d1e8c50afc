"""Structured pass/fail reporting shared by verification and round trips."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class CheckReport:
    """A titled list of named checks; every failure is kept, none masks
    another."""

    title: str
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def check_names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.checks)

    def require(self) -> "CheckReport":
        if not self.passed:
            lines = [f"{c.name}: {c.detail or 'failed'}" for c in self.failures()]
            raise AssertionError(f"{self.title}: " + "; ".join(lines))
        return self
