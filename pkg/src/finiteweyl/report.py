"""Pass/fail reports produced by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    max_deviation: float
    tolerance: float
    elapsed: float = 0.0

    def to_json(self, include_timing: bool = False) -> dict:
        payload = {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "max_deviation": self.max_deviation,
            "tolerance": self.tolerance,
        }
        if include_timing:
            payload["elapsed"] = self.elapsed
        return payload


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(
        self,
        name: str,
        max_deviation: float,
        tolerance: float,
        elapsed: float = 0.0,
    ) -> Check:
        check = Check(
            name=name,
            passed=max_deviation <= tolerance,
            max_deviation=float(max_deviation),
            tolerance=float(tolerance),
            elapsed=elapsed,
        )
        self.checks.append(check)
        return check

    def add_flag(self, name: str, passed: bool, elapsed: float = 0.0) -> Check:
        """Boolean check; deviation is 0 on pass, 1 on fail."""
        return self.add(name, 0.0 if passed else 1.0, 0.0, elapsed)

    def extend(self, other: "VerificationReport") -> None:
        for check in other.checks:
            self.checks.append(
                Check(
                    name=f"{other.suite}.{check.name}",
                    passed=check.passed,
                    max_deviation=check.max_deviation,
                    tolerance=check.tolerance,
                    elapsed=check.elapsed,
                )
            )

    def to_json(self, include_timing: bool = False) -> dict:
        return {
            "suite": self.suite,
            "overall": "pass" if self.overall else "fail",
            "checks": [c.to_json(include_timing) for c in self.checks],
        }

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            lines.append(
                f"[{status}] {c.name}: deviation {c.max_deviation:.3e}"
                f" (tol {c.tolerance:.1e}, {c.elapsed * 1000:.1f} ms)"
            )
        lines.append(f"suite {self.suite}: {'pass' if self.overall else 'FAIL'}")
        return lines
