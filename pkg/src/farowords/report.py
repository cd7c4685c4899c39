from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of an exhaustive check: how many cases ran, which ones failed."""

    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def merge(self, other: "Report") -> "Report":
        return Report(
            self.name,
            self.checked + other.checked,
            self.failures + other.failures,
            self.notes + other.notes,
        )

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        line = f"{status} {self.name}: {self.checked} checked"
        if self.failures:
            line += f", {len(self.failures)} failed (first: {self.failures[0]})"
        return line

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "failures": self.failures,
            "notes": self.notes,
        }
