"""Pass/fail report shared by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    name: str
    checks: dict[str, bool] = field(default_factory=dict)
    data: dict[str, str] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, ok in self.checks.items() if not ok]

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checks": dict(self.checks),
                "data": dict(self.data), "notes": list(self.notes)}

    def to_text(self) -> str:
        lines = [f"{self.name}: {'PASS' if self.passed else 'FAIL'}"]
        lines += [f"  [{'ok' if ok else 'FAIL'}] {k}" for k, ok in self.checks.items()]
        lines += [f"  {k} = {v}" for k, v in self.data.items()]
        lines += [f"  note: {n}" for n in self.notes]
        return "\n".join(lines)
