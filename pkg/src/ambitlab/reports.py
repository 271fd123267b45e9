"""
Line-oriented check reports.

Every command ends in a Report: an ordered list of ``CHECK <name> <STATUS> <detail>``
lines. INFO lines carry facts that are not claims (closed-form verdicts,
table profiles, computed values) and never affect the exit code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class CheckStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INFO = "INFO"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: CheckStatus
    detail: str = ""

    def line(self) -> str:
        text = f"CHECK {self.name} {self.status.value}"
        return f"{text} {self.detail}" if self.detail else text


@dataclass
class Report:
    results: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> CheckResult:
        result = CheckResult(name, CheckStatus.PASS if ok else CheckStatus.FAIL, detail)
        self.results.append(result)
        return result

    def info(self, name: str, detail: str) -> CheckResult:
        result = CheckResult(name, CheckStatus.INFO, detail)
        self.results.append(result)
        return result

    def extend(self, other: Report) -> None:
        self.results.extend(other.results)

    @property
    def failed(self) -> list[CheckResult]:
        return [r for r in self.results if r.status == CheckStatus.FAIL]

    @property
    def ok(self) -> bool:
        return not self.failed

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def get(self, name: str) -> CheckResult | None:
        return next((r for r in self.results if r.name == name), None)

    def render(self) -> str:
        return "".join(r.line() + "\n" for r in self.results)
