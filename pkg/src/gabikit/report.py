from __future__ import annotations

from dataclasses import dataclass, field


FAIL = "FAIL"
FAULT = "FAULT"
NOTE = "NOTE"


@dataclass(frozen=True)
class Finding:
    label: str
    witness: str
    detail: str
    severity: str = FAIL

    def line(self) -> str:
        at = f" at {self.witness}" if self.witness else ""
        return f"{self.label} {self.severity}{at}: {self.detail}"


@dataclass
class Report:
    """Outcome of a check: failed identities plus named facts.

    A report passes when it holds no FAIL or FAULT findings; NOTE findings
    are informational.
    """

    title: str
    findings: list[Finding] = field(default_factory=list)
    facts: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not any(f.severity in (FAIL, FAULT) for f in self.findings)

    @property
    def faults(self) -> list[Finding]:
        return [f for f in self.findings if f.severity == FAULT]

    def fail(self, label: str, witness: str, detail: str, severity: str = FAIL) -> None:
        self.findings.append(Finding(label, witness, detail, severity))

    def failed(self, label: str) -> bool:
        return any(f.label == label and f.severity != NOTE for f in self.findings)

    def absorb(self, other: Report, prefix: str = "") -> None:
        for f in other.findings:
            self.findings.append(Finding(prefix + f.label, f.witness, f.detail, f.severity))
        for k, v in other.facts.items():
            self.facts[prefix + k] = v

    def __bool__(self) -> bool:
        return self.passed

    def __str__(self) -> str:
        head = f"{self.title}: {'PASS' if self.passed else 'FAIL'}"
        return "\n".join([head] + ["  " + f.line() for f in self.findings])
