"""Validation reports: named axiom violations with witness tuples."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]

    def __str__(self):
        args = ", ".join(str(x) for x in self.witness)
        return f"{self.axiom}({args})"


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of a validation pass over some structure.

    ``passed`` is true exactly when ``violations`` is empty.
    """

    subject: str
    violations: tuple[Violation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def axioms_violated(self) -> list[str]:
        seen = []
        for v in self.violations:
            if v.axiom not in seen:
                seen.append(v.axiom)
        return seen

    def first(self, axiom: str) -> Violation | None:
        for v in self.violations:
            if v.axiom == axiom:
                return v
        return None

    def summary(self) -> str:
        if self.passed:
            return f"{self.subject}: valid"
        lines = [f"{self.subject}: INVALID ({len(self.violations)} violations)"]
        lines += [f"  {v}" for v in self.violations]
        return "\n".join(lines)


def make_report(subject: str, violations) -> AxiomReport:
    return AxiomReport(subject, tuple(Violation(a, tuple(w)) for a, w in violations))
