"""Check reports: a count of cases examined plus the violations found."""
from dataclasses import dataclass, field
from fractions import Fraction


def format_value(value):
    """Stable human-readable rendering used in reports and JSON output."""
    if isinstance(value, tuple):
        if len(value) == 1:
            return format_value(value[0])
        return "(" + ", ".join(format_value(v) for v in value) + ")"
    if isinstance(value, Fraction):
        return str(value)
    return str(value)


@dataclass
class Report:
    check: str
    pairs_checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.violations

    @property
    def witness(self):
        """The first violation in canonical order, or None."""
        return self.violations[0] if self.violations else None

    def add(self, *violation):
        self.violations.append(violation)

    def to_dict(self, limit=None):
        shown = self.violations if limit is None else self.violations[:limit]
        return {
            "check": self.check,
            "pairs_checked": self.pairs_checked,
            "passed": self.passed,
            "violation_count": len(self.violations),
            "violations": [[format_value(v) for v in viol] for viol in shown],
        }

    def summary(self):
        if self.passed:
            return "PASS"
        return "FAIL (witness " + ", ".join(format_value(v) for v in self.witness) + ")"


# IsometryReport rows are (x, y, |x - y|, |f(x) - f(y)|).
IsometryReport = Report
