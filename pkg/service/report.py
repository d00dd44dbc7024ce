# service/report.py

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: object = None

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "witness": self.witness}


@dataclass
class Report:
    """Именованные проверки; у каждого провала есть конкретный свидетель"""
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(self, name, passed, witness=None) -> bool:
        self.checks.append(Check(name, bool(passed), None if passed else witness))
        return bool(passed)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for check in other.checks:
            self.checks.append(Check(prefix + check.name, check.passed, check.witness))

    def failures(self) -> list[Check]:
        return [check for check in self.checks if not check.passed]

    def get(self, name) -> Check:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"overall": self.overall, "checks": [check.to_json() for check in self.checks]}

    def render(self) -> str:
        lines = []
        for check in self.checks:
            status = "ok" if check.passed else "FAIL"
            line = f"[{status}] {check.name}"
            if not check.passed and check.witness is not None:
                line += f": {check.witness}"
            lines.append(line)
        lines.append(f"overall: {'pass' if self.overall else 'fail'}")
        return "\n".join(lines)


VerificationReport = Report
