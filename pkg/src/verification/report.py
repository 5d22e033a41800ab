from dataclasses import dataclass, field
from typing import Any, List, Optional


PASS = "pass"
FAIL = "fail"
ERROR = "error"

# contraejemplos guardados por comprobación
MAX_COUNTEREXAMPLES = 5


@dataclass
class CheckResult:
    """Resultado de una comprobación sobre un grafo."""
    name: str
    group: str
    scope: str
    status: str
    checked: int = 0
    counterexamples: List[Any] = field(default_factory=list)
    error: Optional[str] = None
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self, timings: bool = False) -> dict:
        data = {
            "name": self.name,
            "group": self.group,
            "scope": self.scope,
            "status": self.status,
            "checked": self.checked,
            "counterexamples": self.counterexamples[:MAX_COUNTEREXAMPLES],
        }
        if self.error is not None:
            data["error"] = self.error
        if timings:
            data["seconds"] = round(self.seconds, 3)
        return data


@dataclass
class VerificationReport:
    seed: int
    graphs: List[str]
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failed(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_json(self, timings: bool = False) -> dict:
        return {
            "seed": self.seed,
            "graphs": self.graphs,
            "passed": self.passed,
            "checks": [r.to_json(timings) for r in self.results],
        }
