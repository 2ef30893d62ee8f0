"""Verification reports.

Every verifier returns a VerificationReport instead of raising on a failed
identity. The CLI turns reports into text or JSON and into the exit code.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Iterable, List

log = logging.getLogger(__name__)


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    suite: str
    results: List[CheckResult] = field(default_factory=list)

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        res = CheckResult(self.suite, name, bool(passed), detail)
        self.results.append(res)
        if res.passed:
            log.info("[%s] pass %s", self.suite, name)
        else:
            log.warning("[%s] FAIL %s %s", self.suite, name, detail)
        return res.passed

    def extend(self, other: "VerificationReport") -> None:
        self.results.extend(other.results)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def summary_line(self) -> str:
        n = len(self.results)
        bad = len(self.failures)
        status = "PASS" if bad == 0 else "FAIL"
        return f"[{self.suite}] {status} {n - bad}/{n}"

    def lines(self) -> List[str]:
        return [f"{'PASS' if r.passed else 'FAIL'} {r.name}" + (f" ({r.detail})" if r.detail and not r.passed else "") for r in self.results]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "results": [asdict(r) for r in self.results],
        }


def as_frame(reports: Iterable[VerificationReport]) -> Any:
    """One row per suite: checks, failures, status."""
    import pandas as pd

    rows = []
    for rep in reports:
        rows.append({
            "suite": rep.suite,
            "checks": len(rep.results),
            "failures": len(rep.failures),
            "status": "PASS" if rep.passed else "FAIL",
        })
    return pd.DataFrame(rows, columns=["suite", "checks", "failures", "status"])
