"""
Line-oriented `key = value` reports
"""
from enum import Enum
from typing import Any, List, Optional, Sequence

from pydantic import BaseModel, Field

from libs.moduli_service import ModuliReport, SmoothnessVerdict, Verdict


def format_value(value: Any) -> str:
    if value is None:
        return "undefined"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, (tuple, list)):
        return ",".join(format_value(v) for v in value)
    return str(value)


class Report(BaseModel):
    """Ordered report lines ending with an optional verdict line"""

    lines: List[str] = Field(default_factory=list)
    verdict: Optional[SmoothnessVerdict] = None

    def add(self, key: str, value: Any) -> "Report":
        self.lines.append(f"{key} = {format_value(value)}")
        return self

    def raw(self, lines: Sequence[str]) -> "Report":
        self.lines.extend(lines)
        return self

    def block(self, title: str, lines: Sequence[str]) -> "Report":
        self.lines.append(f"begin {title}")
        self.lines.extend(lines)
        self.lines.append(f"end {title}")
        return self

    def set_verdict(self, verdict: SmoothnessVerdict) -> "Report":
        self.verdict = verdict
        return self

    @property
    def out_of_scope(self) -> bool:
        return self.verdict is not None and self.verdict.verdict == Verdict.OUT_OF_SCOPE

    def render(self) -> str:
        lines = list(self.lines)
        if self.verdict is not None:
            lines.append(f"reason = {self.verdict.reason.value}")
            lines.append(f"verdict = {self.verdict.verdict.value}")
        return "\n".join(lines) + "\n"


def moduli_report(report: ModuliReport, with_dims: bool = True) -> Report:
    """Report lines for a ModuliReport"""
    out = Report()
    if report.genus is not None:
        out.add("genus", report.genus).add("n", report.n)
    else:
        out.add("dim_vector", report.dim_vector).add("n", report.n).add("p", report.p_value)
    out.add("admits_simples", report.admits_simples)
    if with_dims:
        out.add("rep_dim", report.rep_dim)
        out.add("quotient_dim", report.quotient_dim)
        out.add("hilb_dim", report.hilb_dim)
    return out.set_verdict(report.smooth)
