"""Verification reports and their JSON / markdown renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .formal import Poly
from .quadric import subquadric_dim


@dataclass(frozen=True)
class ParamTuple:
    """Parameter tuple (n, m, j) with the derived subquadric data."""

    n: int
    m: int = 0
    j: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("parameter tuple needs n >= 1, got n=%d" % self.n)
        if not 0 <= self.j <= self.m:
            raise ValueError(
                "parameter tuple needs 0 <= j <= m, got j=%d, m=%d" % (self.j, self.m)
            )

    @property
    def t(self) -> int:
        return subquadric_dim(self.n)[0]

    @property
    def d(self) -> int:
        return subquadric_dim(self.n)[1]

    @property
    def s_remainder(self) -> int:
        return self.n - self.d


@dataclass
class Report:
    """Outcome of one check at one parameter tuple.

    ``status`` is "pass" exactly when the residual polynomial is empty; a
    failing report carries the full surviving residual so a regression can be
    diagnosed from the report alone.
    """

    check: str
    params: ParamTuple
    residual: Poly
    duration_ms: int = 0
    note: str = ""
    status: str = field(init=False)

    def __post_init__(self):
        self.status = "pass" if self.residual.is_zero() else "fail"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_obj(self) -> dict:
        return {
            "check": self.check,
            "params": {
                "n": self.params.n,
                "m": self.params.m,
                "j": self.params.j,
                "t": self.params.t,
                "d": self.params.d,
            },
            "status": self.status,
            "residual": [
                {"coeff": c, "monomial": [str(s) for s in mono]}
                for mono, c in self.residual.sorted_terms()
            ],
            "duration_ms": self.duration_ms,
        }


def sort_reports(reports: list[Report]) -> list[Report]:
    return sorted(
        reports, key=lambda r: (r.check, r.params.n, r.params.m, r.params.j)
    )


def render_json(reports: list[Report]) -> str:
    return json.dumps([r.to_json_obj() for r in sort_reports(reports)], indent=2)


def render_markdown(reports: list[Report]) -> str:
    """One table per check, mirroring the JSON report."""
    reports = sort_reports(reports)
    lines: list[str] = []
    by_check: dict[str, list[Report]] = {}
    for r in reports:
        by_check.setdefault(r.check, []).append(r)
    total = len(reports)
    failed = sum(1 for r in reports if not r.passed)
    lines.append("# Verification report")
    lines.append("")
    lines.append("%d checks, %d failed." % (total, failed))
    for check, group in by_check.items():
        lines.append("")
        lines.append("## %s" % check)
        lines.append("")
        lines.append("| n | m | j | t | d | status | residual | ms | note |")
        lines.append("|---|---|---|---|---|--------|----------|----|------|")
        for r in group:
            residual = repr(r.residual) if not r.passed else ""
            lines.append(
                "| %d | %d | %d | %d | %d | %s | %s | %d | %s |"
                % (
                    r.params.n,
                    r.params.m,
                    r.params.j,
                    r.params.t,
                    r.params.d,
                    r.status,
                    residual,
                    r.duration_ms,
                    r.note,
                )
            )
    lines.append("")
    return "\n".join(lines)
