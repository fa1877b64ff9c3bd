"""Aggregate test-quality metrics over execution reports.

PR / FR / ER are the pass, failure, and error fractions; BC is the mean
coverage over passed runs (0 when none passed); AN is the mean static
assertion count over all runs.
"""

from dataclasses import dataclass


class EmptyInput(ValueError):
    pass


@dataclass(frozen=True)
class QualityReport:
    pr: float
    fr: float
    er: float
    bc: float
    an: float

    def to_dict(self) -> dict:
        return {"pr": self.pr, "fr": self.fr, "er": self.er,
                "bc": self.bc, "an": self.an}


def quality_report(reports) -> QualityReport:
    """Summarize a nonempty collection of shared-schema report dicts."""
    reports = list(reports)
    if not reports:
        raise EmptyInput("no execution reports to aggregate")
    n = len(reports)
    passes = [r for r in reports if r["status"] == "pass"]
    failures = sum(1 for r in reports if r["status"] == "failure")
    errors = sum(1 for r in reports if r["status"] == "error")
    bc = sum(r["coverage"] for r in passes) / len(passes) if passes else 0.0
    an = sum(r["assertions_total"] for r in reports) / n
    return QualityReport(
        pr=len(passes) / n,
        fr=failures / n,
        er=errors / n,
        bc=bc,
        an=an,
    )
