"""Executor backends: in-process MiniLang and the subprocess adapter.

Both produce execution reports in the shared schema:
{ "status": "pass"|"failure"|"error", "covered_arms": [int...],
  "arms_total": int, "coverage": float, "assertions_total": int,
  "assertions_executed": int, "diagnostic": str }
"""

import json
import re
import subprocess

from ..minilang import (
    ExecLimits, MissingSuiteError, ParseError, enumerate_branches,
    execute_suite, parse_program, parse_suite,
)

REPORT_KEYS = {
    "status", "covered_arms", "arms_total", "coverage",
    "assertions_total", "assertions_executed", "diagnostic",
}
_STATUSES = {"pass", "failure", "error"}


class AdapterError(Exception):
    """The subprocess runner violated the report protocol."""


def validate_report(report: dict) -> dict:
    if not isinstance(report, dict) or not REPORT_KEYS <= set(report):
        raise AdapterError("report missing required fields")
    if report["status"] not in _STATUSES:
        raise AdapterError(f"bad status {report['status']!r}")
    if not 0.0 <= report["coverage"] <= 1.0:
        raise AdapterError(f"coverage {report['coverage']} outside [0, 1]")
    return report


def _error_report(diagnostic: str) -> dict:
    return {
        "status": "error",
        "covered_arms": [],
        "arms_total": 0,
        "coverage": 0.0,
        "assertions_total": 0,
        "assertions_executed": 0,
        "diagnostic": diagnostic,
    }


class MiniLangExecutor:
    """Runs MiniLang suites against MiniLang candidates in process."""

    name = "minilang"

    def __init__(self, limits: ExecLimits = ExecLimits()):
        self.limits = limits

    def check_suite(self, source: str):
        """Structural syntax check: source parses as a single suite."""
        return parse_suite(source)

    def evaluate(self, solution_source: str, test_source: str) -> dict:
        try:
            prog = parse_program(solution_source)
        except ParseError as exc:
            return _error_report(f"candidate parse error: {exc}")
        try:
            suite = parse_suite(test_source)
        except (ParseError, MissingSuiteError) as exc:
            return _error_report(f"suite parse error: {exc}")
        report = execute_suite(prog, suite, self.limits)
        return report.to_dict(enumerate_branches(prog))


_TESTCASE_RE = re.compile(r"class\s+\w+\s*\([^)]*\bTestCase\b[^)]*\)")


class SubprocessExecutor:
    """Client for an external runner shim speaking the stdin/stdout
    JSON protocol (one request per process)."""

    name = "subprocess"

    def __init__(self, command, timeout_seconds: float = 10.0):
        if not command:
            raise ValueError("executor command required")
        self.command = list(command)
        self.timeout_seconds = timeout_seconds

    def check_suite(self, source: str):
        """Client-side structural check: at least one class extending the
        subject language's unit-test base type. The shim re-checks."""
        return source if _TESTCASE_RE.search(source) else None

    def evaluate(self, solution_source: str, test_source: str) -> dict:
        request = json.dumps({
            "solution_source": solution_source,
            "test_source": test_source,
            "timeout_seconds": self.timeout_seconds,
        })
        try:
            proc = subprocess.run(
                self.command, input=request, capture_output=True, text=True,
                timeout=self.timeout_seconds + 30.0)
        except (OSError, subprocess.TimeoutExpired) as exc:
            raise AdapterError(f"runner failed to execute: {exc}") from exc
        if proc.returncode != 0:
            raise AdapterError(
                f"runner exited {proc.returncode}: {proc.stderr.strip()[:500]}")
        try:
            report = json.loads(proc.stdout)
        except json.JSONDecodeError as exc:
            raise AdapterError(f"runner emitted invalid JSON: {exc}") from exc
        return validate_report(report)


def make_executor(name, *, command=None, limits=None, timeout_seconds=10.0):
    if name == "minilang":
        return MiniLangExecutor(limits or ExecLimits())
    if name == "subprocess":
        return SubprocessExecutor(command or [], timeout_seconds=timeout_seconds)
    raise ValueError(f"unknown executor {name!r}")
