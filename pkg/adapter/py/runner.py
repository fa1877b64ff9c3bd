"""Execute a unittest suite against a solution file under branch tracing.

Usage: python3 runner.py <solution.py> <test.py>

Branch sites are the if/while/for statements of the solution source; each
site owns two arms (2*i = condition true, 2*i + 1 = condition false /
loop exit), numbered in depth-first source order. An arm counts as
covered when the corresponding control-flow arc out of the condition
line is observed at run time. A branchless solution reports coverage 1.0.

Prints one JSON object on stdout:
{ "status": "pass"|"failure"|"error", "covered_arms": [int...],
  "arms_total": int, "coverage": float, "diagnostic": str }
"""

import ast
import importlib.util
import io
import json
import sys
import unittest

EXIT_LINE = -1  # pseudo target for arcs that leave the frame


def collect_branch_sites(tree):
    """(condition line, taken-arm target line, miss-arm target line)
    triples in depth-first source order."""
    sites = []

    def walk(stmts):
        for idx, stmt in enumerate(stmts):
            if isinstance(stmt, (ast.If, ast.While, ast.For)):
                taken = stmt.body[0].lineno
                if stmt.orelse:
                    miss = stmt.orelse[0].lineno
                elif idx + 1 < len(stmts):
                    miss = stmts[idx + 1].lineno
                else:
                    miss = EXIT_LINE
                sites.append((stmt.lineno, taken, miss))
            for field in ("body", "orelse", "finalbody"):
                walk(getattr(stmt, field, None) or [])
            for handler in getattr(stmt, "handlers", None) or []:
                walk(handler.body)

    walk(tree.body)
    return sites


class ArcTracer:
    """Records (previous line, current line) arcs, plus (line, EXIT_LINE)
    on frame exit, for frames executing the given file."""

    def __init__(self, filename):
        self.filename = filename
        self.arcs = set()
        self._last = {}

    def _local(self, frame, event, arg):
        key = id(frame)
        if event == "line":
            prev = self._last.get(key)
            if prev is not None:
                self.arcs.add((prev, frame.f_lineno))
            self._last[key] = frame.f_lineno
        elif event == "return":
            prev = self._last.pop(key, None)
            if prev is not None:
                self.arcs.add((prev, EXIT_LINE))
        return self._local

    def _global(self, frame, event, arg):
        if frame.f_code.co_filename == self.filename:
            return self._local
        return None

    def __enter__(self):
        sys.settrace(self._global)
        return self

    def __exit__(self, *exc):
        sys.settrace(None)
        return False


def covered_arms(sites, arcs):
    arms = []
    for index, (head, taken, miss) in enumerate(sites):
        if (head, taken) in arcs:
            arms.append(2 * index)
        if (head, miss) in arcs:
            arms.append(2 * index + 1)
    return arms


def import_file(name, path):
    spec = importlib.util.spec_from_file_location(name, path)
    module = importlib.util.module_from_spec(spec)
    sys.modules[name] = module
    spec.loader.exec_module(module)
    return module


def emit(status, arms, arms_total, diagnostic):
    coverage = 1.0 if arms_total == 0 else len(arms) / arms_total
    json.dump({
        "status": status,
        "covered_arms": sorted(arms),
        "arms_total": arms_total,
        "coverage": coverage,
        "diagnostic": diagnostic,
    }, sys.stdout)
    sys.stdout.write("\n")


def first_summary(entries):
    test, trace = entries[0]
    last = [ln for ln in trace.strip().splitlines() if ln.strip()]
    return f"{test.id()}: {last[-1] if last else 'no detail'}"


def main():
    solution_path, test_path = sys.argv[1], sys.argv[2]
    with open(solution_path, encoding="utf-8") as handle:
        source = handle.read()
    try:
        sites = collect_branch_sites(ast.parse(source))
    except SyntaxError as exc:
        emit("error", [], 0, f"solution syntax error: {exc}")
        return
    arms_total = 2 * len(sites)

    tracer = ArcTracer(solution_path)
    try:
        with tracer:
            import_file("solution", solution_path)
    except BaseException as exc:
        emit("error", covered_arms(sites, tracer.arcs), arms_total,
             f"solution import failed: {exc!r}")
        return
    try:
        test_module = import_file("test_solution", test_path)
    except BaseException as exc:
        emit("error", covered_arms(sites, tracer.arcs), arms_total,
             f"test import failed: {exc!r}")
        return

    suite = unittest.defaultTestLoader.loadTestsFromModule(test_module)
    runner = unittest.TextTestRunner(stream=io.StringIO(), verbosity=0)
    with tracer:
        result = runner.run(suite)

    arms = covered_arms(sites, tracer.arcs)
    if result.errors:
        emit("error", arms, arms_total, first_summary(result.errors))
    elif result.failures:
        emit("failure", arms, arms_total, first_summary(result.failures))
    else:
        emit("pass", arms, arms_total, "")


if __name__ == "__main__":
    main()
