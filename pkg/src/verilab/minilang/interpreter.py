"""Tree-walking interpreter with branch-coverage instrumentation.

Runs a parsed test suite against a parsed subject program. Each case gets
a fresh variable environment but shares the program's function table.
Status precedence is error > failure > pass; a false assertion aborts its
case but later cases still run (coverage keeps accumulating), while a
runtime fault halts the whole execution.

Values are ints and bools only. Conditions must be bools; arithmetic and
ordering require ints; equality requires matching types. A function body
that falls off the end yields 0.
"""

from dataclasses import dataclass

from .branches import BranchMap, enumerate_branches, site_arm_ids
from .nodes import (
    AssertStmt, Assign, Binary, BoolLit, Call, ExprStmt, If, IntLit, Let,
    Name, ProgramTree, Return, SuiteTree, Unary, While,
)

PASS = "pass"
FAILURE = "failure"
ERROR = "error"


@dataclass(frozen=True)
class ExecLimits:
    step_budget: int = 1_000_000
    call_depth_limit: int = 256

    def __post_init__(self):
        if self.step_budget <= 0 or self.call_depth_limit <= 0:
            raise ValueError("limits must be strictly positive")


@dataclass(frozen=True)
class ExecutionReport:
    status: str                   # 'pass' | 'failure' | 'error'
    covered_arm_ids: frozenset
    assertions_executed: int
    assertions_total: int
    diagnostic: str

    def to_dict(self, branches: BranchMap) -> dict:
        return {
            "status": self.status,
            "covered_arms": sorted(self.covered_arm_ids),
            "arms_total": len(branches),
            "coverage": coverage(self, branches),
            "assertions_total": self.assertions_total,
            "assertions_executed": self.assertions_executed,
            "diagnostic": self.diagnostic,
        }


class InconsistentReport(Exception):
    """Report's covered arms do not fit the given branch map."""


def _trunc_div(a: int, b: int) -> int:
    # Integer division truncating toward zero, exact for arbitrary ints.
    q = abs(a) // abs(b)
    return -q if (a < 0) != (b < 0) else q


class _RuntimeFault(Exception):
    def __init__(self, message, span):
        super().__init__(f"{span.line}:{span.col}: {message}")


class _AssertionFalse(Exception):
    pass


class _ReturnSignal(Exception):
    def __init__(self, value):
        self.value = value


class _Interp:
    def __init__(self, prog: ProgramTree, limits: ExecLimits):
        self.functions = {fn.name: fn for fn in prog.functions}
        self.arm_of = site_arm_ids(prog)
        self.covered = set()
        self.limits = limits
        self.steps = 0
        self.depth = 0
        self.assertions_executed = 0

    def tick(self, span):
        self.steps += 1
        if self.steps > self.limits.step_budget:
            raise _RuntimeFault("step budget exhausted", span)

    def record_branch(self, node, taken: bool):
        arms = self.arm_of.get(id(node))
        if arms is not None:
            self.covered.add(arms[0] if taken else arms[1])

    def exec_stmts(self, stmts, env, in_case: bool):
        for stmt in stmts:
            self.tick(stmt.span)
            if isinstance(stmt, Let):
                env[stmt.name] = self.eval(stmt.value, env)
            elif isinstance(stmt, Assign):
                if stmt.name not in env:
                    raise _RuntimeFault(f"assignment to undefined variable {stmt.name!r}", stmt.span)
                env[stmt.name] = self.eval(stmt.value, env)
            elif isinstance(stmt, If):
                cond = self.bool_value(stmt.cond, env)
                self.record_branch(stmt, cond)
                self.exec_stmts(stmt.then_body if cond else (stmt.else_body or ()), env, in_case)
            elif isinstance(stmt, While):
                while True:
                    self.tick(stmt.span)
                    cond = self.bool_value(stmt.cond, env)
                    self.record_branch(stmt, cond)
                    if not cond:
                        break
                    self.exec_stmts(stmt.body, env, in_case)
            elif isinstance(stmt, Return):
                if in_case:
                    raise _RuntimeFault("return outside function", stmt.span)
                raise _ReturnSignal(self.eval(stmt.value, env))
            elif isinstance(stmt, ExprStmt):
                self.eval(stmt.value, env)
            elif isinstance(stmt, AssertStmt):
                value = self.eval(stmt.value, env)
                if not isinstance(value, bool):
                    raise _RuntimeFault("assertion expression is not a boolean", stmt.span)
                self.assertions_executed += 1
                if not value:
                    raise _AssertionFalse()

    def bool_value(self, expr, env) -> bool:
        value = self.eval(expr, env)
        if not isinstance(value, bool):
            raise _RuntimeFault("condition is not a boolean", expr.span)
        return value

    def eval(self, expr, env):
        self.tick(expr.span)
        if isinstance(expr, IntLit):
            return expr.value
        if isinstance(expr, BoolLit):
            return expr.value
        if isinstance(expr, Name):
            if expr.ident not in env:
                raise _RuntimeFault(f"undefined variable {expr.ident!r}", expr.span)
            return env[expr.ident]
        if isinstance(expr, Unary):
            value = self.eval(expr.operand, env)
            if expr.op == "!":
                if not isinstance(value, bool):
                    raise _RuntimeFault("'!' requires a boolean", expr.span)
                return not value
            if not (isinstance(value, int) and not isinstance(value, bool)):
                raise _RuntimeFault("unary '-' requires an integer", expr.span)
            return -value
        if isinstance(expr, Binary):
            return self.eval_binary(expr, env)
        if isinstance(expr, Call):
            return self.call(expr, env)
        raise _RuntimeFault("unknown expression", expr.span)  # pragma: no cover

    def eval_binary(self, expr, env):
        op = expr.op
        if op in ("&&", "||"):
            left = self.eval(expr.left, env)
            if not isinstance(left, bool):
                raise _RuntimeFault(f"{op!r} requires booleans", expr.span)
            # Short-circuit; not a branch site by design.
            if op == "&&" and not left:
                return False
            if op == "||" and left:
                return True
            right = self.eval(expr.right, env)
            if not isinstance(right, bool):
                raise _RuntimeFault(f"{op!r} requires booleans", expr.span)
            return right
        left = self.eval(expr.left, env)
        right = self.eval(expr.right, env)
        if op in ("==", "!="):
            if isinstance(left, bool) != isinstance(right, bool):
                raise _RuntimeFault("equality operands have mismatched types", expr.span)
            return (left == right) if op == "==" else (left != right)
        for value in (left, right):
            if not (isinstance(value, int) and not isinstance(value, bool)):
                raise _RuntimeFault(f"{op!r} requires integers", expr.span)
        if op == "+":
            return left + right
        if op == "-":
            return left - right
        if op == "*":
            return left * right
        if op == "/":
            if right == 0:
                raise _RuntimeFault("division by zero", expr.span)
            return _trunc_div(left, right)
        if op == "%":
            if right == 0:
                raise _RuntimeFault("modulo by zero", expr.span)
            return left - _trunc_div(left, right) * right
        if op == "<":
            return left < right
        if op == "<=":
            return left <= right
        if op == ">":
            return left > right
        if op == ">=":
            return left >= right
        raise _RuntimeFault(f"unknown operator {op!r}", expr.span)  # pragma: no cover

    def call(self, expr: Call, env):
        fn = self.functions.get(expr.func)
        if fn is None:
            raise _RuntimeFault(f"undefined function {expr.func!r}", expr.span)
        if len(expr.args) != len(fn.params):
            raise _RuntimeFault(
                f"{expr.func!r} expects {len(fn.params)} argument(s), got {len(expr.args)}",
                expr.span)
        args = [self.eval(arg, env) for arg in expr.args]
        self.depth += 1
        if self.depth > self.limits.call_depth_limit:
            self.depth -= 1
            raise _RuntimeFault("call depth limit exceeded", expr.span)
        local = dict(zip(fn.params, args))
        try:
            self.exec_stmts(fn.body, local, in_case=False)
        except _ReturnSignal as ret:
            return ret.value
        finally:
            self.depth -= 1
        return 0  # fell off the end of the function body


def execute_suite(prog: ProgramTree, suite: SuiteTree,
                  limits: ExecLimits = ExecLimits()) -> ExecutionReport:
    """Run every case of the suite against the program.

    Deterministic: identical inputs yield identical reports.
    """
    interp = _Interp(prog, limits)
    assertions_total = suite.assertion_count()
    any_failure = False
    diagnostic = ""
    for case in suite.cases:
        env = {}
        try:
            interp.exec_stmts(case.stmts, env, in_case=True)
        except _AssertionFalse:
            any_failure = True
            if not diagnostic:
                diagnostic = f"assertion failed in case {case.name!r}"
        except _RuntimeFault as fault:
            return ExecutionReport(
                status=ERROR,
                covered_arm_ids=frozenset(interp.covered),
                assertions_executed=interp.assertions_executed,
                assertions_total=assertions_total,
                diagnostic=str(fault),
            )
    return ExecutionReport(
        status=FAILURE if any_failure else PASS,
        covered_arm_ids=frozenset(interp.covered),
        assertions_executed=interp.assertions_executed,
        assertions_total=assertions_total,
        diagnostic=diagnostic,
    )


def coverage(report: ExecutionReport, branches: BranchMap) -> float:
    """Fraction of branch arms covered; a branchless program counts as 1.0."""
    universe = branches.arm_ids()
    if not report.covered_arm_ids <= universe:
        raise InconsistentReport("covered arms outside the program's branch map")
    if not universe:
        return 1.0
    return len(report.covered_arm_ids) / len(universe)
