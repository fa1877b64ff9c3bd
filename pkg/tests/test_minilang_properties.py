"""Property tests for the mini language: arm-count law, coverage
monotonicity, determinism, and agreement with the condition-trace
oracle on randomly generated programs."""

import random

from hypothesis import given, settings, strategies as st

from oracle import random_program, random_suite, trace_covered_arms
from verilab.minilang import (
    enumerate_branches, execute_suite, parse_program, parse_suite,
)
from verilab.minilang.nodes import If, While


def count_sites(prog):
    count = 0
    stack = [s for fn in prog.functions for s in fn.body]
    while stack:
        stmt = stack.pop()
        if isinstance(stmt, If):
            count += 1
            stack.extend(stmt.then_body)
            if stmt.else_body is not None:
                stack.extend(stmt.else_body)
        elif isinstance(stmt, While):
            count += 1
            stack.extend(stmt.body)
    return count


@given(st.integers(min_value=0, max_value=2 ** 32))
@settings(max_examples=100, deadline=None)
def test_arm_count_law(seed):
    prog = parse_program(random_program(random.Random(seed), max_branch_sites=5))
    assert len(enumerate_branches(prog)) == 2 * count_sites(prog)


@given(st.integers(min_value=0, max_value=2 ** 32))
@settings(max_examples=60, deadline=None)
def test_instrumentation_matches_trace_oracle(seed):
    rng = random.Random(seed)
    prog = parse_program(random_program(rng))
    suite = parse_suite(random_suite(rng))
    report = execute_suite(prog, suite)
    status, covered = trace_covered_arms(prog, suite)
    assert report.status == status
    assert report.covered_arm_ids == covered


@given(st.integers(min_value=0, max_value=2 ** 32))
@settings(max_examples=40, deadline=None)
def test_coverage_monotone_under_case_append(seed):
    rng = random.Random(seed)
    prog = parse_program(random_program(rng))
    small_src = random_suite(rng, error_prone=False)
    extra = random_suite(rng, error_prone=False)
    # graft the extra suite's cases onto the first, renamed to stay unique
    extra_cases = extra[extra.index("{") + 1:extra.rindex("}")].replace("case c", "case x")
    large_src = small_src[:small_src.rindex("}")] + extra_cases + "}"
    small = execute_suite(prog, parse_suite(small_src))
    large = execute_suite(prog, parse_suite(large_src))
    if small.status != "error" and large.status != "error":
        assert small.covered_arm_ids <= large.covered_arm_ids


@given(st.integers(min_value=0, max_value=2 ** 32))
@settings(max_examples=30, deadline=None)
def test_execution_is_deterministic(seed):
    rng = random.Random(seed)
    prog_src = random_program(rng)
    suite_src = random_suite(rng)
    first = execute_suite(parse_program(prog_src), parse_suite(suite_src))
    second = execute_suite(parse_program(prog_src), parse_suite(suite_src))
    assert first == second
