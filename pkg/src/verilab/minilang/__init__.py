"""MiniLang: a deterministic mini subject language for verification runs.

Parser, tree-walking interpreter, and branch-coverage instrumentation so
candidate programs and unit-test suites can be executed, classified, and
coverage-measured without an external runtime.
"""

from .branches import BranchArm, BranchMap, enumerate_branches
from .interpreter import (
    ERROR, FAILURE, PASS, ExecLimits, ExecutionReport, InconsistentReport,
    coverage, execute_suite,
)
from .lexer import ParseError, Token, tokenize
from .nodes import ProgramTree, SuiteTree
from .parser import MissingSuiteError, parse_program, parse_suite

__all__ = [
    "BranchArm", "BranchMap", "enumerate_branches",
    "ERROR", "FAILURE", "PASS", "ExecLimits", "ExecutionReport",
    "InconsistentReport", "coverage", "execute_suite",
    "ParseError", "Token", "tokenize",
    "ProgramTree", "SuiteTree",
    "MissingSuiteError", "parse_program", "parse_suite",
]
