"""Reward calculus for verifier training runs.

Syntax reward, base and difficulty-augmented functionality rewards,
exponential coverage shaping, and the group-relative policy-optimization
math (standardized advantages, clipped surrogate, low-variance KL).
"""

import math
import re
from dataclasses import dataclass

ERROR = "error"
FAILURE = "failure"
PASSED = "passed"


class InconsistentInputs(ValueError):
    pass


class GroupTooSmall(ValueError):
    pass


class LengthMismatch(ValueError):
    pass


@dataclass(frozen=True)
class ShapingParams:
    alpha: float = 3.0

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")


@dataclass(frozen=True)
class GrpoParams:
    clip_eps: float = 0.2
    kl_coeff: float = 0.001
    group_size: int = 2
    sigma_floor: float = 1e-8


@dataclass(frozen=True)
class OutcomeClass:
    kind: str                # 'error' | 'failure' | 'passed'
    cov: float | None = None  # meaningful only when passed


@dataclass(frozen=True)
class RewardBreakdown:
    r_syn: float
    r_func: float | None
    r_cov_term: float | None
    total: float

    def to_dict(self, outcome: str | None = None,
                coverage: float | None = None,
                difficulty: float | None = None) -> dict:
        return {
            "r_syn": self.r_syn,
            "r_func": self.r_func,
            "total": self.total,
            "outcome": outcome,
            "coverage": coverage,
            "difficulty_D": difficulty,
        }


@dataclass(frozen=True)
class PolicyTrace:
    """Per-token log-probabilities of one output under three policies."""
    logp_new: tuple
    logp_old: tuple
    logp_ref: tuple

    def __post_init__(self):
        if not (len(self.logp_new) == len(self.logp_old) == len(self.logp_ref)):
            raise LengthMismatch("per-token log-prob lists differ in length")


_FENCE_RE = re.compile(r"```[^\n]*\n(.*?)```", re.DOTALL)


def extract_final_code_block(text: str) -> str | None:
    """Contents of the last triple-backtick fenced block.

    None when no fenced block exists, or when non-whitespace text follows
    the closing fence: the response must end with the code block.
    """
    matches = list(_FENCE_RE.finditer(text))
    if not matches:
        return None
    last = matches[-1]
    if text[last.end():].strip():
        return None
    return last.group(1)


def syntax_reward(text: str, check_suite) -> tuple:
    """(+1.0, parsed suite) when the final fenced block passes the
    executor's structural check, else (-1.0, None).

    check_suite is the active executor's checker: it takes the extracted
    source and returns a parsed suite, raising on any violation.
    """
    code = extract_final_code_block(text)
    if code is None:
        return -1.0, None
    try:
        suite = check_suite(code)
    except Exception:
        return -1.0, None
    if suite is None:
        return -1.0, None
    return 1.0, suite


def shaped_coverage_reward(cov: float, params: ShapingParams) -> float:
    """Exponential shaping normalized to r(0)=0, r(1)=1.

    Degenerates to the identity as alpha -> 0.
    """
    alpha = params.alpha
    if alpha < 1e-9:
        return cov
    return (math.exp(alpha * cov) - 1.0) / (math.exp(alpha) - 1.0)


def functionality_reward_base(outcome: OutcomeClass) -> float:
    """-2 on error, -1.5 on failure, +coverage when passed."""
    if outcome.kind == ERROR:
        return -2.0
    if outcome.kind == FAILURE:
        return -1.5
    return float(outcome.cov)


def functionality_reward_augmented(outcome: OutcomeClass, params: ShapingParams,
                                   difficulty: float) -> float:
    """Difficulty-weighted variant: failures are softened and passes are
    amplified on hard samples; matches the base failure value at D = 0.5.
    """
    if outcome.kind == ERROR:
        return -2.0
    if outcome.kind == FAILURE:
        return -1.0 - (1.0 - difficulty)
    return shaped_coverage_reward(float(outcome.cov), params) * (1.0 + difficulty)


def total_reward(r_syn: float, r_func: float | None) -> float:
    """r_syn alone on bad syntax; r_syn + r_func otherwise."""
    if r_syn == 1.0:
        if r_func is None:
            raise InconsistentInputs("r_func required when syntax is correct")
        return r_syn + r_func
    if r_func is not None:
        raise InconsistentInputs("r_func must be absent when syntax is incorrect")
    return r_syn


def group_advantages(rewards, sigma_floor: float = 1e-8) -> list:
    """Standardize rewards within a group: (r - mean) / population std.

    Degenerate groups (std below the floor) map to all-zero advantages.
    """
    group = [float(r) for r in rewards]
    if len(group) < 2:
        raise GroupTooSmall("need at least two rewards in a group")
    mean = sum(group) / len(group)
    var = sum((r - mean) ** 2 for r in group) / len(group)
    sigma = math.sqrt(var)
    if sigma < sigma_floor:
        return [0.0] * len(group)
    return [(r - mean) / sigma for r in group]


def kl_estimate(logp_new, logp_ref) -> float:
    """Nonnegative low-variance KL estimator, averaged over tokens:
    mean of exp(x) - x - 1 with x = logp_ref - logp_new.
    """
    if len(logp_new) != len(logp_ref):
        raise LengthMismatch("log-prob lists differ in length")
    if not logp_new:
        return 0.0
    total = 0.0
    for ln, lr in zip(logp_new, logp_ref):
        x = lr - ln
        total += math.exp(x) - x - 1.0
    return total / len(logp_new)


def grpo_objective(traces, advantages, params: GrpoParams) -> float:
    """Clipped-surrogate group objective minus the KL penalty.

    Token-level probability ratios against the old policy, sequence-level
    advantage broadcast, token-mean then group-mean aggregation.
    """
    if len(traces) < 2:
        raise GroupTooSmall("need at least two outputs in a group")
    if len(traces) != len(advantages):
        raise LengthMismatch("one advantage per output required")
    lo, hi = 1.0 - params.clip_eps, 1.0 + params.clip_eps
    surrogate = 0.0
    kl = 0.0
    for trace, adv in zip(traces, advantages):
        token_terms = []
        for ln, lo_p in zip(trace.logp_new, trace.logp_old):
            ratio = math.exp(ln - lo_p)
            clipped = min(max(ratio, lo), hi)
            token_terms.append(min(ratio * adv, clipped * adv))
        surrogate += sum(token_terms) / len(token_terms) if token_terms else 0.0
        kl += kl_estimate(trace.logp_new, trace.logp_ref)
    n = len(traces)
    return surrogate / n - params.kl_coeff * (kl / n)
