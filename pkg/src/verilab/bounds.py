"""Reliability math for unit-test majority voting.

Posterior correctness of a candidate that passed a test, the assertion
reliability threshold, suite-level pass probabilities, Hoeffding and
union-bound selection guarantees, the minimal-reliability / required-suite
calculators, and a seeded Monte Carlo simulator that checks the analytic
bounds empirically.
"""

import math
from dataclasses import dataclass

import numpy as np


class InvalidTargets(ValueError):
    pass


class MarginNonpositive(ValueError):
    pass


class DegenerateConfig(ValueError):
    pass


@dataclass(frozen=True)
class PassMatrix:
    """N x M binary outcomes: row i, column j is 1 iff candidate i passed
    suite j in full."""
    rows: tuple  # of tuples of 0/1

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise ValueError("matrix must be at least 1x1")
        width = len(self.rows[0])
        for row in self.rows:
            if len(row) != width:
                raise ValueError("ragged matrix")
            if any(entry not in (0, 1) for entry in row):
                raise ValueError("entries must be 0 or 1")


@dataclass(frozen=True)
class BoundInputs:
    q: float        # prior correctness probability
    q_prime: float  # target post-selection correctness
    p: float        # per-assertion reliability
    c: float        # average branch coverage
    n: int          # candidate count
    m: int          # suites per candidate
    k: int = 1      # assertions per suite
    w: float = 1.0  # wrong fraction
    delta: float = 0.05


@dataclass(frozen=True)
class SuiteModel:
    alpha_c: float  # suite passes on a correct candidate
    alpha_w: float  # suite passes on a wrong candidate


@dataclass(frozen=True)
class SimConfig:
    trials: int
    seed: int
    alpha_c: float
    alpha_w: float
    n: int
    w: float
    m: int


@dataclass(frozen=True)
class SimResult:
    wrong_rate: float
    trials: int
    wilson_low: float
    wilson_high: float


def majority_select(matrix: PassMatrix) -> int:
    """Index of the row with the most passed suites; ties go to the
    lowest index."""
    sums = [sum(row) for row in matrix.rows]
    return max(range(len(sums)), key=lambda i: (sums[i], -i))


def posterior_correct(q: float, p: float, c: float) -> float:
    """P(correct | passed one test) by Bayes with coverage-approximated
    wrong-code pass probability 1 - p*c."""
    c = min(max(c, 0.0), 1.0)
    numer = q * p
    denom = q * p + (1.0 - q) * (1.0 - p * c)
    if denom == 0.0:
        return 0.0
    return numer / denom


def single_test_threshold(c: float) -> float:
    """Assertion reliability above which one passed test raises the
    posterior: 1 / (1 + c)."""
    return 1.0 / (1.0 + c)


def suite_pass_probs(p: float, c: float, k: int) -> SuiteModel:
    """alpha_c = p^K, alpha_w = (1 - p*c)^K."""
    return SuiteModel(alpha_c=p ** k, alpha_w=(1.0 - p * c) ** k)


def hoeffding_beta(m: int, margin: float) -> float:
    """One-sided Hoeffding bound on a wrong candidate matching the
    correct one: exp(-M * Delta^2 / 2)."""
    return math.exp(-m * margin ** 2 / 2.0)


def wrong_selection_bound(n: int, w: float, m: int, margin: float) -> float:
    """Union bound over wrong candidates, clamped to 1."""
    return min(1.0, w * n * hoeffding_beta(m, margin))


def required_margin(n: int, w: float, m: int, delta: float,
                    variant: str = "hoeffding") -> float:
    """Smallest margin Delta meeting the union-bound target delta.

    'hoeffding' inverts beta = exp(-M Delta^2 / 2): sqrt(2 ln(WN/d) / M).
    'half' is the alternative sqrt(ln(WN/d) / (2M)) form, kept for
    comparison only.
    """
    if w * n <= delta:
        return 0.0
    log_term = math.log(w * n / delta)
    if variant == "hoeffding":
        return math.sqrt(2.0 * log_term / m)
    if variant == "half":
        return math.sqrt(log_term / (2.0 * m))
    raise ValueError(f"unknown variant {variant!r}")


def min_assertion_reliability(q: float, q_prime: float, n: int, m: int,
                              c: float) -> tuple:
    """(p_min, feasible): minimal per-assertion reliability for the
    selection target, capped at 1 with feasible=False past the cap."""
    if q_prime <= q:
        raise InvalidTargets("target correctness must exceed the prior")
    log_arg = (1.0 - q) / (1.0 - q_prime) * n
    sqrt_term = math.sqrt(2.0 / m * math.log(log_arg)) if log_arg > 1.0 else 0.0
    p_min = (1.0 + sqrt_term) / (1.0 + c)
    if p_min > 1.0:
        return 1.0, False
    return p_min, True


def required_suites(q: float, q_prime: float, n: int, c: float,
                    p: float) -> tuple:
    """(real M, ceil M): suites per candidate needed at reliability p."""
    if q_prime <= q:
        raise InvalidTargets("target correctness must exceed the prior")
    margin = (1.0 + c) * p - 1.0
    if margin <= 0.0:
        raise MarginNonpositive("(1 + c) * p must exceed 1")
    m_real = 2.0 * math.log((1.0 - q) / (1.0 - q_prime) * n) / margin ** 2
    return m_real, math.ceil(m_real)


def wilson_interval(successes: int, trials: int, z: float = 1.959963984540054) -> tuple:
    """Wilson score 95% interval for a binomial proportion."""
    if trials == 0:
        return 0.0, 1.0
    phat = successes / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = (phat + z2 / (2.0 * trials)) / denom
    half = z * math.sqrt(phat * (1.0 - phat) / trials + z2 / (4.0 * trials ** 2)) / denom
    low = 0.0 if successes == 0 else max(0.0, center - half)
    high = 1.0 if successes == trials else min(1.0, center + half)
    return low, high


def simulate_selection(cfg: SimConfig) -> SimResult:
    """Empirical wrong-selection rate of majority voting under the
    binomial suite-pass model.

    Candidate order is shuffled per trial (seeded) before the
    lowest-index tie-break so the correct-first layout cannot bias the
    rate downward. Reproducible for equal seeds regardless of trial
    partitioning.
    """
    if cfg.trials < 1:
        raise DegenerateConfig("need at least one trial")
    n_wrong = int(cfg.w * cfg.n)
    n_correct = cfg.n - n_wrong
    if n_wrong < 1 or n_correct < 1:
        raise DegenerateConfig("need at least one correct and one wrong candidate")
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    correct = rng.binomial(cfg.m, cfg.alpha_c, size=(cfg.trials, n_correct))
    wrong = rng.binomial(cfg.m, cfg.alpha_w, size=(cfg.trials, n_wrong))
    counts = np.concatenate([correct, wrong], axis=1)
    perms = rng.permuted(
        np.broadcast_to(np.arange(cfg.n), (cfg.trials, cfg.n)).copy(), axis=1)
    shuffled = np.take_along_axis(counts, perms, axis=1)
    picked = np.argmax(shuffled, axis=1)  # first maximum wins
    original = np.take_along_axis(perms, picked[:, None], axis=1)[:, 0]
    wrong_picks = int(np.count_nonzero(original >= n_correct))
    low, high = wilson_interval(wrong_picks, cfg.trials)
    return SimResult(
        wrong_rate=wrong_picks / cfg.trials,
        trials=cfg.trials,
        wilson_low=low,
        wilson_high=high,
    )


def bound_report(inputs: BoundInputs) -> dict:
    """Full analytic report over one set of inputs, in the shared
    serialization layout."""
    model = suite_pass_probs(inputs.p, inputs.c, inputs.k)
    margin = model.alpha_c - model.alpha_w
    beta = hoeffding_beta(inputs.m, margin) if margin >= 0 else 1.0
    union = wrong_selection_bound(inputs.n, inputs.w, inputs.m, max(margin, 0.0))
    p_min, p_feasible = min_assertion_reliability(
        inputs.q, inputs.q_prime, inputs.n, inputs.m, inputs.c)
    try:
        m_real, m_ceil = required_suites(
            inputs.q, inputs.q_prime, inputs.n, inputs.c, inputs.p)
        m_feasible = True
    except MarginNonpositive:
        m_real, m_ceil, m_feasible = None, None, False
    return {
        "inputs": {
            "q": inputs.q, "q_prime": inputs.q_prime, "p": inputs.p,
            "c": inputs.c, "n": inputs.n, "m": inputs.m, "k": inputs.k,
            "w": inputs.w, "delta": inputs.delta,
        },
        "p_star": single_test_threshold(inputs.c),
        "alpha_c": model.alpha_c,
        "alpha_w": model.alpha_w,
        "margin": margin,
        "beta": beta,
        "union_bound": union,
        "required_M": m_real,
        "required_M_ceil": m_ceil,
        "p_min": p_min,
        "feasible": p_feasible and m_feasible,
    }
