"""End-to-end orchestration.

For every problem: compute reward breakdowns for each generated response,
execute every candidate x suite pair, build the pass matrix, select the
winner by majority voting, and attach a reliability bound report fed by
the run's empirical pass rate and coverage. Problems fail in isolation;
the summary lists any that did.
"""

import json
import os
import tempfile
from dataclasses import dataclass, field

from .. import metrics
from ..bounds import BoundInputs, PassMatrix, bound_report, majority_select
from ..minilang import ExecLimits, ParseError
from ..rewards import (
    ERROR, FAILURE, PASSED, OutcomeClass, RewardBreakdown, ShapingParams,
    extract_final_code_block, functionality_reward_augmented,
    functionality_reward_base, syntax_reward, total_reward,
)
from .corpus import load_corpus
from .executors import make_executor
from .quality import quality_report


@dataclass(frozen=True)
class RunConfig:
    corpus_path: str
    out_dir: str
    executor: str = "minilang"
    executor_command: tuple = ()
    timeout_seconds: float = 10.0
    alpha: float = 3.0
    reward_variant: str = "base"          # 'base' | 'augmented'
    step_budget: int = 1_000_000
    call_depth_limit: int = 256
    seed: int = 0
    q: float = 0.7132
    q_prime: float = 0.7693
    delta: float = 0.05
    d_hat_95: float | None = None          # precomputed normalizer clip point


def write_json_atomic(path: str, payload) -> None:
    """Serialize deterministically and rename into place."""
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    directory = os.path.dirname(path) or "."
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _build_executor(cfg: RunConfig):
    limits = ExecLimits(step_budget=cfg.step_budget,
                        call_depth_limit=cfg.call_depth_limit)
    return make_executor(cfg.executor, command=list(cfg.executor_command),
                         limits=limits, timeout_seconds=cfg.timeout_seconds)


def solution_difficulty(source: str, normalizer) -> tuple:
    """(D, d_hat, d_m) of a solution; non-MiniLang sources fall back to 0."""
    try:
        profile = metrics.static_profile(source)
    except ParseError:
        return 0.0, 0.0, 0.0
    d_h = metrics.normalized_halstead(profile.d_hat, normalizer)
    return metrics.sample_difficulty(d_h, profile.d_m), profile.d_hat, profile.d_m


def fit_corpus_normalizer(records, cfg: RunConfig):
    if cfg.d_hat_95 is not None:
        return metrics.CorpusNormalizer(d_hat_95=cfg.d_hat_95,
                                        corpus_size=len(records))
    d_hats = []
    for record in records:
        try:
            d_hats.append(metrics.static_profile(record.solution.text).d_hat)
        except ParseError:
            d_hats.append(0.0)
    return metrics.fit_normalizer(d_hats)


def compute_rewards(record, executor, normalizer, cfg: RunConfig) -> list:
    """Reward breakdown for every response, against the reference solution."""
    shaping = ShapingParams(alpha=cfg.alpha)
    difficulty, _, _ = solution_difficulty(record.solution.text, normalizer)
    results = []
    for resp_id, text in record.responses:
        r_syn, suite = syntax_reward(text, executor.check_suite)
        if r_syn < 0:
            breakdown = RewardBreakdown(r_syn=-1.0, r_func=None,
                                        r_cov_term=None, total=-1.0)
            results.append({"id": resp_id,
                            **breakdown.to_dict(outcome=None, coverage=None,
                                                difficulty=None)})
            continue
        suite_source = extract_final_code_block(text)
        report = executor.evaluate(record.solution.text, suite_source)
        status = report["status"]
        if status == "pass":
            outcome = OutcomeClass(kind=PASSED, cov=report["coverage"])
        elif status == "failure":
            outcome = OutcomeClass(kind=FAILURE)
        else:
            outcome = OutcomeClass(kind=ERROR)
        if cfg.reward_variant == "augmented":
            r_func = functionality_reward_augmented(outcome, shaping, difficulty)
            r_cov_term = (None if status != "pass"
                          else r_func / (1.0 + difficulty))
        else:
            r_func = functionality_reward_base(outcome)
            r_cov_term = None
        breakdown = RewardBreakdown(r_syn=1.0, r_func=r_func,
                                    r_cov_term=r_cov_term,
                                    total=total_reward(1.0, r_func))
        results.append({"id": resp_id,
                        **breakdown.to_dict(
                            outcome=status if status != "pass" else "passed",
                            coverage=report["coverage"] if status == "pass" else None,
                            difficulty=difficulty)})
    return results


def extract_suites(record, executor) -> list:
    """(response id, suite source) for every response whose final fenced
    block passes the executor's structural check."""
    suites = []
    for resp_id, text in record.responses:
        r_syn, suite = syntax_reward(text, executor.check_suite)
        if r_syn > 0:
            suites.append((resp_id, extract_final_code_block(text)))
    return suites


def run_selection(record, executor, cfg: RunConfig) -> dict:
    """Candidate x suite cross product, pass matrix, winner, bounds."""
    suites = extract_suites(record, executor)
    out = {"problem_id": record.problem_id,
           "suites": [sid for sid, _ in suites],
           "candidates": [c.origin_id for c in record.candidates]}
    if not record.candidates or not suites:
        out.update({"pass_matrix": [], "selected_index": None,
                    "selected_candidate": None, "quality": None,
                    "bound_report": None, "reports": []})
        return out
    reports = []
    rows = []
    for candidate in record.candidates:
        row = []
        for _, suite_source in suites:
            report = executor.evaluate(candidate.text, suite_source)
            reports.append(report)
            row.append(1 if report["status"] == "pass" else 0)
        rows.append(tuple(row))
    matrix = PassMatrix(rows=tuple(rows))
    selected = majority_select(matrix)
    quality = quality_report(reports)
    inputs = BoundInputs(
        q=cfg.q, q_prime=cfg.q_prime,
        p=quality.pr, c=quality.bc,
        n=len(record.candidates), m=len(suites),
        k=max(1, round(quality.an)),
        w=1.0 - cfg.q, delta=1.0 - cfg.q_prime,
    )
    out.update({
        "pass_matrix": [list(row) for row in rows],
        "selected_index": selected,
        "selected_candidate": record.candidates[selected].origin_id,
        "quality": quality.to_dict(),
        "bound_report": bound_report(inputs),
        "reports": reports,
    })
    return out


def run_pipeline(cfg: RunConfig, *, selection: bool = True,
                 rewards: bool = True) -> dict:
    """Run the configured stages over the whole corpus and write the
    output tree; returns the summary document."""
    records = load_corpus(cfg.corpus_path, need_candidates=selection)
    executor = _build_executor(cfg)
    normalizer = fit_corpus_normalizer(records, cfg)
    summary = {
        "config": {
            "executor": cfg.executor, "alpha": cfg.alpha,
            "reward_variant": cfg.reward_variant, "seed": cfg.seed,
            "q": cfg.q, "q_prime": cfg.q_prime,
            "d_hat_95": normalizer.d_hat_95,
        },
        "problems": [],
        "failed": [],
    }
    all_reports = []
    for record in records:
        entry = {"id": record.problem_id}
        problem_dir = os.path.join(cfg.out_dir, record.problem_id)
        try:
            if rewards and record.responses:
                reward_rows = compute_rewards(record, executor, normalizer, cfg)
                write_json_atomic(os.path.join(problem_dir, "rewards.json"),
                                  reward_rows)
                entry["rewards"] = len(reward_rows)
            if selection:
                sel = run_selection(record, executor, cfg)
                write_json_atomic(os.path.join(problem_dir, "selection.json"), sel)
                entry["selected_candidate"] = sel["selected_candidate"]
                all_reports.extend(sel["reports"])
        except Exception as exc:  # per-problem isolation
            summary["failed"].append({"id": record.problem_id, "error": str(exc)})
            continue
        summary["problems"].append(entry)
    if all_reports:
        summary["quality"] = quality_report(all_reports).to_dict()
    write_json_atomic(os.path.join(cfg.out_dir, "summary.json"), summary)
    return summary
