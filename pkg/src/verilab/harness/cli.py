"""Command-line interface.

Subcommands: verify (selection pipeline), rewards (reward computation),
metrics (static profiles), bounds (analytic calculators), simulate
(Monte Carlo), quality (aggregate PR/FR/ER/BC/AN).

Exit codes: 0 success, 1 usage error, 2 corpus/schema error,
3 adapter protocol error.
"""

import argparse
import json
import sys

from ..bounds import BoundInputs, SimConfig, bound_report, simulate_selection
from ..metrics import static_profile
from ..minilang import ParseError
from .corpus import IoError, SchemaError, load_corpus
from .executors import AdapterError
from .pipeline import RunConfig, run_pipeline, run_selection, _build_executor, \
    fit_corpus_normalizer
from .quality import quality_report


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_run_args(sub):
    sub.add_argument("--config", help="JSON config file; flags override it")
    sub.add_argument("--corpus", help="corpus JSON path")
    sub.add_argument("--out", help="output directory")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--executor", choices=["minilang", "subprocess"])
    sub.add_argument("--executor-command", nargs="+", default=None,
                     help="runner command for the subprocess executor")
    sub.add_argument("--alpha", type=float, default=None)
    sub.add_argument("--variant", choices=["base", "augmented"], default=None)


def _run_config(args, parser) -> RunConfig:
    settings = {}
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as handle:
                settings = json.load(handle)
        except (OSError, json.JSONDecodeError) as exc:
            raise SchemaError(f"cannot read config: {exc}") from exc
    overrides = {
        "corpus_path": args.corpus,
        "out_dir": args.out,
        "seed": args.seed,
        "executor": args.executor,
        "executor_command": tuple(args.executor_command or ()) or None,
        "alpha": args.alpha,
        "reward_variant": args.variant,
    }
    for key, value in overrides.items():
        if value is not None:
            settings[key] = value
    if not settings.get("corpus_path"):
        parser.error("a corpus is required (--corpus or config)")
    settings.setdefault("out_dir", "out")
    if "executor_command" in settings:
        settings["executor_command"] = tuple(settings["executor_command"])
    return RunConfig(**settings)


def main(argv=None) -> int:
    parser = _Parser(prog="verilab",
                     description="Code-verification laboratory")
    subs = parser.add_subparsers(dest="command", required=True)

    for name in ("verify", "rewards", "quality"):
        _add_run_args(subs.add_parser(name))

    m = subs.add_parser("metrics", help="static profiles of corpus solutions")
    m.add_argument("--corpus", required=True)
    m.add_argument("--config", default=None)

    b = subs.add_parser("bounds", help="analytic bound report")
    b.add_argument("--q", type=float, required=True)
    b.add_argument("--q-prime", type=float, required=True)
    b.add_argument("--p", type=float, required=True)
    b.add_argument("--c", type=float, required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--m", type=int, required=True)
    b.add_argument("--k", type=int, default=1)
    b.add_argument("--w", type=float, default=1.0)
    b.add_argument("--delta", type=float, default=0.05)

    s = subs.add_parser("simulate", help="Monte Carlo wrong-selection rate")
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--alpha-c", type=float, required=True)
    s.add_argument("--alpha-w", type=float, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--w", type=float, required=True)

    args = parser.parse_args(argv)
    try:
        return _dispatch(args, parser)
    except (SchemaError, IoError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AdapterError as exc:
        print(f"adapter error: {exc}", file=sys.stderr)
        return 3


def _dispatch(args, parser) -> int:
    if args.command == "verify":
        cfg = _run_config(args, parser)
        summary = run_pipeline(cfg, selection=True, rewards=True)
        print(json.dumps(summary, sort_keys=True, indent=2))
        return 0
    if args.command == "rewards":
        cfg = _run_config(args, parser)
        summary = run_pipeline(cfg, selection=False, rewards=True)
        print(json.dumps(summary, sort_keys=True, indent=2))
        return 0
    if args.command == "quality":
        cfg = _run_config(args, parser)
        records = load_corpus(cfg.corpus_path, need_candidates=True)
        executor = _build_executor(cfg)
        reports = []
        for record in records:
            reports.extend(run_selection(record, executor, cfg)["reports"])
        if not reports:
            print("error: no executable pairs in corpus", file=sys.stderr)
            return 2
        print(json.dumps(quality_report(reports).to_dict(),
                         sort_keys=True, indent=2))
        return 0
    if args.command == "metrics":
        records = load_corpus(args.corpus)
        profiles = {}
        for record in records:
            try:
                profile = static_profile(record.solution.text)
            except ParseError as exc:
                profiles[record.problem_id] = {"error": str(exc)}
                continue
            profiles[record.problem_id] = {
                "volume": profile.volume,
                "cyclomatic": profile.cyclomatic,
                "loc": profile.loc,
                "comment_ratio": profile.comment_ratio,
                "mi": profile.mi,
                "d_hat": profile.d_hat,
                "d_m": profile.d_m,
            }
        print(json.dumps(profiles, sort_keys=True, indent=2))
        return 0
    if args.command == "bounds":
        inputs = BoundInputs(q=args.q, q_prime=args.q_prime, p=args.p,
                             c=args.c, n=args.n, m=args.m, k=args.k,
                             w=args.w, delta=args.delta)
        print(json.dumps(bound_report(inputs), sort_keys=True, indent=2))
        return 0
    if args.command == "simulate":
        cfg = SimConfig(trials=args.trials, seed=args.seed,
                        alpha_c=args.alpha_c, alpha_w=args.alpha_w,
                        n=args.n, w=args.w, m=args.m)
        result = simulate_selection(cfg)
        print(json.dumps({
            "wrong_rate": result.wrong_rate,
            "trials": result.trials,
            "wilson_low": result.wilson_low,
            "wilson_high": result.wilson_high,
        }, sort_keys=True, indent=2))
        return 0
    parser.error(f"unknown command {args.command!r}")
    return 1


if __name__ == "__main__":
    raise SystemExit(main())
