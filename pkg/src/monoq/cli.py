"""Command-line front end: single-state evaluation, figure data, fuzzing.

Exit codes: 0 on success (and fuzz runs with no violation beyond tolerance),
1 when a fuzz run found violations, 2 on configuration or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import load_state
from .errors import IoError, MonoqError, ParameterError, PreconditionError
from .harness import (
    REFERENCE_ALPHA,
    build_config,
    falpha_table,
    figure_rows,
    parse_config_file,
    run_campaign,
    write_csv,
)
from .measures import AlphaMu
from .monogamy import detect_ordering, theorem_bound
from .polygamy import theorem3_bound, wclass_from_state

DEFAULT_SEED = 20240823


def _env_seed() -> int:
    raw = os.environ.get("MONOQ_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError as exc:
        raise ParameterError(f"MONOQ_SEED must be an integer, got {raw!r}") from exc


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    try:
        return open(path, "w", encoding="utf-8", newline=""), True
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def _emit(text: str, path) -> None:
    stream, close = _open_out(path)
    try:
        stream.write(text)
    finally:
        if close:
            stream.close()


def cmd_eval(args) -> int:
    psi = load_state(args.state)
    if args.focus not in psi.labels:
        raise ParameterError(f"focus {args.focus!r} not among labels {psi.labels!r}")
    if args.focus != psi.labels[0]:
        psi = psi.permuted((args.focus,) + tuple(l for l in psi.labels if l != args.focus))
    mode = args.mode
    if mode == "auto":
        if args.mu >= 2:
            mode = "monogamy"
        elif args.mu <= 1:
            mode = "polygamy"
        else:
            raise ParameterError(
                f"mu={args.mu} selects no bound (monogamy needs mu >= 2, polygamy mu <= 1); "
                "pass --mode explicitly"
            )
    profile = detect_ordering(psi, focus=args.focus)
    out = {
        "state_file": args.state,
        "mode": mode,
        "alpha": args.alpha,
        "mu": args.mu,
        "profile": profile.to_dict(),
    }
    params = AlphaMu(args.alpha, args.mu)
    try:
        if mode == "monogamy":
            out["report"] = theorem_bound(psi, profile, params).to_dict()
        else:
            out["report"] = theorem3_bound(wclass_from_state(psi), profile, params).to_dict()
    except PreconditionError as exc:
        out["report"] = None
        out["skipped"] = str(exc)
    _emit(json.dumps(out, indent=2, sort_keys=False) + "\n", args.out)
    return 0


def cmd_reproduce(args) -> int:
    header, rows = figure_rows(args.figure, alpha=args.alpha)
    stream, close = _open_out(args.out)
    try:
        write_csv(header, rows, stream)
    finally:
        if close:
            stream.close()
    return 0


def cmd_fuzz(args) -> int:
    settings: dict = {}
    if args.config:
        settings.update(parse_config_file(args.config))
    overrides = {
        "mode": args.mode,
        "states": args.states,
        "qubits": args.qubits,
        "alpha": args.alpha,
        "mu": args.mu,
        "seed": args.seed,
        "class": args.state_class,
        "tolerance": args.tolerance,
        "state": args.state,
    }
    settings.update({k: v for k, v in overrides.items() if v is not None})
    settings.setdefault("seed", _env_seed())
    config = build_config(settings)
    result = run_campaign(config)
    if args.out:
        stream, close = _open_out(args.out)
        try:
            result.write_records_csv(stream)
        finally:
            if close:
                stream.close()
    print(json.dumps(result.summary(), indent=2, sort_keys=False))
    return 1 if result.n_violations else 0


def cmd_falpha(args) -> int:
    alphas = [float(part) for part in str(args.alpha).split(",") if part.strip()]
    header, rows = falpha_table(alphas, args.points)
    stream, close = _open_out(args.out)
    try:
        write_csv(header, rows, stream)
    finally:
        if close:
            stream.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monoq",
        description="Evaluate and stress-test weighted entanglement monogamy/polygamy bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate the applicable bound on one state file")
    p_eval.add_argument("state", help="state JSON file")
    p_eval.add_argument("--alpha", type=float, default=REFERENCE_ALPHA)
    p_eval.add_argument("--mu", type=float, default=2.0)
    p_eval.add_argument("--focus", default="A")
    p_eval.add_argument("--mode", choices=("auto", "monogamy", "polygamy"), default="auto")
    p_eval.add_argument("--out", default=None, help="output path (default stdout)")
    p_eval.set_defaults(func=cmd_eval)

    p_rep = sub.add_parser("reproduce", help="write recomputed bound-curve data as CSV")
    p_rep.add_argument("figure", choices=("fig1", "fig2"))
    p_rep.add_argument("--alpha", type=float, default=REFERENCE_ALPHA)
    p_rep.add_argument("--out", default=None, help="output path (default stdout)")
    p_rep.set_defaults(func=cmd_reproduce)

    p_fuzz = sub.add_parser("fuzz", help="stochastic falsification campaign")
    p_fuzz.add_argument("--config", default=None, help="key=value campaign file")
    p_fuzz.add_argument("--mode", choices=("monogamy", "polygamy", "lemma1", "ckw", "scalar"))
    p_fuzz.add_argument("--states", type=int, default=None)
    p_fuzz.add_argument("--qubits", type=int, default=None)
    p_fuzz.add_argument("--alpha", default=None, help="comma-separated alpha grid")
    p_fuzz.add_argument("--mu", default=None, help="comma-separated mu (or power) grid")
    p_fuzz.add_argument("--seed", type=int, default=None, help="defaults to MONOQ_SEED")
    p_fuzz.add_argument("--class", dest="state_class", choices=("haar", "wclass", "file"))
    p_fuzz.add_argument("--tolerance", type=float, default=None)
    p_fuzz.add_argument("--state", default=None, help="state file for class=file")
    p_fuzz.add_argument("--out", default=None, help="witness CSV path")
    p_fuzz.set_defaults(func=cmd_fuzz)

    p_fa = sub.add_parser("falpha", help="tabulate the spectral bound function")
    p_fa.add_argument("--alpha", default=str(REFERENCE_ALPHA), help="comma-separated orders")
    p_fa.add_argument("--points", type=int, default=101)
    p_fa.add_argument("--out", default=None, help="output path (default stdout)")
    p_fa.set_defaults(func=cmd_falpha)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MonoqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
