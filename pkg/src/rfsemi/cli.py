"""``rfsemi`` command-line interface.

Exit codes: 0 success, 1 property violations or failed checks, 2 usage or
I/O errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from typing import Optional, Sequence

from . import golden
from .census import LONG_RUN_TUPLES, CensusParams, read_checkpoint, resume, run_census
from .configenum import count_configs, enumerate_configs
from .core import NumericalSemigroup, parse_generators
from .errors import SemigroupError
from .rfmatrix import DEFAULT_CAP, classify_pf, rf_matrices

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _semigroup(text: str) -> NumericalSemigroup:
    try:
        return NumericalSemigroup.from_generators(parse_generators(text))
    except (SemigroupError, ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc


def analyze_report(S: NumericalSemigroup) -> dict:
    profile = S.gaps()
    return {
        "generators": list(S.generators),
        "multiplicity": S.multiplicity,
        "embedding_dimension": S.embedding_dimension,
        "frobenius": S.frobenius,
        "genus": profile.genus,
        "n_small": profile.n_small,
        "pf": list(S.pseudo_frobenius()),
        "type": S.type(),
        "symmetric": S.is_symmetric(),
        "almost_symmetric": S.is_almost_symmetric(),
    }


def cmd_analyze(args) -> int:
    report = analyze_report(_semigroup(args.gens))
    if args.json:
        print(json.dumps(report))
        return EXIT_OK
    labels = {
        "generators": "generators",
        "multiplicity": "m",
        "embedding_dimension": "e",
        "frobenius": "F",
        "genus": "genus",
        "n_small": "n(S)",
        "pf": "PF",
        "type": "type",
        "symmetric": "symmetric",
        "almost_symmetric": "almost symmetric",
    }
    for key, label in labels.items():
        value = report[key]
        if isinstance(value, list):
            value = "{" + ",".join(map(str, value)) + "}"
        print(f"{label}: {value}")
    return EXIT_OK


def cmd_rf(args) -> int:
    S = _semigroup(args.gens)
    try:
        matrices = rf_matrices(S, args.f, cap=args.cap)
    except SemigroupError as exc:
        raise UsageError(str(exc)) from exc
    print("\n\n".join(A.format() for A in matrices))
    return EXIT_OK


def classify_lines(S: NumericalSemigroup) -> list[dict]:
    cls = classify_pf(S)
    out = []
    for f in S.pseudo_frobenius():
        entry = {"f": f, "label": cls.label(f)}
        if f in cls.good:
            entry["witness"] = cls.good[f].describe(S.generators)
        out.append(entry)
    return out


def cmd_classify(args) -> int:
    S = _semigroup(args.gens)
    try:
        lines = classify_lines(S)
    except SemigroupError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        print(json.dumps(lines))
        return EXIT_OK
    for entry in lines:
        print(" ".join(str(v) for v in entry.values()))
    return EXIT_OK


def cmd_configs(args) -> int:
    try:
        if args.count_only:
            print(count_configs(args.order))
            return EXIT_OK
        configs = enumerate_configs(args.order)
    except SemigroupError as exc:
        raise UsageError(str(exc)) from exc
    print("\n\n".join(f"{c.hex_id}\n{c.grid()}" for c in configs))
    return EXIT_OK


def _finish_census(summary) -> int:
    print(json.dumps(summary.to_dict()))
    return EXIT_VIOLATIONS if summary.violations else EXIT_OK


def cmd_census(args) -> int:
    try:
        params = CensusParams(
            embdim=args.embdim,
            max_gen=args.max_gen,
            require_almost_symmetric=not args.all,
            workers=args.jobs,
            rf_cap=args.cap,
            output_path=args.out,
            checkpoint_path=args.checkpoint,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if params.candidate_tuples() > LONG_RUN_TUPLES and not args.i_have_hours:
        raise UsageError(
            f"about {params.candidate_tuples():.2e} candidate tuples; pass --i-have-hours to run anyway"
        )
    return _finish_census(run_census(params))


def cmd_resume(args) -> int:
    params, _, _ = read_checkpoint(args.checkpoint)
    if args.jobs:
        params = CensusParams(**{**params.to_dict(), "workers": args.jobs})
    return _finish_census(resume(params))


def cmd_verify_paper(args) -> int:
    start = time.perf_counter()
    failed = 0
    for name, ok, detail in golden.run_all():
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    print(f"{len(golden.CHECKS) - failed}/{len(golden.CHECKS)} passed in {time.perf_counter() - start:.1f}s")
    return EXIT_OK if failed == 0 else EXIT_VIOLATIONS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rfsemi", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="invariants of a semigroup")
    p.add_argument("gens", help='generators, e.g. "5,12,13"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("rf", help="all RF-matrices of a pseudo-Frobenius number")
    p.add_argument("gens")
    p.add_argument("f", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_rf)

    p = sub.add_parser("classify", help="good/bad pseudo-Frobenius numbers")
    p.add_argument("gens")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("configs", help="admissible zero-configurations")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_configs)

    p = sub.add_parser("census", help="exhaustive census")
    p.add_argument("--embdim", type=int, required=True)
    p.add_argument("--max-gen", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--all", action="store_true", help="keep every semigroup")
    mode.add_argument("--almost-symmetric", action="store_true", help="keep almost symmetric only (default)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--out", default="census.jsonl")
    p.add_argument("--checkpoint", default=None)
    p.add_argument("--i-have-hours", action="store_true", help="allow very large runs")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("resume", help="continue an interrupted census")
    p.add_argument("--checkpoint", required=True)
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=cmd_resume)

    p = sub.add_parser("verify-paper", help="replay the published golden facts")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (UsageError, SemigroupError, OSError) as exc:
        print(f"rfsemi: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
