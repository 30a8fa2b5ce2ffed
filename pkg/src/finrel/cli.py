"""Command-line surface.

Subcommands: ``check`` (predicate profile of a relation document),
``witness`` (chain traces), ``survey`` (exhaustive census), ``mahavier``
(threads over a finite chain), ``op`` (compose/inverse/restrict).

Exit codes: 0 success; 1 when a survey finds counterexamples or a
``check --expect`` assertion fails; 2 for input or usage errors.  Stdout is
byte-identical across runs for fixed inputs; timing goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .census import survey
from .core import PreconditionError, PropertyReport, Relation, compose, inverse, properties, restrict
from .io import RelationParseError, parse_relation, serialize_relation
from .mahavier import iter_threads, thread_order_profile, threads_naive, threads_propagate
from .witness import GammaWitness, WitnessChain, gamma_from_seed, gamma_witness, reflexive_pair_witness

SURVEY_CSV_HEADER = (
    "# finrel survey csv v1: "
    "n,full,idempotent_full,nontrivial_idempotent,trivial_idempotent,"
    "gamma_idempotent,counterexamples"
)

EXPECT_FLAGS = ("full", "idempotent", "surjective", "single_valued", "trivial", "gamma")


def _load_relation(path: str) -> Relation:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise RelationParseError(f"cannot read {path}: {exc}") from exc
    return parse_relation(text)


def _report_dict(report: PropertyReport) -> dict:
    def pair(p):
        return None if p is None else list(p)

    return {
        "n": report.n,
        "full": report.full,
        "idempotent": report.idempotent,
        "surjective": report.surjective,
        "single_valued": report.single_valued,
        "trivial": report.trivial,
        "gamma": pair(report.gamma_witness),
        "two_point_witness": pair(report.two_point_witness),
        "nontriviality_witness": pair(report.nontriviality_witness),
    }


def _chain_dict(wc: WitnessChain) -> dict:
    return {
        "kind": wc.kind,
        "chain": list(wc.chain),
        "seed": None if wc.seed is None else list(wc.seed),
        "result": list(wc.result),
    }


def _pipeline_dict(gw: GammaWitness) -> dict:
    return {
        "witness": list(gw.pair),
        "reflexive_stage": _chain_dict(gw.reflexive_stage),
        "extension_stage": _chain_dict(gw.extension_stage),
        "restricted_to": None if gw.restricted_to is None else list(gw.restricted_to),
    }


def _parse_expect(raw: str) -> tuple[str, bool]:
    name, sep, value = raw.partition("=")
    if not sep or name not in EXPECT_FLAGS or value not in ("true", "false"):
        raise RelationParseError(
            f"--expect wants <flag>=<true|false> with flag one of {', '.join(EXPECT_FLAGS)}; got {raw!r}"
        )
    return name, value == "true"


def _cmd_check(args) -> int:
    f = _load_relation(args.file)
    report = properties(f)
    doc = _report_dict(report)
    print(json.dumps(doc, indent=2))
    failures = []
    for raw in args.expect or ():
        name, wanted = _parse_expect(raw)
        actual = report.gamma if name == "gamma" else getattr(report, name)
        if actual is not wanted:
            failures.append(f"expected {name}={str(wanted).lower()}, got {json.dumps(actual)}")
    if failures:
        for line in failures:
            print(f"check: {line}", file=sys.stderr)
        return 1
    return 0


def _cmd_witness(args) -> int:
    f = _load_relation(args.file)
    seed = None
    if args.seed is not None:
        try:
            sx, sy = (int(part) for part in args.seed.split(","))
        except ValueError:
            raise RelationParseError(f"--seed wants two integers 'x,y'; got {args.seed!r}")
        seed = (sx, sy)
    if args.lemma == "1":
        out = _chain_dict(reflexive_pair_witness(f))
    elif args.lemma == "2":
        if seed is None:
            raise RelationParseError("--lemma 2 requires --seed x,y")
        out = _chain_dict(gamma_from_seed(f, *seed))
    else:
        out = _pipeline_dict(gamma_witness(f))
    print(json.dumps(out, indent=2))
    return 0


def _cmd_survey(args) -> int:
    mode = "up_to_iso" if args.up_to_iso else "all"
    report = survey(args.n, mode=mode, workers=args.workers)
    print(f"# survey n={report.n} elapsed {report.elapsed:.2f}s", file=sys.stderr)
    if args.json:
        doc = {
            "n": report.n,
            "mode": report.mode,
            "counts": {
                "full": report.full,
                "idempotent_full": report.idempotent_full,
                "nontrivial_idempotent": report.nontrivial_idempotent,
                "trivial_idempotent": report.trivial_idempotent,
                "gamma_idempotent": report.gamma_idempotent,
                "surjective_idempotent": report.surjective_idempotent,
                "identity_count": report.identity_count,
            },
            "counterexamples": list(report.counterexamples),
        }
        print(json.dumps(doc, indent=2))
    else:
        print(SURVEY_CSV_HEADER)
        print(
            f"{report.n},{report.full},{report.idempotent_full},"
            f"{report.nontrivial_idempotent},{report.trivial_idempotent},"
            f"{report.gamma_idempotent},{len(report.counterexamples)}"
        )
    return 1 if report.counterexamples else 0


def _cmd_mahavier(args) -> int:
    f = _load_relation(args.file)
    if args.transpose:
        f = inverse(f)
    if args.count_only:
        if args.naive:
            print(len(threads_naive(f, args.length)))
        else:
            print(sum(1 for _ in iter_threads(f, args.length)))
        return 0
    if args.json:
        ts = threads_naive(f, args.length) if args.naive else threads_propagate(f, args.length)
        doc = {
            "n": ts.n,
            "length": ts.m,
            "count": len(ts),
            "is_coordinatewise_chain": thread_order_profile(ts).is_coordinatewise_chain,
            "threads": [list(t) for t in ts.threads],
        }
        print(json.dumps(doc, indent=2))
        return 0
    if args.naive:
        for t in threads_naive(f, args.length).threads:
            print(" ".join(map(str, t)))
    else:
        for t in iter_threads(f, args.length):
            print(" ".join(map(str, t)))
    return 0


def _parse_points(raw: str) -> list[int]:
    try:
        return [int(part) for part in raw.split(",") if part != ""]
    except ValueError:
        raise RelationParseError(f"--points wants comma-separated integers; got {raw!r}")


def _cmd_op(args) -> int:
    if args.operation == "compose":
        if len(args.files) != 2:
            raise RelationParseError("op compose needs exactly two relation files")
        f, g = (_load_relation(p) for p in args.files)
        result = compose(f, g)
    elif args.operation == "inverse":
        if len(args.files) != 1:
            raise RelationParseError("op inverse needs exactly one relation file")
        result = inverse(_load_relation(args.files[0]))
    else:
        if len(args.files) != 1:
            raise RelationParseError("op restrict needs exactly one relation file")
        if args.points is None:
            raise RelationParseError("op restrict requires --points")
        result = restrict(_load_relation(args.files[0]), _parse_points(args.points))
    text = serialize_relation(result, form=args.form)
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finrel",
        description="Relation algebra on finite point sets: predicate checks, "
        "witness chains, an exhaustive census, and inverse-limit threads. "
        "Relation files are JSON {'n': k, 'pairs': [[x, y], ...]} or a 0/1 "
        "matrix whose rows are source points and columns target points.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="print the predicate profile of a relation document")
    p.add_argument("file", help="relation document (JSON {'n':…,'pairs':…} or 0/1 matrix, "
                                "rows = source point, columns = target point)")
    p.add_argument("--expect", action="append", metavar="FLAG=BOOL",
                   help="assert a flag value; exit 1 on mismatch (repeatable)")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("witness", help="run a chain construction and print its trace")
    p.add_argument("file")
    p.add_argument("--lemma", choices=["1", "2", "theorem"], default="theorem",
                   help="1 = reflexive-pair chain, 2 = seeded gamma extension "
                        "(needs --seed), theorem = full pipeline (default)")
    p.add_argument("--seed", metavar="X,Y", help="seed pair for the gamma extension")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("survey", help="exhaustively scan all full relations of a size")
    p.add_argument("--n", type=int, required=True, help="carrier size")
    p.add_argument("--up-to-iso", action="store_true", dest="up_to_iso",
                   help="count isomorphism classes (canonical representatives) only")
    p.add_argument("--workers", type=int, default=1)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true", default=True,
                     help="emit the versioned CSV row (default)")
    fmt.add_argument("--json", action="store_true", help="emit the full JSON report")
    p.set_defaults(func=_cmd_survey)

    p = sub.add_parser("mahavier", help="threads of the inverse limit over a finite chain")
    p.add_argument("file")
    p.add_argument("--length", type=int, required=True, metavar="M", help="chain length")
    p.add_argument("--naive", action="store_true",
                   help="use the brute-force tuple filter instead of propagation")
    p.add_argument("--transpose", action="store_true",
                   help="use the opposite orientation (threads of the inverse)")
    p.add_argument("--count-only", action="store_true", dest="count_only")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_mahavier)

    p = sub.add_parser("op", help="apply one algebra operation to relation files")
    p.add_argument("operation", choices=["compose", "inverse", "restrict"])
    p.add_argument("files", nargs="+")
    p.add_argument("--points", help="comma-separated points for restrict")
    p.add_argument("--form", choices=["json", "matrix"], default="json")
    p.set_defaults(func=_cmd_op)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (RelationParseError, PreconditionError, ValueError) as exc:
        print(f"finrel: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
