"""Command-line interface.

Exit codes: 0 on completion, 1 on bad input, 2 when a size budget refuses
the run.
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import analyze, format_report
from .digraph import (
    CycleSpec,
    NonUnimodalSpec,
    StarSpec,
    cycle_digraph,
    non_unimodal_digraph,
    star_digraph,
)
from .errors import BudgetExceededError, InputError
from .io import load_digraph, load_graph, named_note, serialize_digraph
from .survey import format_survey, search_underlying, survey_cycles, survey_summary
from .verify import CRITERIA, format_results, verify_paper

EXIT_OK, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2

QUESTION_NOTE = (
    "An exhaustive search over oriented graphs speaks to the question about "
    "oriented digraphs; one over simple digraphs speaks to the question about "
    "simple digraphs. Both readings of which numbered question is answered are "
    "reported; no position is taken."
)


def _int_csv(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def cmd_analyze(args: argparse.Namespace) -> int:
    D = load_digraph(args.source)
    note = named_note(args.source)
    drop = None if args.drop_col is None else args.drop_col - 1
    if drop is not None and not 0 <= drop < D.n:
        raise InputError(f"--drop-col must be in 1..{D.n}")
    report = analyze(D, idp=args.idp, drop_col=drop, notes=[note] if note else None)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        print(format_report(report))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        if args.family == "cycle":
            D = cycle_digraph(CycleSpec(args.n, frozenset(_int_csv(args.S))))
        elif args.family == "star":
            D = star_digraph(StarSpec(tuple(_int_csv(args.q))))
        else:
            spec = NonUnimodalSpec(args.alpha, args.beta, args.k, strict=not args.loose)
            D = non_unimodal_digraph(spec)
    except ValueError as e:
        raise InputError(str(e)) from None
    print(serialize_digraph(D))
    return EXIT_OK


def cmd_survey(args: argparse.Namespace) -> int:
    try:
        s = survey_cycles(args.nmin, args.nmax, jobs=args.jobs)
    except ValueError as e:
        raise InputError(str(e)) from None
    if args.json:
        print(json.dumps(survey_summary(s), indent=2))
    else:
        print(format_survey(s))
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    G = load_graph(args.source)
    res = search_underlying(G, args.mode, jobs=args.jobs)
    hits = [serialize_digraph(D) for D in res.hits]
    if args.json:
        print(json.dumps({
            "mode": res.mode,
            "examined": res.examined,
            "strongly_connected": res.strongly_connected,
            "reflexive": [json.loads(h) for h in hits],
            "note": QUESTION_NOTE,
        }, indent=2))
    else:
        print(f"mode                {res.mode}")
        print(f"digraphs examined   {res.examined}")
        print(f"strongly connected  {res.strongly_connected}")
        print(f"reflexive           {len(hits)}")
        for h in hits or ["none"]:
            print(f"  {h}")
        print(f"note: {QUESTION_NOTE}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results = verify_paper(args.only)
    if args.json:
        print(json.dumps([r.to_dict() for r in results], indent=2))
    else:
        print(format_results(results))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lapsimplex",
        description="Laplacian simplices of digraphs: invariants, families and searches.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="all invariants of one digraph")
    a.add_argument("source", help="JSON file or paper:NAME")
    a.add_argument("--idp", action="store_true", help="also test IDP")
    a.add_argument("--json", action="store_true")
    a.add_argument("--drop-col", type=int, help="1-based coordinate to drop")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("gen", help="print a family member as JSON")
    gs = g.add_subparsers(dest="family", required=True)
    gc = gs.add_parser("cycle")
    gc.add_argument("n", type=int)
    gc.add_argument("S", nargs="?", default="", help="comma-separated 1-based tails")
    gt = gs.add_parser("star")
    gt.add_argument("q", help="comma-separated nondecreasing weights")
    gn = gs.add_parser("nonunimodal")
    gn.add_argument("alpha", type=int)
    gn.add_argument("beta", type=int)
    gn.add_argument("k", type=int)
    gn.add_argument("--loose", action="store_true", help="skip the parameter constraints")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("survey-cycles", help="classify every C_n^S in a size range")
    s.add_argument("nmin", type=int)
    s.add_argument("nmax", type=int)
    s.add_argument("--jobs", type=int, default=None, help="worker processes (default: all CPUs)")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_survey)

    r = sub.add_parser("search", help="reflexive digraphs over an undirected graph")
    r.add_argument("source", help="graph JSON file or paper:NAME")
    r.add_argument("--mode", choices=("orientations", "simple"), default="orientations")
    r.add_argument("--jobs", type=int, default=None)
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_search)

    v = sub.add_parser("verify-paper", help="run the self-check criteria")
    v.add_argument("--only", action="append", choices=list(CRITERIA), metavar="NAME")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceededError as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
