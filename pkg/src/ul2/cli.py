"""Command-line front end.

Subcommands: lambda2, spectrum, classify, verify, enumerate, families.
Graphs come either from --family spec strings ("S:g=3,sizes=7,7,7",
"H42:l0=16,l1=0,l2=0", "C:n=11") or from --input edge-list files whose
format is "n m" followed by m lines "u v".

Exit codes: 0 success / all checks passed, 1 verification failure,
2 usage or parse error. Output on stdout is byte-identical across runs
for a fixed invocation and seed; timings go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .classifier import classify, numeric_outcome, threshold
from .config import DEFAULT_ENUM_BOUND, MAX_ENUM_BOUND, Tolerances
from .enumeration import enumerate_unicyclic
from .families import (
    FAMILIES,
    FIXED_INSTANCES,
    STAR_ITEMS,
    instance_from_spec,
)
from .graphs import format_graph_text, parse_graph_text
from .spectra import graph_spectrum, lambda2, spectrum_csv
from .verify import SUITE_NAMES, run_suites


def _load_graph(args):
    if args.family and args.input:
        raise ValueError("give either --family or --input, not both")
    if args.family:
        return instance_from_spec(args.family).graph
    if args.input:
        if args.input == "-":
            return parse_graph_text(sys.stdin.read())
        with open(args.input, encoding="ascii") as fh:
            return parse_graph_text(fh.read())
    raise ValueError("a graph source is required: --family SPEC or --input FILE")


def _tolerances(args) -> Tolerances:
    kwargs = {}
    if getattr(args, "tol_eig", None) is not None:
        kwargs["eig_residual"] = args.tol_eig
    if getattr(args, "tol_paper", None) is not None:
        kwargs["rounded"] = args.tol_paper
    return Tolerances(**kwargs)


def cmd_lambda2(args) -> int:
    g = _load_graph(args)
    lam = lambda2(g)
    t = threshold()
    relation = numeric_outcome(lam, _tolerances(args)).upper()
    if args.format == "json":
        print(json.dumps({"lambda2": float(f"{lam:.17g}"),
                          "threshold": float(f"{t:.17g}"),
                          "relation": relation}))
    else:
        print(f"lambda2   = {lam:.17g}")
        print(f"threshold = {t:.17g}")
        print(f"relation  = {relation}")
    return 0


def cmd_spectrum(args) -> int:
    g = _load_graph(args)
    spec = graph_spectrum(g)
    if args.format == "json":
        print(json.dumps([float(f"{x:.17g}") for x in spec.values]))
    else:
        sys.stdout.write(spectrum_csv(spec))
    return 0


def cmd_classify(args) -> int:
    g = _load_graph(args)
    verdict = classify(g, _tolerances(args))
    if args.format == "json":
        print(verdict.to_json())
    else:
        print(f"outcome   = {verdict.outcome.upper()}")
        print(f"family    = {verdict.family or '-'}")
        if verdict.params:
            body = ", ".join(f"{k}={v}" for k, v in sorted(verdict.params.items()))
            print(f"params    = {body}")
        print(f"lambda2   = {verdict.lambda2:.17g}")
        print(f"threshold = {verdict.threshold:.17g}")
        print(f"agreement = {'yes' if verdict.agreement else 'NO'}")
        for note in verdict.notes:
            print(f"note      = {note}")
    return 0


def cmd_verify(args) -> int:
    names = args.suites or ["all"]
    if "all" in names:
        names = list(SUITE_NAMES)
    jobs = args.jobs or 1
    reports = run_suites(names, seed=args.seed, tol=_tolerances(args), jobs=jobs)
    failed = False
    if args.format == "json":
        for rep in reports:
            print(json.dumps({
                "suite": rep.suite,
                "cases": rep.cases,
                "passes": rep.passes,
                "failures": [
                    {"case": f.case, "expected": f.expected, "actual": f.actual,
                     "delta": float(f"{f.delta:.17g}")}
                    for f in rep.failures
                ],
                "flagged": rep.flagged,
            }))
            failed = failed or not rep.passed
    else:
        for rep in reports:
            status = "PASS" if rep.passed else "FAIL"
            print(f"{status} {rep.suite}: {rep.passes}/{rep.cases} checks")
            for f in rep.failures:
                print(f"     fail {f.case}: expected {f.expected}, got {f.actual} "
                      f"(delta {f.delta:.3e})")
            for note in rep.flagged:
                print(f"     flag {note}")
            print(f"     ({rep.seconds:.2f}s)", file=sys.stderr)
            failed = failed or not rep.passed
    return 1 if failed else 0


def cmd_enumerate(args) -> int:
    bound = args.enum_bound or DEFAULT_ENUM_BOUND
    first = True
    for g in enumerate_unicyclic(args.n, girth=args.girth, bound=bound):
        if not first:
            print()
        sys.stdout.write(format_graph_text(g))
        first = False
    return 0


def cmd_families(args) -> int:
    print("parametric families (broom counts li >= 0):")
    for fam in FAMILIES:
        layout = ",".join(fam.layout)
        if fam.kind == "broom3":
            schema = "l0,l1,l2"
            extra = f"equality when l2 >= {fam.eq_min_l2}"
        else:
            schema = "l0,l1"
            rows = "; ".join(
                f"l1={l1}: {lo}..{hi}" for l1, (lo, hi) in sorted(fam.rows.items())
            )
            extra = f"accepted rows {rows}"
        print(f"  {fam.tag:4} girth {fam.girth}  [{layout}]  params {schema}")
        print(f"       {extra}")
    print("fixed members:")
    for name, (base, (l0, l1)) in FIXED_INSTANCES.items():
        print(f"  {name:4} = {base}:l0={l0},l1={l1}")
    print("star compositions (S:g=...,sizes=...):")
    for item in STAR_ITEMS:
        pat = ",".join("k" if s is None else str(s) for s in item.pattern)
        if item.free_range:
            lo, hi = item.free_range
            eq = f", equality at k={item.equal_at}" if item.equal_at else ""
            print(f"  S:g={item.girth},sizes={pat}  with {lo} <= k <= {hi}{eq}")
        else:
            print(f"  S:g={item.girth},sizes={pat}")
    print("cycle shorthands: C:n=<len> (plain cycle), C1:n=<len> (cycle plus pendant)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ul2",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    default_seed = int(os.environ.get("UL2_SEED", "0"))
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, graph_source=True):
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--seed", type=int, default=default_seed,
                       help="RNG seed (falls back to UL2_SEED, then 0)")
        p.add_argument("--tol-eig", type=float, default=None,
                       help="override the eigenpair residual tolerance")
        p.add_argument("--tol-paper", type=float, default=None,
                       help="override the five-decimal reference tolerance")
        if graph_source:
            p.add_argument("--family", help="family spec, e.g. S:g=3,sizes=7,7,7")
            p.add_argument("--input", help="edge-list file ('-' for stdin)")

    p = sub.add_parser("lambda2", help="print lambda2 and its relation to the threshold")
    add_common(p)
    p.set_defaults(func=cmd_lambda2)

    p = sub.add_parser("spectrum", help="print the full ascending spectrum")
    add_common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("classify", help="structural + numeric threshold classification")
    add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run verification suites")
    add_common(p, graph_source=False)
    p.add_argument("suites", nargs="*",
                   help=f"suites to run: {', '.join(SUITE_NAMES)} or 'all'")
    p.add_argument("--jobs", type=int, default=1, help="parallel suites (>= 1)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="stream all unicyclic graphs of one order")
    add_common(p, graph_source=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--girth", type=int, default=None)
    p.add_argument("--enum-bound", type=int, default=None,
                   help=f"enumeration cap (default {DEFAULT_ENUM_BOUND}, max {MAX_ENUM_BOUND})")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("families", help="list the family catalog")
    add_common(p, graph_source=False)
    p.set_defaults(func=cmd_families)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", None) is not None and args.jobs < 1:
        parser.error("--jobs must be >= 1")
    bound = getattr(args, "enum_bound", None)
    if bound is not None and not (3 <= bound <= MAX_ENUM_BOUND):
        parser.error(f"--enum-bound must lie in 3..{MAX_ENUM_BOUND}")
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
