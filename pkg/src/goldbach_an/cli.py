"""Command-line front end.

Exit codes: 0 success, 2 usage or domain error, 3 resource limit,
4 theorem violation (a JSON report is written to stdout).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from . import primegraph, theorems
from .errors import (
    InternalConsistencyError,
    InvalidArgument,
    OutOfDomain,
    OutOfRange,
    ResourceLimitError,
    TheoremViolation,
)
from .partitions import spectrum
from .primes import build_sieve, goldbach_pairs, rosser_scan

EXIT_OK, EXIT_USAGE, EXIT_RESOURCE, EXIT_VIOLATION = 0, 2, 3, 4

log = logging.getLogger("goldbach_an")

SCAN_KINDS = ("recognizability", "theorem-a", "identity", "rosser", "lemma-iso",
              "goldb5", "corollary", "incident", "components")


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _require_format(fmt: str, allowed: tuple[str, ...], cmd: str) -> None:
    if fmt not in allowed:
        raise UsageError(f"{cmd}: --format {fmt} not supported (use one of {', '.join(allowed)})")


def _sieve(args, *ns: int):
    limit = args.limit if args.limit is not None else max(2 * max(ns), 2)
    if limit < max(ns):
        raise UsageError(f"--limit {limit} is below the largest value {max(ns)}")
    return build_sieve(limit)


def cmd_spectrum(args) -> str:
    _require_format(args.format, ("text", "json", "csv"), "spectrum")
    spec = spectrum(args.n, args.group)
    if args.format == "json":
        return _dumps({"n": args.n, "group": args.group, "orders": list(spec.orders)}) + "\n"
    if args.format == "csv":
        return _csv(["order"], ([o] for o in spec.orders))
    return " ".join(map(str, spec.orders)) + "\n"


def cmd_graph(args) -> str:
    _require_format(args.format, ("text", "json", "dot"), "graph")
    if args.builder == "criterion":
        g = primegraph.build_by_criterion(args.n, _sieve(args, args.n))
    else:
        g = primegraph.build_by_spectrum(args.n)
    if args.format == "json":
        return g.to_json() + "\n"
    if args.format == "dot":
        return g.to_dot()
    comps = " | ".join("{" + ",".join(map(str, sorted(c))) + "}" for c in primegraph.components(g))
    edges = " ".join(f"{p}-{q}" for p, q in g.sorted_edges())
    return (f"A_{g.degree}\nvertices: {' '.join(map(str, g.vertices))}\n"
            f"edges: {edges}\ncomponents: {comps}\n")


def cmd_table(args) -> str:
    _require_format(args.format, ("text", "json", "csv"), "table")
    rows = theorems.table_1(args.lo, args.hi, _sieve(args, 2 * args.hi))
    if args.format == "csv":
        return theorems.table_csv(rows)
    if args.format == "json":
        return _dumps([{"n": r.n, "d": r.d} for r in rows]) + "\n"
    return "".join(f"n={r.n:<4d} d={r.d}\n" for r in rows)


def cmd_pairs(args) -> str:
    _require_format(args.format, ("text", "json", "csv"), "pairs")
    ps = goldbach_pairs(_sieve(args, args.n2), args.n2).sorted_pairs()
    if args.format == "json":
        return _dumps({"target": args.n2, "pairs": [list(p) for p in ps]}) + "\n"
    if args.format == "csv":
        return _csv(["p", "q"], ps)
    return "".join(f"{args.n2} = {p} + {q}\n" for p, q in ps)


def _report_text(r: theorems.TheoremAReport) -> str:
    pairs = ", ".join(f"{p}+{q}" for p, q in r.part1_pairs.sorted_pairs()) or "none"
    lines = [
        f"2n = {r.n2}",
        f"  part 1  Goldbach pairs: {pairs}",
        f"  part 2  proper subgraph: {r.part2_proper}",
        f"  part 3  edge difference: {r.part3_diff}",
        f"  part 4  both connected: {r.part4_applicable}"
        + (f", difference {r.part4_diff}" if r.part4_applicable else ""),
        f"  part 5  centralizer witness: {r.part5_witness}",
        f"  part 6  normalizer witness: {r.part6_witness}",
        f"  part 7  dims (2n-1, 2n): {r.part7_dims if r.part7_dims else 'skipped'}",
        f"  all equivalent: {r.all_equivalent}"
        + (f" (disagreeing: {', '.join(r.disagreeing_parts)})" if r.disagreeing_parts else ""),
    ]
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> tuple[str, int]:
    _require_format(args.format, ("text", "json"), "verify")
    r = theorems.verify_theorem_a(args.n2, _sieve(args, args.n2), args.part7)
    out = r.to_json() + "\n" if args.format == "json" or not r.all_equivalent else _report_text(r)
    return out, EXIT_OK if r.all_equivalent else EXIT_VIOLATION


def _scan_rows(args) -> tuple[list[str], list[list], int]:
    lo, hi, kind = args.lo, args.hi, args.kind
    code = EXIT_OK
    if kind == "recognizability":
        s = _sieve(args, 2 * hi + 1)
        hits = theorems.recognizability_scan(lo, hi, s)
        return ["n"], [[n] for n in sorted(hits)], code
    if kind == "theorem-a":
        s = _sieve(args, 2 * hi)
        reports = theorems.theorem_a_sweep(2 * lo, 2 * hi, s, args.part7, args.jobs)
        rows = [[r.n2, len(r.part1_pairs), r.part3_diff,
                 "" if r.part7_dims is None else r.part7_dims[0],
                 "" if r.part7_dims is None else r.part7_dims[1],
                 int(r.all_equivalent), ";".join(r.disagreeing_parts)] for r in reports]
        if not all(r.all_equivalent for r in reports):
            code = EXIT_VIOLATION
        return ["n2", "pairs", "diff", "dim_u_odd", "dim_u_even", "all_equivalent",
                "disagreeing"], rows, code
    if kind == "identity":
        s = _sieve(args, 2 * hi)
        rows = []
        for n in range(lo, hi + 1):
            f, dd = theorems.edge_diff_formula(n, s), theorems.direct_edge_diff(n, s)
            g = len(goldbach_pairs(s, 2 * n))
            rows.append([n, f, dd, g, int(f == dd == g)])
            if not f == dd == g:
                code = EXIT_VIOLATION
        return ["n", "formula", "direct", "pairs", "equal"], rows, code
    if kind == "rosser":
        s = _sieve(args, hi)
        bad = rosser_scan(s, lo, hi)
        return ["x"], [[int(x)] for x in bad], EXIT_VIOLATION if len(bad) else code
    if kind == "lemma-iso":
        s = _sieve(args, 2 * hi)
        rows = [[n, int(theorems.lemma_iso_check(n, s))] for n in range(lo, hi + 1)]
    elif kind == "goldb5":
        s = _sieve(args, 2 * hi + 1)
        rows = [[n, int(theorems.theorem_goldb5_check(n, s)),
                 int(theorems.theorem_goldb5_check(n, s, include_vertices=True))]
                for n in range(lo, hi + 1)]
        if not all(r[1] for r in rows):
            code = EXIT_VIOLATION
        return ["n", "holds_edge_premise", "holds_vertex_premise"], rows, code
    elif kind == "corollary":
        s = _sieve(args, 2 * hi)
        rows = [[n, *theorems.corollary_two_goldbach(n, s)] for n in range(lo, hi + 1)]
        return ["n", "lower", "upper"], rows, code
    elif kind == "incident":
        s = _sieve(args, 2 * hi)
        rows = []
        for n in range(lo, hi + 1):
            corr = theorems.incident_edge_counts(n, True, s)
            paper = theorems.incident_edge_counts(n, False, s)
            for c, p in zip(corr, paper):
                rows.append([n, c.q, c.formula_count, p.formula_count, c.true_count])
                if not c.matches:
                    code = EXIT_VIOLATION
        return ["n", "q", "corrected", "paper_form", "true"], rows, code
    else:  # components
        s = _sieve(args, hi)
        rows = [[n, len(primegraph.components(primegraph.build_by_criterion(n, s)))]
                for n in range(max(lo, 5), hi + 1)]
        return ["n", "components"], rows, code
    if not all(r[1] for r in rows):
        code = EXIT_VIOLATION
    return ["n", "holds"], rows, code


def cmd_scan(args) -> tuple[str, int]:
    _require_format(args.format, ("text", "json", "csv"), "scan")
    header, rows, code = _scan_rows(args)
    if args.format == "csv":
        return _csv(header, rows), code
    if args.format == "json":
        return _dumps([dict(zip(header, r)) for r in rows]) + "\n", code
    if header == ["n"] or header == ["x"]:
        return " ".join(str(r[0]) for r in rows) + "\n", code
    return "".join(" ".join(map(str, r)) + "\n" for r in rows), code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="goldbach-an",
        description="Prime graphs of alternating groups and Goldbach decompositions.")
    p.add_argument("-v", "--verbose", action="store_true", help="log to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, default_fmt="text"):
        sp.add_argument("--format", default=default_fmt,
                        choices=("text", "json", "csv", "dot"))
        sp.add_argument("--limit", type=int, default=None,
                        help="sieve limit (default: twice the largest argument)")

    sp = sub.add_parser("spectrum", help="element orders of A_n or S_n")
    sp.add_argument("n", type=int)
    sp.add_argument("--group", choices=("A", "S"), default="A")
    common(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("graph", help="prime graph of A_n")
    sp.add_argument("n", type=int)
    sp.add_argument("--builder", choices=("criterion", "spectrum"), default="criterion")
    common(sp)
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("table", help="edge differences d(n) = |E(A_2n) - E(A_2n-1)|")
    sp.add_argument("--from", dest="lo", type=int, default=4)
    sp.add_argument("--to", dest="hi", type=int, default=30)
    common(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("pairs", help="decompositions of an even number into distinct odd primes")
    sp.add_argument("n2", type=int)
    common(sp)
    sp.set_defaults(func=cmd_pairs)

    sp = sub.add_parser("verify", help="evaluate all seven characterizations at one even 2n")
    sp.add_argument("n2", type=int)
    sp.add_argument("--part7", action=argparse.BooleanOptionalAction, default=None,
                    help="force the class-count part on or off")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan", help="run a check over a range; --from/--to are n (x for rosser)")
    sp.add_argument("kind", choices=SCAN_KINDS)
    sp.add_argument("--from", dest="lo", type=int, default=4)
    sp.add_argument("--to", dest="hi", type=int, default=29)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--part7", action=argparse.BooleanOptionalAction, default=None)
    common(sp)
    sp.set_defaults(func=cmd_scan)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(asctime)s %(levelname)s %(message)s", stream=sys.stderr)
    try:
        result = args.func(args)
    except UsageError as e:
        parser.error(str(e))
    except (InvalidArgument, OutOfDomain, OutOfRange) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except TheoremViolation as e:
        sys.stdout.write(_dumps({"violation": str(e), "report": e.report}) + "\n")
        return EXIT_VIOLATION
    except InternalConsistencyError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 1
    out, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
