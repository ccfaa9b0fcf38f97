"""Command line front end: gen, spectrum, classify, verify, enumerate."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .families import FAMILIES, generate, member_theorem1, member_theorem2, mnp_triples
from .graph import GraphError, complement, is_bipartite
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .linegraphs import is_line_graph, root_graphs
from .spectra import eigenvalues_float, inertia, lambda3_nonpositive, min_eigenvalue_at_least

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _dump(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"))


def _lines(path: str | None):
    stream = sys.stdin if path in (None, "-") else open(path, encoding="ascii", errors="replace")
    try:
        for k, raw in enumerate(stream, 1):
            line = raw.rstrip("\r\n")
            if line:
                yield k, line
    finally:
        if stream is not sys.stdin:
            stream.close()


def _out(path: str | None):
    return sys.stdout if path in (None, "-") else open(path, "w", encoding="ascii")


def _spectrum_record(g) -> dict:
    spec = eigenvalues_float(g)
    ine = inertia(g)
    return {
        "eigenvalues": [round(x, 12) + 0.0 for x in spec.values],
        "inertia": [ine.n_pos, ine.n_zero, ine.n_neg],
        "lambda3_nonpositive": lambda3_nonpositive(g),
        "min_eigenvalue_at_least_minus2": min_eigenvalue_at_least(g, -2),
        "bipartite": is_bipartite(g)[0],
    }


def _classify_record(g) -> dict:
    line = is_line_graph(g)
    return {
        "is_line_graph": line,
        "root_count": len(root_graphs(g)) if line else 0,
        "theorem1": member_theorem1(g).as_dict(),
        "theorem2": member_theorem2(g).as_dict(),
        "complement_bipartite": is_bipartite(complement(g))[0],
    }


def _per_line(args, build) -> int:
    status = EXIT_OK
    out = _out(args.output)
    try:
        for k, line in _lines(args.input):
            head = {"version": SCHEMA_VERSION, "line": k, "graph6": line}
            try:
                g = parse_graph6(line)
            except Graph6Error as exc:
                status = EXIT_USAGE
                out.write(_dump({**head, "error": str(exc)}) + "\n")
                continue
            out.write(_dump({**head, "n": g.n, **build(g)}) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return status


def cmd_spectrum(args) -> int:
    return _per_line(args, _spectrum_record)


def cmd_classify(args) -> int:
    return _per_line(args, _classify_record)


def cmd_gen(args) -> int:
    fam = args.family.upper()
    if args.range is None:
        graphs = [generate(fam, args.m, args.n, args.p)]
    elif fam in ("CS2", "B3"):
        graphs = [generate(fam, n=k) for k in range(args.range + 1)]
    elif fam in ("CS3", "B4"):
        triples = sorted(t for size in range(1, args.range + 1) for t in mnp_triples(size))
        graphs = [generate(fam, *t) for t in triples]
    else:
        graphs = [generate(fam)]
    out = _out(args.output)
    for g in graphs:
        out.write(write_graph6(g) + "\n")
    if out is not sys.stdout:
        out.close()
    return EXIT_OK


def cmd_verify(args) -> int:
    from .theorems import run_all

    only = [x for part in (args.only or []) for x in part.split(",") if x]
    reports = run_all(args.max_n, args.max_mn, args.odd_max, args.seed, only or None)
    out = _out(args.output)
    for r in reports:
        out.write(_dump({"version": SCHEMA_VERSION, **r.as_dict()}) + "\n")
    if out is not sys.stdout:
        out.close()
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def enumeration_summary(max_vertices: int, literal: bool = False) -> dict:
    """Run the grower plus the census and collect every number the report shows."""
    from .growth import (classify_terminal_catalog, complement_subgraph_census,
                         connected_nonbipartite_survivors, enumerate_to)

    report = enumerate_to(max_vertices, literal=literal)
    catalog = classify_terminal_catalog(report)
    survivors = connected_nonbipartite_survivors(report)
    nonbip, disconnected, connected = complement_subgraph_census()
    realized: dict[str, list[int]] = {}
    for e in catalog:
        if e.family == "B4":
            realized.setdefault(f"{e.params['m']},{e.params['n']}", []).append(e.params["p"])
    return {
        "version": SCHEMA_VERSION,
        "max_vertices": max_vertices,
        "literal_moves": literal,
        "levels": {str(k): v for k, v in report.counts().items()},
        "rooted_states": {str(k): v for k, v in report.state_counts.items()},
        "terminal_count": len(catalog),
        "terminal_matched": sum(e.matched for e in catalog),
        "terminal_unmatched": sum(not e.matched for e in catalog),
        "catalog": [{"graph6": e.graph6, "family": e.family, "params": e.params,
                     "isolated": e.isolated, "matched": e.matched, "host": e.host}
                    for e in catalog],
        "realized_p": {k: sorted(v) for k, v in sorted(realized.items())},
        "survivors": {"count": len(survivors),
                      "graph6": [s.decode("ascii") for s in survivors]},
        "census": {"nonbipartite": nonbip, "disconnected_complement": disconnected,
                   "connected_complement": len(connected)},
        "census_matches_survivors": sorted(connected) == sorted(survivors),
        "_terminal_graph6": sorted(e.graph6 for e in catalog),
    }


def cmd_enumerate(args) -> int:
    if not 3 <= args.max_vertices <= 13:
        print("error: --max-vertices must lie in 3..13", file=sys.stderr)
        return EXIT_USAGE
    summary = enumeration_summary(args.max_vertices, args.literal)
    terminal = summary.pop("_terminal_graph6")
    status = EXIT_OK

    if args.oracle_check:
        from .growth import enumerate_to, oracle_grown_subset

        small = enumerate_to(min(args.max_vertices, 7), literal=args.literal)
        agree = {}
        for k in range(3, min(args.max_vertices, 7) + 1):
            agree[str(k)] = set(oracle_grown_subset(k)) == set(small.levels[k])
        summary["oracle_agreement"] = agree
        if not all(agree.values()):
            status = EXIT_FAIL
            print(f"oracle mismatch at levels {[k for k, ok in agree.items() if not ok]}", file=sys.stderr)

    if args.emit_graph6:
        Path(args.emit_graph6).write_text("".join(s + "\n" for s in terminal), encoding="ascii")
    if args.report:
        Path(args.report).write_text(json.dumps(summary, indent=2) + "\n", encoding="ascii")

    if args.fixtures:
        fx = Path(args.fixtures) / f"terminal_{args.max_vertices}.g6"
        if args.bless:
            fx.parent.mkdir(parents=True, exist_ok=True)
            fx.write_text("".join(s + "\n" for s in terminal), encoding="ascii")
        elif not fx.exists() or fx.read_text(encoding="ascii").split() != terminal:
            print(f"fixture mismatch: {fx}", file=sys.stderr)
            status = EXIT_FAIL

    print(f"levels: {summary['levels']}")
    print(f"terminal graphs at {args.max_vertices}: {summary['terminal_count']} "
          f"({summary['terminal_matched']} matched, {summary['terminal_unmatched']} unmatched)")
    print(f"connected survivors with non-bipartite complement: {summary['survivors']['count']}")
    print(f"census: {summary['census']['nonbipartite']} non-bipartite, "
          f"{summary['census']['disconnected_complement']} with disconnected complement")

    if args.expect:
        try:
            want = [int(x) for x in args.expect.split(",")]
        except ValueError:
            print("error: --expect takes four comma-separated integers", file=sys.stderr)
            return EXIT_USAGE
        if len(want) != 4:
            print("error: --expect takes four comma-separated integers", file=sys.stderr)
            return EXIT_USAGE
        got = [summary["terminal_count"], summary["survivors"]["count"],
               summary["census"]["nonbipartite"], summary["census"]["disconnected_complement"]]
        names = ["terminal", "survivors", "census_nonbipartite", "census_disconnected"]
        diff = [f"{nm}: expected {w}, got {g}" for nm, w, g in zip(names, want, got) if w != g]
        if diff:
            print("expectation mismatch:\n  " + "\n  ".join(diff), file=sys.stderr)
            status = EXIT_FAIL
    return status


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lambda3", description=__doc__)
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit family members as graph6")
    g.add_argument("--family", required=True, type=str.upper, choices=FAMILIES)
    g.add_argument("-m", type=int)
    g.add_argument("-n", type=int)
    g.add_argument("-p", type=int)
    g.add_argument("--range", type=int, metavar="SIZE",
                   help="sweep n <= SIZE (one-parameter) or m+n-1 <= SIZE (triples)")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    for name, func, text in (("spectrum", cmd_spectrum, "spectra of graph6 lines"),
                             ("classify", cmd_classify, "family membership of graph6 lines")):
        s = sub.add_parser(name, help=text)
        s.add_argument("input", nargs="?", help="graph6 file (default stdin)")
        s.add_argument("-o", "--output")
        s.set_defaults(func=func)

    v = sub.add_parser("verify", help="run the spectral checkers")
    v.add_argument("--only", action="append", help="comma-separated checker names")
    v.add_argument("--max-n", type=int, default=8)
    v.add_argument("--max-mn", type=int, default=13)
    v.add_argument("--odd-max", type=int, default=13)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="grow line graphs from 3K1")
    e.add_argument("--max-vertices", type=int, default=12)
    e.add_argument("--emit-graph6", metavar="PATH")
    e.add_argument("--report", metavar="PATH")
    e.add_argument("--oracle-check", action="store_true")
    e.add_argument("--expect", metavar="T,S,C,D")
    e.add_argument("--literal", action="store_true",
                   help="only share a new vertex between cliques with no edge between them")
    e.add_argument("--fixtures", metavar="DIR", help="compare the terminal catalog with DIR")
    e.add_argument("--bless", action="store_true", help="rewrite the fixture instead of comparing")
    e.set_defaults(func=cmd_enumerate)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
