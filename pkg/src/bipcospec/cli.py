"""Command-line front end.

Exit codes: 0 success (or the property holds), 1 the property fails,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .construction import construct_pair
from .example import reproduce_example
from .graph import BipartiteGraph, IsolatedVertexError, full_adjacency
from .iso import decide_pair_isomorphism, graph_isomorphic, pet_witness
from .matrix import MatrixParseError, NonSquareError, format_matrix, read_matrix
from .report import SCHEMA, SearchConfig, run_search, verify_pair
from .spectra import certify

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _range(text: str, cast=int) -> tuple:
    lo, sep, hi = text.partition("-")
    if not sep:
        return (cast(lo), cast(lo))
    return (cast(lo), cast(hi))


def parse_dims(text: str) -> tuple[tuple[int, int], ...]:
    """``"m,n,p,q"`` where each entry is ``a`` or an inclusive range ``a-b``."""
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError(f"--dims needs four comma-separated entries, got {text!r}")
    return tuple(_range(p) for p in parts)


def _perm_line(perm) -> str:
    return " ".join(str(x) for x in perm)


def _fmt_root(x: float) -> str:
    x = 0.0 if abs(x) < 5e-13 else x
    return f"{x:.12f}"


def cmd_construct(args) -> int:
    pair = construct_pair(read_matrix(args.v), read_matrix(args.b))
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, "g1": pair.g1.to_dict(), "g2": pair.g2.to_dict()}))
    elif args.format == "dot":
        l1, l2 = pair.vertex_labels()
        print(pair.g1.to_dot("g1", [f"{i},{k}" for i, k in l1]))
        print(pair.g2.to_dot("g2", [f"{i},{k}" for i, k in l2]))
    else:
        print(f"# g1: {pair.g1.left}+{pair.g1.right} vertices, {pair.g1.n_edges} edges")
        print(format_matrix(pair.g1.biadj))
        print()
        print(f"# g2: {pair.g2.left}+{pair.g2.right} vertices, {pair.g2.n_edges} edges")
        print(format_matrix(pair.g2.biadj))
    return EXIT_OK


def cmd_spectrum(args) -> int:
    g = BipartiteGraph.from_biadj(read_matrix(args.graph))
    cert = certify(g)
    if args.format == "json":
        out = {"schema": SCHEMA, **cert.to_dict()}
        if args.roots:
            out["adjacency_eigenvalues"] = [float(_fmt_root(x)) for x in cert.adjacency_eigenvalues()]
            out["normalized_laplacian_eigenvalues"] = [
                float(_fmt_root(x)) for x in cert.normalized_laplacian_eigenvalues()
            ]
        print(json.dumps(out))
    else:
        print("adjacency charpoly:", cert.adj_charpoly)
        print("  coefficients (ascending):", cert.adj_charpoly.to_json())
        print("D^-1 A charpoly:", cert.norm_charpoly)
        print("  coefficients (ascending):", cert.norm_charpoly.to_json())
        if args.roots:
            print("adjacency eigenvalues:", " ".join(_fmt_root(x) for x in cert.adjacency_eigenvalues()))
            print("normalized Laplacian eigenvalues:",
                  " ".join(_fmt_root(x) for x in cert.normalized_laplacian_eigenvalues()))
    return EXIT_OK


def _figures(args, v, b, report, stem) -> None:
    if not args.plot_dir:
        return
    from .plotting import write_figures

    for path in write_figures(construct_pair(v, b), report, args.plot_dir, stem):
        print(f"wrote {path}", file=sys.stderr)


def cmd_verify(args) -> int:
    v, b = read_matrix(args.v), read_matrix(args.b)
    report = verify_pair(v, b, exhaustive=args.exhaustive, timing=args.timing)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(report.to_json() + "\n")
        print(report.summary())
    elif args.format == "json":
        print(report.to_json())
    else:
        print(report.summary())
    _figures(args, v, b, report, "verify")
    return EXIT_OK


def cmd_pet(args) -> int:
    a = read_matrix(args.matrix)
    w = pet_witness(a)
    if w is None:
        print("not PET")
        return EXIT_FAIL
    print("PET")
    print(_perm_line(w.row_perm))
    print(_perm_line(w.col_perm))
    return EXIT_OK


def cmd_iso(args) -> int:
    a, b = read_matrix(args.first), read_matrix(args.second)
    if args.pair:
        verdict = decide_pair_isomorphism(construct_pair(a, b), exhaustive=args.exhaustive)
    else:
        g, h = BipartiteGraph.from_biadj(a), BipartiteGraph.from_biadj(b)
        verdict = graph_isomorphic(full_adjacency(g), full_adjacency(h))
    print(f"{'isomorphic' if verdict.isomorphic else 'not isomorphic'} ({verdict.decided_by})")
    if verdict.witness is not None:
        print(_perm_line(verdict.witness))
    return EXIT_OK if verdict.isomorphic else EXIT_FAIL


def cmd_search(args) -> int:
    m, n, p, q = parse_dims(args.dims)
    config = SearchConfig(
        m=m, n=n, p=p, q=q,
        density=_range(args.density, float),
        biregular=args.biregular,
        symmetric_b=args.symmetric_b,
        samples=args.samples,
        seed=args.seed,
        exhaustive=args.exhaustive,
        jobs=args.jobs,
    )
    config.validate()
    hits = run_search(config)
    for report in hits:
        if args.format == "text":
            print(f"sample {report.sample}: v={format_matrix(report.v).splitlines()} "
                  f"b={format_matrix(report.b).splitlines()} decided_by={report.iso_verdict.decided_by}")
        else:
            print(report.to_json())
    print(f"{len(hits)} hits in {config.samples} samples", file=sys.stderr)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    from .example import B_FIG, V_FIG

    report, checks = reproduce_example(timing=args.timing)
    if args.format == "json":
        out = report.to_dict()
        out["checks"] = {name: ok for name, ok in checks}
        print(json.dumps(out))
    else:
        print(report.summary())
        for name, ok in checks:
            print(f"[{'PASS' if ok else 'FAIL'}] {name}")
    _figures(args, V_FIG, B_FIG, report, "example")
    return EXIT_OK if all(ok for _, ok in checks) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bipcospec",
        description="Cospectral bipartite graphs from partitioned tensor products.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build the pair for biadjacency files V and B")
    p.add_argument("v")
    p.add_argument("b")
    p.add_argument("--format", choices=("json", "dot", "text"), default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("spectrum", help="exact characteristic polynomials of one bipartite graph")
    p.add_argument("graph", help="biadjacency matrix file")
    p.add_argument("--roots", action="store_true", help="also print eigenvalues to 12 digits")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="cospectrality and isomorphism report for V and B")
    p.add_argument("v")
    p.add_argument("b")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", help="write the JSON report here and print a summary")
    p.add_argument("--exhaustive", action="store_true", help="bypass theorem shortcuts")
    p.add_argument("--timing", action="store_true", help="include per-stage timings (not reproducible)")
    p.add_argument("--plot-dir", help="render graph and spectrum figures into this directory")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pet", help="is the square matrix equivalent to its transpose?")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_pet)

    p = sub.add_parser("iso", help="isomorphism of two bipartite graphs (or of the pair built from V and B)")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--pair", action="store_true", help="treat the inputs as V and B and compare the constructed pair")
    p.add_argument("--exhaustive", action="store_true")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("search", help="random search for cospectral nonisomorphic pairs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--dims", default="1-4,1-4,1-4,1-4", help="m,n,p,q; each a or a-b")
    p.add_argument("--density", default="0.5", help="F or lo-hi")
    p.add_argument("--biregular", action="store_true", help="sample V as a biregular graph")
    p.add_argument("--symmetric-b", action="store_true", help="sample B symmetric (square)")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("reproduce-example", help="rerun the worked example and check every verdict")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--timing", action="store_true")
    p.add_argument("--plot-dir")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MatrixParseError, IsolatedVertexError, NonSquareError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
