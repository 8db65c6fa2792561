"""Command-line front end.

Exit codes: 0 success, 1 reproduce found failures, 2 bad input (schema,
unreadable file, bad family parameters), 3 analysis error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from . import reproduce
from .errors import BadParams, CertificateError, GraphError, QwsedError, SchemaError, SpectralError
from .families import BUILDERS, FamilySpec, build, parse_param
from .graph import WeightedGraph
from .sedentary import ClassifyOptions, classify_vertex, numeric_scan
from .spectral import eigendecompose

EXIT_FAIL, EXIT_INPUT, EXIT_ANALYSIS = 1, 2, 3


class InputError(Exception):
    pass


def _positive(text: str) -> float:
    val = float(text)
    if not val > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return val


def load_graph(path: str) -> WeightedGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return WeightedGraph.from_json(text)
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _form(S, k: int, tol: float) -> str | None:
    s = S.surd(k, tol)
    if s is None:
        return None
    parts = []
    for d, c in s.terms:
        coef = str(c)
        parts.append(coef if d == 1 else f"{coef}*sqrt({d})")
    return " + ".join(parts) if parts else "0"


def spectrum_report(G: WeightedGraph, cluster_tol: float = 1e-8, recognize_tol: float = 1e-9) -> dict:
    S = eigendecompose(G, cluster_tol)
    return {
        "n": G.n,
        "eigenvalues": [
            {"value": float(lam), "multiplicity": m, "form": _form(S, k, recognize_tol)}
            for k, (lam, m) in enumerate(zip(S.eigenvalues, S.multiplicities))
        ],
    }


def classify_report(G: WeightedGraph, vertices: list[int] | None, opts: ClassifyOptions) -> str:
    """Verdicts as a JSON document; identical inputs give identical bytes."""
    S = eigendecompose(G)
    vs = range(G.n) if vertices is None else vertices
    rows = [classify_vertex(G, S, u, opts).to_dict() for u in vs]
    return json.dumps(rows, indent=2) + "\n"


def scan_rows(G: WeightedGraph, u: int, horizon: float, step: float | None) -> list[tuple[float, complex]]:
    """Grid samples plus refined minima, strictly increasing in ``t``."""
    G.check_vertex(u)
    S = eigendecompose(G)
    sc = numeric_scan(S, u, horizon, step, use_period=False)
    pts = dict(zip(sc.times.tolist(), sc.values.tolist()))
    pts.update(sc.refined)
    return sorted(pts.items())


def write_csv(rows, out: str | None) -> None:
    handle = open(out, "w", newline="") if out else sys.stdout
    try:
        w = csv.writer(handle)
        w.writerow(["t", "re", "im", "abs"])
        for t, z in rows:
            w.writerow([repr(float(t)), repr(z.real), repr(z.imag), repr(float(np.hypot(z.real, z.imag)))])
    finally:
        if out:
            handle.close()


# commands


def cmd_spectrum(args) -> int:
    G = load_graph(args.graph)
    _write(json.dumps(spectrum_report(G, args.tol), indent=2) + "\n", args.out)
    return 0


def _options(args) -> ClassifyOptions:
    return ClassifyOptions(horizon=args.horizon, step=args.step, coeff_bound=args.coeff_bound,
                           relation_tol=args.relation_tol, half_tol=args.half_tol)


def cmd_classify(args) -> int:
    G = load_graph(args.graph)
    vertices = None if args.vertex is None else [args.vertex]
    _write(classify_report(G, vertices, _options(args)), args.out)
    return 0


def cmd_scan(args) -> int:
    G = load_graph(args.graph)
    write_csv(scan_rows(G, args.vertex, args.horizon, args.step), args.csv)
    return 0


def cmd_build(args) -> int:
    try:
        params = dict(parse_param(p) for p in args.param)
        G = build(FamilySpec(args.family, params))
    except BadParams as exc:
        raise InputError(f"family '{args.family}': {exc}") from None
    _write(G.to_json(indent=2) + "\n", args.out)
    return 0


def cmd_reproduce(args) -> int:
    results = reproduce.run_suite(args.suite, args.workers)
    print(reproduce.format_table(results))
    return 0 if all(r.passed for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qwsed", description="Sedentary vertices of continuous-time quantum walks.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="eigenvalues, multiplicities and recognized forms")
    sp.add_argument("graph")
    sp.add_argument("--tol", type=_positive, default=1e-8, help="relative eigenvalue clustering tolerance")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_spectrum)

    defaults = ClassifyOptions()
    cp = sub.add_parser("classify", help="per-vertex verdicts as JSON")
    cp.add_argument("graph")
    cp.add_argument("--vertex", type=int)
    cp.add_argument("--horizon", type=_positive, default=defaults.horizon)
    cp.add_argument("--step", type=_positive, default=None)
    cp.add_argument("--coeff-bound", type=int, default=defaults.coeff_bound)
    cp.add_argument("--relation-tol", type=_positive, default=defaults.relation_tol)
    cp.add_argument("--half-tol", type=_positive, default=defaults.half_tol)
    cp.add_argument("--out")
    cp.set_defaults(func=cmd_classify)

    sc = sub.add_parser("scan", help="CSV trace of U(t)_uu")
    sc.add_argument("graph")
    sc.add_argument("--vertex", type=int, required=True)
    sc.add_argument("--horizon", type=_positive, default=defaults.horizon)
    sc.add_argument("--step", type=_positive, default=None)
    sc.add_argument("--csv", help="output path (default stdout)")
    sc.set_defaults(func=cmd_scan)

    bp = sub.add_parser("build", help="write a named family as graph JSON")
    bp.add_argument("family", choices=sorted(BUILDERS))
    bp.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    bp.add_argument("--out")
    bp.set_defaults(func=cmd_build)

    rp = sub.add_parser("reproduce", help="run the reference checks and print a table")
    rp.add_argument("--suite", choices=reproduce.SUITES, default="all")
    rp.add_argument("--workers", type=int, default=1)
    rp.set_defaults(func=cmd_reproduce)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, SchemaError) as exc:
        print(f"qwsed: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (GraphError, SpectralError, CertificateError, QwsedError) as exc:
        print(f"qwsed: analysis error: {exc}", file=sys.stderr)
        return EXIT_ANALYSIS


if __name__ == "__main__":
    sys.exit(main())
