"""Command line front end.

Data goes to standard output (or ``--out``); diagnostics go to standard
error.  Exit codes: 0 success, 1 a check failed or a resource cap was hit,
2 bad flags or bad input, 3 a curve the classifier could not place.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import List, Optional, Sequence

from .classifier import Unclassifiable, classify, reference_vertex, ClassLabel
from .complex import ResourceCapExceeded, build_complex, enumerate_vertices, homology_ranks, merge_vertices, twist_orbit
from .curve import CurveError, LayoutMismatch, validate
from .layout import build_layout, reference_region
from .oracle import arc_pair_trials, equivariance_suite, reference_matrix_agreement
from .tangle import make_vertex

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNCLASSIFIABLE = 0, 1, 2, 3


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _non_negative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def _weight(text: str) -> int:
    v = _positive(text)
    if v < 2:
        raise argparse.ArgumentTypeError("max weight must be at least 2")
    return v


def _emit(text: str, out: Optional[str]) -> None:
    if out and out != "-":
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False) + "\n"


def _fail(err: dict, code: int) -> int:
    sys.stderr.write(json.dumps(err) + "\n")
    return code


# ------------------------------------------------------------------ commands


def cmd_layout(args) -> int:
    _emit(_dump(build_layout(args.n).to_json()), args.out)
    return EXIT_OK


def cmd_refs(args) -> int:
    layout = build_layout(args.n)
    curves, regions = [], []
    for i in range(1, args.n + 1):
        for s in "+-":
            rec = reference_vertex(args.n, ClassLabel(i, s)).to_json()
            curves.append(rec)
            regions.append(reference_region(layout, i, s).to_json())
    if args.format == "jsonl":
        _emit("".join(_dump(r) for r in curves + regions), args.out)
    else:
        _emit(_dump({"curves": curves, "regions": regions}), args.out)
    return EXIT_OK


def _read_curve_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        return json.loads(text)
    except (OSError, ValueError) as exc:
        raise CurveError(f"cannot read curve JSON: {exc}") from None


def cmd_classify(args) -> int:
    try:
        curve = validate(_read_curve_json(args.curve))
        if curve.n != args.n:
            raise LayoutMismatch(f"curve has n={curve.n}, expected n={args.n}")
        vertex = make_vertex(curve)
    except CurveError as exc:
        return _fail(exc.to_json(), EXIT_USAGE)
    try:
        label = classify(vertex)
    except Unclassifiable as exc:
        return _fail({"error": Unclassifiable.code, "detail": str(exc)}, EXIT_UNCLASSIFIABLE)
    _emit(_dump({"label": label.to_json(), "side": vertex.side.value}), args.out)
    return EXIT_OK


def _vertices(args):
    layout = build_layout(args.n)
    return merge_vertices(
        enumerate_vertices(layout, args.max_weight, cap=args.cap), twist_orbit(layout, args.twist_depth)
    )


def cmd_enumerate(args) -> int:
    try:
        vs = _vertices(args)
    except ResourceCapExceeded as exc:
        return _fail({"error": exc.code, "detail": str(exc)}, EXIT_FAIL)
    if args.format == "json":
        _emit(_dump([v.to_json() for v in vs]), args.out)
    else:
        _emit("".join(_dump(v.to_json()) for v in vs), args.out)
    return EXIT_OK


def _dot(cx) -> str:
    lines = ["graph disjointness {"]
    for k, v in enumerate(cx.vertices):
        shape = "box" if v.side.value == "above" else "ellipse"
        lines.append(f'  {k} [label="{k}", shape={shape}];')
    for k, l in cx.edges:
        lines.append(f"  {k} -- {l};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _svg(cx, size: int = 640) -> str:
    m = len(cx.vertices)
    r = size * 0.42
    c = size / 2
    pts = [
        (c + r * math.cos(2 * math.pi * k / max(m, 1)), c + r * math.sin(2 * math.pi * k / max(m, 1)))
        for k in range(m)
    ]
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">']
    out.append('<rect width="100%" height="100%" fill="white"/>')
    for k, l in cx.edges:
        (x1, y1), (x2, y2) = pts[k], pts[l]
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="#888" stroke-width="0.6"/>')
    for k, (x, y) in enumerate(pts):
        fill = "#c0392b" if cx.vertices[k].side.value == "above" else "#2c6fbb"
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="{fill}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def cmd_complex(args) -> int:
    try:
        vs = _vertices(args)
    except ResourceCapExceeded as exc:
        return _fail({"error": exc.code, "detail": str(exc)}, EXIT_FAIL)
    dim_cap = args.dim_cap if args.dim_cap is not None else args.n
    cx = build_complex(vs, dim_cap, jobs=args.jobs)
    if args.format == "dot":
        _emit(_dot(cx), args.out)
    elif args.format == "svg":
        _emit(_svg(cx), args.out)
    else:
        h = homology_ranks(cx)
        _emit(_dump(cx.to_json(h.reduced_betti)), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .suite import verify_suite

    report = verify_suite(
        build_layout(args.n), args.max_weight, args.twist_depth, args.seed, dim_cap=args.dim_cap, jobs=args.jobs
    )
    _emit(report.dumps(), args.out)
    if report.passed:
        return EXIT_OK
    return EXIT_UNCLASSIFIABLE if report.unclassifiable else EXIT_FAIL


def cmd_oracle_check(args) -> int:
    arcs = arc_pair_trials(args.n, args.samples, args.seed)
    refs = reference_matrix_agreement(args.n)
    eq = equivariance_suite(args.n, args.samples, args.seed)
    report = {
        "n": args.n,
        "samples": args.samples,
        "seed": args.seed,
        "reference_disagreements": refs,
        "arc_disagreements": arcs,
        "equivariance_counterexamples": eq["counterexamples"],
    }
    _emit(_dump(report), args.out)
    return EXIT_FAIL if (arcs or refs or eq["counterexamples"]) else EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bridgedisks", description="Disk complexes of unknot bridge spheres.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=None):
        sp.add_argument("--n", type=_positive, required=True, help="bridge number minus one")
        sp.add_argument("--out", default=None, help="output file (default: standard output)")
        if fmt:
            sp.add_argument("--format", choices=fmt, default=fmt[0])

    def truncation(sp):
        sp.add_argument("--max-weight", type=_weight, default=10)
        sp.add_argument("--twist-depth", type=_non_negative, default=0)
        sp.add_argument("--cap", type=_positive, default=5_000_000, help="encoding budget for enumeration")

    sp = sub.add_parser("layout", help="punctures and shadow segments")
    common(sp)
    sp.set_defaults(func=cmd_layout)

    sp = sub.add_parser("refs", help="reference curves and their disks E_i")
    common(sp, ["json", "jsonl"])
    sp.set_defaults(func=cmd_refs)

    sp = sub.add_parser("classify", help="class label of a compressing curve")
    common(sp)
    sp.add_argument("--curve", required=True, help="curve JSON file, or - for standard input")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("enumerate", help="vertices up to a weight bound plus a twist orbit")
    common(sp, ["jsonl", "json"])
    truncation(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("complex", help="truncated disk complex and its homology")
    common(sp, ["json", "dot", "svg"])
    truncation(sp)
    sp.add_argument("--dim-cap", type=_positive, default=None, help="largest simplex dimension (default n)")
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.set_defaults(func=cmd_complex)

    sp = sub.add_parser("verify", help="run the acceptance checks, print the report")
    common(sp)
    sp.add_argument("--max-weight", type=_weight, default=10)
    sp.add_argument("--twist-depth", type=_non_negative, default=4)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--dim-cap", type=_positive, default=None)
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle-check", help="engine against closed forms and twist equivariance")
    common(sp)
    sp.add_argument("--samples", type=_positive, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_oracle_check)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
