"""Command-line front end: verify, enumerate, special, sweep, draw.

Exit codes: 0 success (identity verified, or hypothesis failed without
--strict); 1 falsification (determinants differ although the hypothesis
holds, or any inequality under --strict); 2 input error; 3 enumeration or
sweep guard breached.  The environment variable SKEWLGV_MAX_TUPLES
overrides the default path-tuple cap of the brute-force enumerator.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import connectors as conn
from . import identity
from .connectors import ComplementError, DEFAULT_TUPLE_CAP, EnumerationCapError
from .lattice import build_L, build_R, render
from .shape import IndexSelection, ShapeError, SkewShape, make_skew
from .poly import Polynomial

SCHEMA_VERSION = 1

SWEEP_MAX_N = 5
SWEEP_MAX_PART = 5

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_INPUT = 2
EXIT_GUARD = 3


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _tuple_cap() -> int:
    raw = os.environ.get("SKEWLGV_MAX_TUPLES")
    if raw is None:
        return DEFAULT_TUPLE_CAP
    try:
        return int(raw)
    except ValueError:
        raise ShapeError(f"SKEWLGV_MAX_TUPLES must be an integer, got {raw!r}")


def _problem(args: argparse.Namespace) -> tuple[SkewShape, IndexSelection]:
    alpha = args.alpha
    beta = args.beta
    if args.n != len(alpha) or args.n != len(beta):
        raise ShapeError(
            f"--n {args.n} does not match part counts {len(alpha)}/{len(beta)}"
        )
    shape = make_skew(alpha, beta)
    sel = IndexSelection.make(args.n, args.A, args.B)
    return shape, sel


def _poly_str(p: Polynomial | None) -> str | None:
    return None if p is None else str(p)


def _report_dict(report: identity.VerificationReport) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "n": report.n,
        "alpha": list(report.alpha),
        "beta": list(report.beta),
        "A": list(report.a_set),
        "B": list(report.b_set),
        "hypothesis_ok": report.hypothesis_ok,
        "violating_pairs": [list(p) for p in report.violating_pairs],
        "det_h": str(report.det_h),
        "det_e": str(report.det_e),
        "equal": report.equal,
        "brute_blue": _poly_str(report.brute_blue),
        "brute_red": _poly_str(report.brute_red),
        "isolated_points": [list(p) for p in report.isolated],
        "row_connected": report.row_connected,
    }


def _print_report(report: identity.VerificationReport) -> None:
    print(f"shape: alpha={list(report.alpha)} beta={list(report.beta)}")
    print(f"selection: A={list(report.a_set)} B={list(report.b_set)}")
    status = "holds" if report.hypothesis_ok else "fails"
    print(f"parallelogram hypothesis: {status}")
    if report.violating_pairs:
        pairs = ", ".join(f"(a'={a}, b'={b})" for a, b in report.violating_pairs)
        print(f"violating pairs: {pairs}")
    if report.isolated:
        pts = ", ".join(f"({p.i},{p.j})" for p in report.isolated)
        print(f"isolated designated points: {pts}")
    print(f"det_h = {report.det_h}")
    print(f"det_e = {report.det_e}")
    if report.brute_blue is not None:
        print(f"brute blue sum = {report.brute_blue}")
        print(f"brute red sum  = {report.brute_red}")
    print(f"determinants equal: {'yes' if report.equal else 'NO'}")


def cmd_verify(args: argparse.Namespace) -> int:
    shape, sel = _problem(args)
    report = identity.verify_main(
        shape, sel, with_brute=args.brute, cap=_tuple_cap()
    )
    if args.json:
        print(json.dumps(_report_dict(report), indent=2))
    else:
        _print_report(report)
    if report.equal:
        return EXIT_OK
    if report.hypothesis_ok or args.strict:
        return EXIT_FALSIFIED
    return EXIT_OK


def _connector_dict(c: conn.Connector) -> dict:
    return {
        "flavor": c.flavor,
        "paths": [[[p.i, p.j] for p in path.nodes] for path in c.paths],
        "weight": str(c.weight),
    }


def _print_connector(idx: int, c: conn.Connector, indent: str = "") -> None:
    print(f"{indent}connector {idx}: weight {c.weight}")
    for k, path in enumerate(c.paths, start=1):
        route = " -> ".join(f"({p.i},{p.j})" for p in path.nodes)
        print(f"{indent}  path {k}: {route}")


def cmd_enumerate(args: argparse.Namespace) -> int:
    shape, sel = _problem(args)
    cap = _tuple_cap()
    if args.complement and args.flavor != "L":
        raise ShapeError("--complement requires --flavor L")
    l_lat = build_L(shape, sel)
    r_lat = build_R(shape, sel)
    lat = l_lat if args.flavor == "L" else r_lat
    items = conn.enumerate_connectors(lat, disjoint_only=args.disjoint, cap=cap)
    total = Polynomial.zero()
    for c in items:
        if c.is_disjoint():
            total = total + c.weight
    if args.json:
        payload = {
            "schema": SCHEMA_VERSION,
            "flavor": args.flavor,
            "disjoint_only": args.disjoint,
            "connectors": [_connector_dict(c) for c in items],
            "disjoint_weight_sum": str(total),
        }
        if args.complement:
            payload["complements"] = [
                _connector_dict(conn.complementary(c, l_lat, r_lat))
                for c in items
                if c.is_disjoint()
            ]
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    for idx, c in enumerate(items, start=1):
        _print_connector(idx, c)
        if args.complement and c.is_disjoint():
            red = conn.complementary(c, l_lat, r_lat)
            print("  complementary:")
            _print_connector(idx, red, indent="  ")
    print(f"{len(items)} connectors, disjoint weight sum: {total}")
    return EXIT_OK


def cmd_special(args: argparse.Namespace) -> int:
    sel = IndexSelection.make(args.n, args.A, args.B)
    kind = args.kind
    if kind == "binomial":
        rep = identity.verify_binomial(args.n, sel)
        payload = {
            "schema": SCHEMA_VERSION,
            "kind": kind,
            "n": args.n,
            "A": list(sel.a_set),
            "B": list(sel.b_set),
            "lhs": rep.lhs,
            "rhs": rep.rhs,
            "equal": rep.equal,
        }
        text = f"det(C(b,a)) = {rep.lhs}, complement det = {rep.rhs}"
        equal = rep.equal
    elif kind == "qbinomial":
        qrep = identity.verify_qbinomial(args.n, sel)
        payload = {
            "schema": SCHEMA_VERSION,
            "kind": kind,
            "n": args.n,
            "A": list(sel.a_set),
            "B": list(sel.b_set),
            "det_lhs": str(qrep.det_lhs),
            "det_rhs": str(qrep.det_rhs),
            "equal": qrep.equal,
        }
        text = f"lhs = {qrep.det_lhs}\nrhs = {qrep.det_rhs}"
        equal = qrep.equal
    elif kind == "sympoly":
        srep = identity.verify_sympoly_binomial(args.n, sel)
        payload = {
            "schema": SCHEMA_VERSION,
            "kind": kind,
            "n": args.n,
            "A": list(sel.a_set),
            "B": list(sel.b_set),
            "det_h": str(srep.det_h_direct),
            "det_e": str(srep.det_e_direct),
            "equal": srep.equal,
            "routes_agree": srep.routes_agree,
        }
        text = (
            f"det_h = {srep.det_h_direct}\ndet_e = {srep.det_e_direct}\n"
            f"staircase route agrees: {'yes' if srep.routes_agree else 'NO'}"
        )
        equal = srep.equal and srep.routes_agree
    else:
        arep = identity.verify_aitken(args.m, args.n, sel)
        payload = {
            "schema": SCHEMA_VERSION,
            "kind": kind,
            "m": args.m,
            "n": args.n,
            "A": list(sel.a_set),
            "B": list(sel.b_set),
            "det_h": str(arep.det_h),
            "det_e": str(arep.det_e),
            "equal": arep.equal,
        }
        text = f"det_h = {arep.det_h}\ndet_e = {arep.det_e}"
        equal = arep.equal
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)
        print(f"equal: {'yes' if equal else 'NO'}")
    return EXIT_OK if equal else EXIT_FALSIFIED


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.max_n > SWEEP_MAX_N or args.max_part > SWEEP_MAX_PART:
        print(
            f"sweep guard: bounds limited to n <= {SWEEP_MAX_N}, parts <= {SWEEP_MAX_PART}",
            file=sys.stderr,
        )
        return EXIT_GUARD
    stream = None
    if args.jsonl:
        stream = open(args.jsonl, "w", encoding="utf-8")

    def emit(report: identity.VerificationReport) -> None:
        if stream is not None:
            stream.write(json.dumps(_report_dict(report)) + "\n")

    try:
        summary = identity.run_sweep(
            args.max_n,
            args.max_part,
            hypothesis_only=args.hypothesis_only,
            per_case=emit,
        )
    finally:
        if stream is not None:
            stream.close()
    payload = {
        "schema": SCHEMA_VERSION,
        "max_n": args.max_n,
        "max_part": args.max_part,
        "hypothesis_only": args.hypothesis_only,
        "total": summary.total,
        "holds_equal": summary.holds_equal,
        "fails_equal": summary.fails_equal,
        "fails_unequal": summary.fails_unequal,
        "holds_unequal": summary.holds_unequal,
    }
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(f"cases: {summary.total}")
        print(f"hypothesis holds, equal:   {summary.holds_equal}")
        print(f"hypothesis fails, equal:   {summary.fails_equal}")
        print(f"hypothesis fails, unequal: {summary.fails_unequal}")
        print(f"hypothesis holds, UNEQUAL: {summary.holds_unequal}")
    return EXIT_FALSIFIED if summary.holds_unequal else EXIT_OK


def cmd_draw(args: argparse.Namespace) -> int:
    alpha = args.alpha
    beta = args.beta
    if args.n != len(alpha) or args.n != len(beta):
        raise ShapeError(
            f"--n {args.n} does not match part counts {len(alpha)}/{len(beta)}"
        )
    shape = make_skew(alpha, beta)
    sel = None
    if args.A is not None or args.B is not None:
        sel = IndexSelection.make(args.n, args.A or [], args.B or [])
    lat = build_L(shape, sel) if args.flavor == "L" else build_R(shape, sel)
    print(render(lat))
    return EXIT_OK


def _add_problem_args(p: argparse.ArgumentParser, *, selection_required: bool) -> None:
    p.add_argument("--n", type=int, required=True, help="number of rows")
    p.add_argument("--alpha", type=_int_list, required=True, help="inner partition, comma list")
    p.add_argument("--beta", type=_int_list, required=True, help="outer partition, comma list")
    p.add_argument("--A", type=_int_list, required=selection_required, default=None, help="row subset A, comma list (may be empty)")
    p.add_argument("--B", type=_int_list, required=selection_required, default=None, help="row subset B, comma list (may be empty)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewlgv",
        description="Exact checks of the h/e determinant duality on skew-diagram lattices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="check the duality for one shape and selection")
    _add_problem_args(p_verify, selection_required=True)
    p_verify.add_argument("--brute", action="store_true", help="also enumerate connectors")
    p_verify.add_argument("--strict", action="store_true", help="exit 1 on any inequality")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_enum = sub.add_parser("enumerate", help="list connectors with weights")
    _add_problem_args(p_enum, selection_required=True)
    p_enum.add_argument("--flavor", choices=("L", "R"), required=True)
    p_enum.add_argument("--disjoint", action="store_true", help="only vertex-disjoint tuples")
    p_enum.add_argument("--complement", action="store_true", help="also print complementary red connectors")
    p_enum.add_argument("--json", action="store_true")
    p_enum.set_defaults(func=cmd_enumerate)

    p_special = sub.add_parser("special", help="binomial, q-binomial, sympoly, or rectangle checks")
    p_special.add_argument("kind", choices=("binomial", "qbinomial", "sympoly", "aitken"))
    p_special.add_argument("--n", type=int, required=True)
    p_special.add_argument("--m", type=int, default=1, help="rectangle width (aitken only)")
    p_special.add_argument("--A", type=_int_list, required=True)
    p_special.add_argument("--B", type=_int_list, required=True)
    p_special.add_argument("--json", action="store_true")
    p_special.set_defaults(func=cmd_special)

    p_sweep = sub.add_parser("sweep", help="verify every shape/selection up to bounds")
    p_sweep.add_argument("--max-n", type=int, required=True)
    p_sweep.add_argument("--max-part", type=int, required=True)
    mode = p_sweep.add_mutually_exclusive_group()
    mode.add_argument("--hypothesis-only", action="store_true", help="skip cases whose hypothesis fails")
    mode.add_argument("--all", action="store_true", help="verify every case (default)")
    p_sweep.add_argument("--jsonl", metavar="PATH", help="stream one JSON report per case")
    p_sweep.add_argument("--json", action="store_true")
    p_sweep.set_defaults(func=cmd_sweep)

    p_draw = sub.add_parser("draw", help="render a lattice as monospace text")
    p_draw.add_argument("--n", type=int, required=True)
    p_draw.add_argument("--alpha", type=_int_list, required=True)
    p_draw.add_argument("--beta", type=_int_list, required=True)
    p_draw.add_argument("--A", type=_int_list, default=None)
    p_draw.add_argument("--B", type=_int_list, default=None)
    p_draw.add_argument("--flavor", choices=("L", "R"), required=True)
    p_draw.set_defaults(func=cmd_draw)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ShapeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ComplementError as exc:
        # happens only on degenerate diagrams with gapped rows
        print(f"complementary walk failed: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EnumerationCapError as exc:
        print(f"enumeration cap exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
