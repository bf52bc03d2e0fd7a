"""Command line interface.

Subcommands expose normalisation, the Hopf operations, corepresentation
builders, the ell=3 decomposition driver, braiding tables, and the
verification suites.  All output is deterministic: monomials and labels
are emitted in a fixed canonical order, and JSON payloads carry a schema
version field.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import corep, hopf, parsing, verify
from .braid import DEFAULT_CONVENTION, CONVENTIONS, braiding_matrix
from .corep import build_v, build_w, build_y, decompose_l3, tensor, tree_layers
from .parsing import (
    ParseError,
    element_to_json,
    element_to_latex,
    element_to_string,
    matrix_to_json,
    matrix_to_latex,
    mode_from_name,
    parse_element,
    scalar_to_latex,
)


def _emit(payload, fmt: str, text_fn, latex_fn=None):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif fmt == "latex":
        if latex_fn is None:
            raise SystemExit("no latex form for this command")
        print(latex_fn())
    else:
        print(text_fn())


def _corep_by_name(name: str, ell: int):
    m = re.fullmatch(r"([VWY])(\d+)", name.strip())
    if not m:
        raise ValueError(f"cannot parse corepresentation name {name!r} (use V1, W2, Y3, ...)")
    family, index = m.group(1), int(m.group(2))
    if family == "V":
        return build_v(index, ell)
    if family == "W":
        return build_w(index, ell)
    return build_y(index, ell)


def _tree_to_json(tree) -> dict:
    if isinstance(tree, corep.Leaf):
        return {"type": "irreducible", "label": tree.irr.name, "dim": tree.dim}
    if isinstance(tree, corep.DirectSum):
        return {"type": "sum", "dim": tree.dim, "children": [_tree_to_json(c) for c in tree.children]}
    return {
        "type": "extension",
        "dim": tree.dim,
        "sub": _tree_to_json(tree.sub),
        "quotient": _tree_to_json(tree.quotient),
    }


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def cmd_normalize(args) -> int:
    mode = mode_from_name(args.mode, args.ell)
    el = parse_element(args.expr, mode)
    payload = element_to_json(el)
    _emit(payload, args.format, lambda: element_to_string(el), lambda: element_to_latex(el))
    return 0


def cmd_coproduct(args) -> int:
    mode = mode_from_name(args.mode, args.ell)
    el = parse_element(args.expr, mode)
    dx = hopf.coproduct(el)
    terms = [
        {"left": m1.label(), "right": m2.label(), "coeff": str(c)}
        for (m1, m2), c in sorted(dx.terms.items())
    ]
    payload = {"schema": parsing.SCHEMA_VERSION, "ell": args.ell, "mode": args.mode, "terms": terms}
    _emit(payload, args.format, lambda: str(dx))
    return 0


def cmd_counit(args) -> int:
    mode = mode_from_name(args.mode, args.ell)
    el = parse_element(args.expr, mode)
    value = hopf.counit(el)
    payload = {"schema": parsing.SCHEMA_VERSION, "value": str(value)}
    _emit(payload, args.format, lambda: str(value), lambda: scalar_to_latex(value))
    return 0


def cmd_antipode(args) -> int:
    mode = mode_from_name(args.mode, args.ell)
    el = parse_element(args.expr, mode)
    s = hopf.antipode(el)
    _emit(element_to_json(s), args.format, lambda: element_to_string(s), lambda: element_to_latex(s))
    return 0


def cmd_hopf_check(args) -> int:
    mode = mode_from_name(args.mode, args.ell)
    el = parse_element(args.expr, mode)
    rep = hopf.check_hopf_axioms(el)
    payload = {
        "schema": parsing.SCHEMA_VERSION,
        "coassociative": rep.coassociative,
        "counital": rep.counital,
        "antipodal": rep.antipodal,
        "all_ok": rep.all_ok,
    }
    _emit(payload, args.format, lambda: "\n".join(f"{k}: {v}" for k, v in payload.items() if k != "schema"))
    return 0 if rep.all_ok else 1


def cmd_corep(args) -> int:
    if args.family == "V":
        index = args.m if args.m is not None else 0
        c = build_v(index, args.ell)
    elif args.family == "W":
        index = args.n if args.n is not None else 0
        c = build_w(index, args.ell)
    else:
        index = args.m if args.m is not None else 0
        c = build_y(index, args.ell)
    rows = [[element_to_string(e) for e in row] for row in c.rho]
    payload = {
        "schema": parsing.SCHEMA_VERSION,
        "family": c.family,
        "ell": args.ell,
        "dim": c.dim,
        "basis": c.basis_labels,
        "rho": rows,
    }

    def text():
        lines = [f"{c.family} (dim {c.dim}), basis: {', '.join(c.basis_labels)}"]
        for row in rows:
            lines.append("[" + ", ".join(row) + "]")
        return "\n".join(lines)

    _emit(payload, args.format, text, lambda: matrix_to_latex([[element_to_latex(e) for e in row] for row in c.rho]))
    return 0


def cmd_decompose(args) -> int:
    if args.ell != 3:
        print(f"decompose: the automatic driver supports ell = 3 only (got ell = {args.ell})", file=sys.stderr)
        return 2
    names = [t.strip() for t in args.expr.split("*") if t.strip()]
    if not names:
        print("decompose: empty expression", file=sys.stderr)
        return 2
    current = _corep_by_name(names[0], args.ell)
    for name in names[1:]:
        current = tensor(current, _corep_by_name(name, args.ell))
    tree = decompose_l3(current)
    payload = {
        "schema": parsing.SCHEMA_VERSION,
        "expr": args.expr,
        "dim": current.dim,
        "tree": _tree_to_json(tree),
        "notation": tree.notation(),
        "layers": tree_layers(tree),
    }
    _emit(payload, args.format, lambda: f"{args.expr} = {tree.notation()}")
    return 0


def cmd_braid(args) -> int:
    left = _corep_by_name(args.left, args.ell)
    right = _corep_by_name(args.right, args.ell)
    bm = braiding_matrix(left, right, args.convention)
    payload = {
        "schema": parsing.SCHEMA_VERSION,
        "left": args.left,
        "right": args.right,
        "convention": args.convention,
        "rows": bm.row_labels,
        "cols": bm.col_labels,
        "entries": matrix_to_json(bm.matrix),
    }

    def text():
        lines = [f"Psi: {args.right} (x) {args.left} -> {args.left} (x) {args.right}  [{args.convention}]"]
        width = max(len(s) for row in payload["entries"] for s in row)
        for label, row in zip(bm.row_labels, payload["entries"]):
            lines.append(f"{label:>14s} | " + "  ".join(s.rjust(width) for s in row))
        return "\n".join(lines)

    _emit(payload, args.format, text, lambda: matrix_to_latex([[scalar_to_latex(x) for x in row] for row in bm.matrix.data]))
    return 0


def cmd_braid_verify(args) -> int:
    report = verify.run_suite("braid", ells=args.ell)
    return _report(report, args.format)


def cmd_verify(args) -> int:
    report = verify.run_suite(args.suite, ells=args.ell)
    return _report(report, args.format)


def _report(report, fmt: str) -> int:
    if fmt == "json":
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        for claim in report.claims:
            print(f"{'PASS' if claim.passed else 'FAIL'}  {claim.claim_id}: {claim.description}")
        print(f"suite '{report.suite}': {'all passed' if report.all_passed else 'FAILURES'}")
    return 0 if report.all_passed else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_common(p, mode_flag=True):
    p.add_argument("--ell", type=int, default=3, help="odd order of the root of unity (default 3)")
    if mode_flag:
        p.add_argument("--mode", choices=["generic", "F", "Fhat"], default="generic")
    p.add_argument("--format", choices=["json", "text", "latex"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slq2",
        description="Exact computations in the quantum SL(2) coordinate algebra at odd roots of unity",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="normal form of an algebra expression")
    p.add_argument("expr")
    _add_common(p)
    p.set_defaults(fn=cmd_normalize)

    p = sub.add_parser("coproduct", help="coproduct of an element")
    p.add_argument("expr")
    _add_common(p)
    p.set_defaults(fn=cmd_coproduct)

    p = sub.add_parser("counit", help="counit of an element")
    p.add_argument("expr")
    _add_common(p)
    p.set_defaults(fn=cmd_counit)

    p = sub.add_parser("antipode", help="antipode of an element")
    p.add_argument("expr")
    _add_common(p)
    p.set_defaults(fn=cmd_antipode)

    p = sub.add_parser("hopf-check", help="verify the Hopf axioms on an element")
    p.add_argument("expr")
    _add_common(p)
    p.set_defaults(fn=cmd_hopf_check)

    p = sub.add_parser("corep", help="coaction matrix of a corepresentation family member")
    p.add_argument("--family", choices=["V", "W", "Y"], required=True)
    p.add_argument("--m", type=int, help="index for the V/Y families")
    p.add_argument("--n", type=int, help="index for the W family")
    _add_common(p, mode_flag=False)
    p.set_defaults(fn=cmd_corep)

    p = sub.add_parser("decompose", help="decompose a tensor product expression at ell = 3")
    p.add_argument("--expr", required=True, help='e.g. "V1*V1*V1"')
    _add_common(p, mode_flag=False)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("braid", help="braiding table of two corepresentations")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--convention", choices=list(CONVENTIONS), default=DEFAULT_CONVENTION)
    _add_common(p, mode_flag=False)
    p.set_defaults(fn=cmd_braid)

    p = sub.add_parser("braid-verify", help="run the braiding verification suite")
    p.add_argument("--ell", type=int, nargs="+", default=None,
                   help="root orders for the sweep claims (default: the built-in 3 5)")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(fn=cmd_braid_verify)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all", choices=["all", *sorted(verify.SUITES)])
    p.add_argument("--ell", type=int, nargs="+", default=None,
                   help="root orders for the sweep claims (default: the built-in 3 5)")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
