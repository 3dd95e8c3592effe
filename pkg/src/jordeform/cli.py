"""Command-line front end: ``verify``, ``matrices`` and ``tables``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import fb, fock, hopf
from .ncalg import Element
from .suites import ALGEBRAS, PRESENTATION_NAME, SUITES, applicable, run_suite

ORDER_ENV = "JORDEFORM_DEFAULT_ORDER"
DEFAULT_ORDER = 4
DEFAULT_DIM = 16
DEFAULT_FB_DEGREE = 12
GENERATORS = {
    "h6": ("B-", "A-", "N", "M", "A+", "B+"),
    "h6-dual": ("B+", "A+", "N", "M", "A-", "B-"),
    "schrodinger": ("C", "K", "D", "M", "P", "H"),
}


class UsageError(Exception):
    pass


def _int_at_least(lo: int):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {v}")
        return v
    return parse


def default_order() -> int:
    raw = os.environ.get(ORDER_ENV)
    if raw is None or raw == "":
        return DEFAULT_ORDER
    try:
        return _int_at_least(0)(raw)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"{ORDER_ENV}: {exc}")


def _suite_list(text: str) -> list[str]:
    if text == "all":
        return list(SUITES)
    out = [s.strip() for s in text.split(",") if s.strip()]
    bad = [s for s in out if s not in SUITES]
    if bad or not out:
        raise argparse.ArgumentTypeError(
            f"unknown suite(s) {', '.join(bad) or text!r}; choose from {', '.join(SUITES)} or 'all'")
    # keep the canonical order so reports do not depend on flag order
    return [s for s in SUITES if s in out]


def build_parser(order: int) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jordeform",
        description="Exact checks for the Jordanian two-photon and Schrodinger quantum algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, algebra_choices):
        p.add_argument("--order", type=_int_at_least(0), default=order,
                       help=f"truncation order M in z (default {order}; env {ORDER_ENV})")
        p.add_argument("--algebra", choices=algebra_choices, default=algebra_choices[-1])
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", "-o", help="write here instead of stdout")

    v = sub.add_parser("verify", help="run verification suites")
    common(v, (*ALGEBRAS, "all"))
    v.add_argument("--dim", type=_int_at_least(1), default=DEFAULT_DIM, help="Fock truncation D")
    v.add_argument("--fb-degree", type=_int_at_least(1), default=DEFAULT_FB_DEGREE,
                   help="polynomial degree bound for the Fock-Bargmann suites")
    v.add_argument("--suites", type=_suite_list, default=list(SUITES),
                   help=f"comma-separated subset of {','.join(SUITES)} (default all)")
    v.add_argument("--jobs", type=_int_at_least(1), default=1,
                   help="run suites in this many worker processes")
    v.add_argument("--no-timing", action="store_true",
                   help="report millis as 0 so output is byte-for-byte reproducible")
    v.add_argument("--verbose", "-v", action="store_true", help="print residuals of failures")

    m = sub.add_parser("matrices", help="export a truncated representation matrix")
    common(m, ("h6", "h6-dual"))
    m.set_defaults(algebra="h6")
    m.add_argument("--gen", required=True, help="generator name, e.g. B+")
    m.add_argument("--dim", type=_int_at_least(1), default=DEFAULT_DIM)
    m.add_argument("--basis", choices=("normalized", "unnormalized"), default="normalized")
    m.add_argument("--realization", choices=("fock", "fb"), default="fock",
                   help="Fock space (h6 only) or polynomials in alpha")

    t = sub.add_parser("tables", help="dump commutator, coproduct and antipode tables")
    common(t, (*ALGEBRAS, "all"))
    return parser


# -- verify ----------------------------------------------------------------------------


def _run_job(job: tuple) -> list[tuple[dict, str]]:
    suite, algebra, order, dim, degree, timing = job
    rep = run_suite(suite, algebra, order, dim, degree)
    return [(r.as_json(timing), "" if r.passed else str(r.residual)) for r in rep.records]


def cmd_verify(args) -> tuple[str, int]:
    algebras = ALGEBRAS if args.algebra == "all" else (args.algebra,)
    jobs = [(s, a, args.order, args.dim, args.fb_degree, not args.no_timing)
            for a in algebras for s in args.suites if applicable(s, a)]
    if not jobs:
        raise UsageError(f"none of the suites {args.suites} apply to {args.algebra}")
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_job, jobs))   # map keeps submission order
    else:
        results = [_run_job(j) for j in jobs]
    records = [rec for res in results for rec in res]
    ok = all(r["status"] == "pass" for r, _ in records)
    if args.format == "json":
        body = {
            "config": {"order": args.order, "dim": args.dim, "fb_degree": args.fb_degree,
                       "algebra": args.algebra, "suites": args.suites},
            "status": "pass" if ok else "fail",
            "records": [r for r, _ in records],
        }
        return json.dumps(body, indent=2) + "\n", 0 if ok else 1
    lines = []
    width = max(len(r["suite"]) for r, _ in records)
    for r, residual in records:
        tag = "PASS" if r["status"] == "pass" else "FAIL"
        lines.append(f"{tag}  {r['suite']:<{width}}  {r['identity']}")
        if residual and args.verbose:
            lines.append(f"      residual: {residual}")
    n_bad = sum(r["status"] != "pass" for r, _ in records)
    lines.append(f"{len(records) - n_bad}/{len(records)} identities passed")
    return "\n".join(lines) + "\n", 0 if ok else 1


# -- matrices ----------------------------------------------------------------------------


def _frac_json(c: Fraction) -> dict:
    return {"num": c.numerator, "den": c.denominator}


def _radical_json(r) -> dict:
    return {"q_num": r.q.numerator, "q_den": r.q.denominator, "radicand": r.r}


def cmd_matrices(args) -> tuple[str, int]:
    valid = GENERATORS[args.algebra]
    if args.gen not in valid:
        raise UsageError(f"unknown generator {args.gen!r} for {args.algebra}; "
                         f"choose from {' '.join(valid)}")
    if args.realization == "fock":
        if args.algebra != "h6":
            raise UsageError("the Fock realization is only defined for h6")
        mat = fock.fock_matrix(args.gen, args.dim, args.basis, args.order)
    else:
        if args.basis == "normalized":
            raise UsageError("the alpha-monomial basis has no normalized form; use --basis unnormalized")
        variant = "primary" if args.algebra == "h6" else "dual"
        mat = fb.build_fb(args.gen, variant, args.dim - 1, args.order)
    D, M = args.dim, args.order
    normalized = args.basis == "normalized"
    zero = {"q_num": 0, "q_den": 1, "radicand": 1} if normalized else {"num": 0, "den": 1}
    grid = [[[dict(zero) for _ in range(M + 1)] for _ in range(D)] for _ in range(D)]
    for (i, j, k), c in sorted(mat.data.items()):
        grid[i][j][k] = _radical_json(c) if normalized else _frac_json(c)
    if args.format == "json":
        body = {"algebra": args.algebra, "realization": args.realization, "generator": args.gen,
                "dim": D, "order": M, "basis": args.basis, "entries": grid}
        return json.dumps(body) + "\n", 0
    lines = [f"# {args.realization} matrix of {args.gen}, {args.basis} basis, dim {D}, "
             f"order {M}: <i|{args.gen}|j>"]
    for i in range(D):
        for j in range(D):
            if normalized:
                d = {k: r for (a, b, k), r in mat.data.items() if (a, b) == (i, j)}
                text = fock.format_radical_poly(d)
            else:
                text = str(mat.entry(i, j))
            if text != "0":
                lines.append(f"<{i}|{args.gen}|{j}> = {text}")
    return "\n".join(lines) + "\n", 0


# -- tables -----------------------------------------------------------------------------------


def _terms_json(data: dict, monomial_str) -> list[dict]:
    grouped: dict = {}
    for (m, k), c in data.items():
        grouped.setdefault(m, {})[k] = c
    return [{"monomial": monomial_str(m),
             "coefficient": [[c.numerator, c.denominator] for c in
                             (d.get(k, Fraction(0)) for k in range(max(d) + 1))]}
            for m, d in sorted(grouped.items(), key=lambda it: (min(it[1]), repr(it[0])))]


def algebra_tables(algebra: str, order: int) -> dict:
    h = hopf.build_hopf(PRESENTATION_NAME[algebra], order)
    p = h.presentation
    comms, cops, antis, counits = [], [], [], []
    for i in range(p.n):
        for j in range(i):
            e = Element(p, p.bracket_data(i, j))
            comms.append({"lhs": f"[{p.symbols[i]},{p.symbols[j]}]", "text": str(e),
                          "terms": _terms_json(e.data, p.monomial_str)})
    tensor_str = lambda ms: " (x) ".join(p.monomial_str(m) for m in ms)
    for s in p.symbols:
        d = h.coproduct_table[s]
        cops.append({"lhs": f"Delta({s})", "text": str(d),
                     "terms": _terms_json(d.data, tensor_str)})
        a = h.antipode_table[s]
        antis.append({"lhs": f"S({s})", "text": str(a),
                      "terms": _terms_json(a.data, p.monomial_str)})
        counits.append({"lhs": f"eps({s})", "text": str(h.counit_table[s])})
    return {"algebra": algebra, "order": order, "generators": list(p.symbols),
            "commutators": comms, "coproducts": cops, "antipodes": antis, "counits": counits}


def cmd_tables(args) -> tuple[str, int]:
    algebras = ALGEBRAS if args.algebra == "all" else (args.algebra,)
    tables = [algebra_tables(a, args.order) for a in algebras]
    if args.format == "json":
        return json.dumps(tables, indent=2) + "\n", 0
    lines = []
    for t in tables:
        lines.append(f"# {t['algebra']} (order {t['order']})")
        for section in ("commutators", "coproducts", "antipodes", "counits"):
            width = max(len(e["lhs"]) for e in t[section])
            lines.extend(f"{e['lhs']:<{width}} = {e['text']}" for e in t[section])
        lines.append("")
    return "\n".join(lines), 0


COMMANDS = {"verify": cmd_verify, "matrices": cmd_matrices, "tables": cmd_tables}


def main(argv: list[str] | None = None) -> int:
    try:
        parser = build_parser(default_order())
    except UsageError as exc:
        print(f"jordeform: error: {exc}", file=sys.stderr)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"jordeform {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code
