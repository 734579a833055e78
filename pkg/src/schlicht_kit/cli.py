"""Command-line front end.

    schlicht-kit coeffs  --family koebe --order 8
    schlicht-kit grunsky --inline 1/2,1/3,1/4 --mode exact
    schlicht-kit check   --family convex_lambda --lambda "sqrt(2/5)"
    schlicht-kit search  --family convex_lambda --functional G3minusG2 --maximize
    schlicht-kit suite   --seed 0

Exit status: 0 success, 1 failed checks, 2 usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from datetime import datetime, timezone
from fractions import Fraction

from . import __version__
from .bounds import FUNCTIONALS, report
from .extremal import DEFAULT_INTERVALS, MAXIMIZE, MINIMIZE, SEARCH_FAMILIES, SearchSpec, grid_refine_search
from .families import (
    CLASS_S,
    FAMILIES,
    FAMILY_CLASS,
    FamilyParam,
    SchwarzPoly,
    random_schwarz,
)
from .grunsky import grunsky_odd_table, grunsky_table, verify_structural
from .invert import inverse_log_coefficients, log_coefficients, revert
from .scalars import DEFAULT_TOLERANCE, EXACT, FLOAT, MODES, parse_scalar, scalar_to_pair
from .series import make_series, series_to_json

SCHEMA = "schlicht-kit/1"
TOLERANCE_ENV = "SCHLICHT_KIT_TOLERANCE"

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def parse_real(text: str, mode: str):
    """``"1/2"``, ``"0.3"`` or ``"sqrt(2/5)"``; exact mode keeps rationals exact."""
    text = text.strip()
    if text.startswith("sqrt(") and text.endswith(")"):
        if mode == EXACT:
            raise UsageError(f"{text} is irrational; use --mode float")
        return math.sqrt(float(Fraction(text[5:-1])))
    if mode == EXACT:
        return Fraction(text)
    return float(Fraction(text)) if "/" in text else float(text)


def _split(text: str) -> list:
    return [t for t in (s.strip() for s in text.split(",")) if t]


def default_tolerance() -> float:
    raw = os.environ.get(TOLERANCE_ENV)
    if raw is None:
        return DEFAULT_TOLERANCE
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"{TOLERANCE_ENV}={raw!r} is not a number") from None


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _common(p: argparse.ArgumentParser, order_default: int = 12) -> None:
    g = p.add_argument_group("function")
    g.add_argument("--family", choices=FAMILIES, help="named family")
    g.add_argument("--inline", help="comma-separated a2,...,aN (a1 = 1 implied)")
    g.add_argument("--theta", default="0", help="Koebe rotation angle in radians")
    g.add_argument("--lambda", dest="lam", default="0", help="f_lambda parameter, e.g. 1/2 or sqrt(2/5)")
    g.add_argument("--schwarz", help="comma-separated c1,...,cK of a Schwarz polynomial")
    g.add_argument("--schwarz-seed", type=int, help="draw a random Schwarz polynomial with this seed")
    g.add_argument("--schwarz-degree", type=int, default=3, help="degree of the random Schwarz polynomial")
    g.add_argument("--class", dest="fclass", choices=["S", "convex"], help="class provenance override")
    p.add_argument("--order", type=int, default=order_default)
    p.add_argument("--mode", choices=MODES, default=FLOAT)
    p.add_argument("--tolerance", type=float, default=None)
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--out", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schlicht-kit", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="a_n, A_n, gamma_n, Gamma_n of a function")
    _common(p)
    p = sub.add_parser("grunsky", help="Grunsky tables and structural residuals")
    _common(p)
    p = sub.add_parser("check", help="bound report for the function's class")
    _common(p)
    p = sub.add_parser("search", help="one-parameter extremal search")
    _common(p, order_default=8)
    p.add_argument("--functional", choices=FUNCTIONALS, required=True)
    d = p.add_mutually_exclusive_group()
    d.add_argument("--maximize", dest="direction", action="store_const", const=MAXIMIZE)
    d.add_argument("--minimize", dest="direction", action="store_const", const=MINIMIZE)
    p.add_argument("--lo", type=float)
    p.add_argument("--hi", type=float)
    p.add_argument("--grid-points", type=int, default=64)
    p.add_argument("--refine", type=int, default=6)
    p = sub.add_parser("suite", help="run the full verification battery")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=float, default=None)
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--out")
    return parser


# ---------------------------------------------------------------------------
# function resolution
# ---------------------------------------------------------------------------


def _schwarz(args) -> SchwarzPoly | None:
    if args.schwarz:
        return SchwarzPoly(tuple(parse_scalar(t, args.mode) for t in _split(args.schwarz)))
    if args.schwarz_seed is not None:
        return random_schwarz(args.schwarz_degree, args.schwarz_seed)
    return None


def resolve_function(args):
    """``(series, label, class)`` from the function options."""
    if args.order < 1:
        raise UsageError("--order must be at least 1")
    if args.inline is not None:
        if args.family:
            raise UsageError("give either --family or --inline, not both")
        vals = [parse_scalar(t, args.mode) for t in _split(args.inline)]
        # an inline function is a polynomial, so zero padding is exact
        coeffs = ([0, 1] + vals + [0] * args.order)[: args.order + 1]
        f = make_series(coeffs, mode=args.mode)
        return f, f"inline[{args.inline}]", args.fclass or CLASS_S
    if not args.family:
        raise UsageError("a function is required: --family NAME or --inline a2,a3,...")
    theta = parse_real(args.theta, args.mode)
    if args.mode == EXACT:
        if theta != 0:
            raise UsageError("exact mode supports theta = 0 only")
        theta = 0
    param = FamilyParam(family=args.family, theta=theta, lam=parse_real(args.lam, args.mode),
                        schwarz=_schwarz(args))
    return param.build(args.order, args.mode), param.label(), args.fclass or FAMILY_CLASS[args.family]


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _header(command: str, mode: str, tolerance: float) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "version": __version__,
        "mode": mode,
        "tolerance": tolerance,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }


def _pairs(values) -> list:
    return [scalar_to_pair(v) for v in values]


def cmd_coeffs(args, tol):
    f, label, _ = resolve_function(args)
    inv = revert(f)
    gam = log_coefficients(f) if f.order >= 2 else None
    Gam = inverse_log_coefficients(f) if f.order >= 2 else None
    body = {
        "functionId": label,
        "order": f.order,
        "a": _pairs(f.coeffs[1:]),
        "A": _pairs(inv.coeffs[1:]),
        "gamma": _pairs(gam.values) if gam else [],
        "Gamma": _pairs(Gam.values) if Gam else [],
        "series": series_to_json(f),
    }
    if args.mode == EXACT:
        body["exact"] = {
            "a": [str(c) for c in f.coeffs[1:]],
            "A": [str(c) for c in inv.coeffs[1:]],
            "gamma": [str(c) for c in gam.values] if gam else [],
            "Gamma": [str(c) for c in Gam.values] if Gam else [],
        }
    rows = [["n", "a_re", "a_im", "A_re", "A_im", "gamma_re", "gamma_im", "Gamma_re", "Gamma_im"]]
    for n in range(1, f.order + 1):
        g = body["gamma"][n - 1] if n - 1 < len(body["gamma"]) else ["", ""]
        G = body["Gamma"][n - 1] if n - 1 < len(body["Gamma"]) else ["", ""]
        rows.append([n, *body["a"][n - 1], *body["A"][n - 1], *g, *G])
    text = [f"function {label} (order {f.order}, {args.mode})"]
    for r in rows[1:]:
        text.append("n={:<3} a={}  A={}  gamma={}  Gamma={}".format(
            r[0], _fmt(r[1], r[2]), _fmt(r[3], r[4]), _fmt(r[5], r[6]), _fmt(r[7], r[8])))
    return body, rows, text, EXIT_OK


def _fmt(re, im) -> str:
    if re == "":
        return "-"
    return f"{re:.12g}" if im == 0 else f"{complex(re, im):.12g}"


def cmd_grunsky(args, tol):
    f, label, _ = resolve_function(args)
    if f.order < 6:
        raise UsageError("grunsky needs --order >= 6")
    full = grunsky_table(f)
    odd = grunsky_odd_table(f, 5)
    st = verify_structural(f, tol)
    body = {"functionId": label, "full": full.to_json(), "odd": odd.to_json(), "structural": st.to_json()}
    rows = [["table", "p", "q", "re", "im"]]
    for name, t in (("full", full), ("odd", odd)):
        for p, q, (re, im) in t.to_json()["entries"]:
            rows.append([name, p, q, re, im])
    text = [f"function {label}: Grunsky tables up to {full.max_index} (full) / {odd.max_index} (odd)"]
    for k in ("w11", "w13", "w33", "w15"):
        text.append(f"  {k} = {_fmt(*scalar_to_pair(st.omega[k]))}")
    for k, v in st.to_json()["residuals"].items():
        text.append(f"  residual[{k}] = {v:.3e}")
    text.append(f"  |2 w13 - w11^2| = {float(st.w13_bound_value):.12g} ({'ok' if st.w13_bound_ok else 'VIOLATED'})")
    status = EXIT_OK if st.max_residual <= tol else EXIT_FAILED
    return body, rows, text, status


def cmd_check(args, tol):
    f, label, fclass = resolve_function(args)
    if f.order < 4:
        raise UsageError("check needs --order >= 4")
    rep = report(f, fclass, label, tol)
    rows = [["functionId", "checkName", "value", "bound", "margin", "pass"]] + rep.csv_rows()
    text = [f"function {label} (class {fclass}, {args.mode}, tol {tol:g})"]
    for k, v in rep.quantities.items():
        text.append(f"  {k:<12} = {float(v):.12g}" + (f"  ({v})" if isinstance(v, Fraction) else ""))
    for c in rep.checks:
        text.append(f"  [{'PASS' if c.passed else 'FAIL'}] {c.name:<28} margin {float(c.margin):+.3e}")
    return rep.to_json(), rows, text, EXIT_OK if rep.passed else EXIT_FAILED


def cmd_search(args, tol):
    family = args.family or "convex_lambda"
    if family not in SEARCH_FAMILIES:
        raise UsageError(f"--family must be one of {SEARCH_FAMILIES} for search")
    if args.mode != FLOAT:
        raise UsageError("search runs in float mode only")
    lo, hi = DEFAULT_INTERVALS[family]
    spec = SearchSpec(
        family=family,
        functional=args.functional,
        direction=args.direction or MAXIMIZE,
        interval=(args.lo if args.lo is not None else lo, args.hi if args.hi is not None else hi),
        grid_points=args.grid_points,
        refine_iterations=args.refine,
        order=args.order,
        schwarz=_schwarz(args),
    )
    res = grid_refine_search(spec)
    body = {"spec": spec.to_json(), "result": res.to_json()}
    rows = [["round", "lo", "hi", "best", "value"]]
    rows += [[i, iv[0], iv[1], b, v] for i, (iv, b, v) in enumerate(res.trace)]
    text = [f"{spec.direction} {spec.functional} over {family} on {list(spec.interval)}",
            f"  argbest = {res.argmax:.12g}", f"  value   = {res.value:.12g}",
            f"  evaluations = {res.evaluations}"]
    return body, rows, text, EXIT_OK


def cmd_suite(args, tol):
    from .suite import Battery

    battery = Battery(seed=args.seed, tolerance=tol)
    results = battery.run()
    body = {
        "seed": args.seed,
        "criteria": [r.to_json() for r in results],
        "observations": {"S_lower_bound_G2minusG1": battery.observation_s_lower_bound(),
                         "max_closed_form_gap": battery.consistency()},
        "pass": all(r.passed for r in results),
    }
    rows = [["criterion", "title", "pass"]] + [[r.key, r.title, r.passed] for r in results]
    text = [r.line() for r in results]
    return body, rows, text, EXIT_OK if body["pass"] else EXIT_FAILED


COMMANDS = {"coeffs": cmd_coeffs, "grunsky": cmd_grunsky, "check": cmd_check,
            "search": cmd_search, "suite": cmd_suite}


def _render(fmt: str, header: dict, body: dict, rows: list, text: list) -> str:
    if fmt == "json":
        return json.dumps({**header, **body}, indent=2, sort_keys=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"# {header['schema']} {header['command']} mode={header['mode']} tolerance={header['tolerance']}"])
        w.writerows(rows)
        return buf.getvalue()
    return "\n".join([f"{header['schema']} {header['command']} (mode {header['mode']}, tolerance {header['tolerance']:g})"]
                     + text) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        tol = args.tolerance if args.tolerance is not None else default_tolerance()
        if not tol > 0:
            raise UsageError("tolerance must be positive")
        mode = getattr(args, "mode", "exact+float")
        body, rows, text, status = COMMANDS[args.command](args, tol)
    except (UsageError, ValueError, ZeroDivisionError) as exc:
        print(f"schlicht-kit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = _render(args.format, _header(args.command, mode, tol), body, rows, text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
