"""Command-line front end.

Exit codes: 0 success, 2 invalid input or divergence guard, 3 numerical
non-convergence, 4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys
from fractions import Fraction

import numpy as np

from . import core, multipliers, sampler
from .errors import DivergentArea, JanowskiError, NoConvergence
from .series import DEFAULT_ORDER, MAX_ORDER

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOCONV = 3
EXIT_VERIFY = 4


class UsageError(Exception):
    pass


# -- parsing -------------------------------------------------------------------

_TERM = re.compile(r"[+-]?[^+-]+")


def _real_token(tok: str) -> float:
    tok = tok.strip()
    if tok in ("", "+"):
        return 1.0
    if tok == "-":
        return -1.0
    try:
        return float(Fraction(tok))
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return float(tok)
    except ValueError:
        raise UsageError(f"cannot parse number {tok!r}")


def parse_complex(text: str) -> complex:
    """Parse ``re``, ``re+imi`` or rationals such as ``2/3+1/2i`` or ``-i``.

    Locale independent; ``j`` is accepted in place of ``i``.
    """
    s = text.strip().replace(" ", "").replace("j", "i")
    if not s:
        raise UsageError("empty complex number")
    # keep exponent signs attached: 1e-3 must not split
    s = re.sub(r"([eE])([+-])", lambda m: m.group(1) + ("P" if m.group(2) == "+" else "M"), s)
    value = 0j
    for term in _TERM.findall(s):
        term = term.replace("P", "+").replace("M", "-")
        if term.endswith("i"):
            value += 1j * _real_token(term[:-1])
        else:
            value += _real_token(term)
    return value


def parse_schwarz(text: str) -> sampler.SchwarzSpec:
    """``z``, ``rot:THETA:M``, ``poly:a1,a2,...`` or ``OUTER@INNER``."""
    text = text.strip()
    if "@" in text:
        outer, inner = text.split("@", 1)
        return sampler.Composed(parse_schwarz(outer), parse_schwarz(inner))
    if text == "z":
        return sampler.RotationMonomial(0.0, 1)
    if text.startswith("rot:"):
        parts = text[4:].split(":")
        theta = _real_token(parts[0]) if parts[0] else 0.0
        m = int(parts[1]) if len(parts) > 1 else 1
        return sampler.RotationMonomial(theta, m)
    if text.startswith("poly:"):
        return sampler.NormalizedPolynomial(tuple(parse_complex(t) for t in text[5:].split(",")))
    raise UsageError(f"cannot parse Schwarz function {text!r}")


def default_order() -> int:
    env = os.environ.get("JANOWSKI_ORDER")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise UsageError(f"JANOWSKI_ORDER={env!r} is not an integer")
        if not 0 <= n <= MAX_ORDER:
            raise UsageError(f"JANOWSKI_ORDER must lie in 0..{MAX_ORDER}")
        return n
    return DEFAULT_ORDER


def _params(args) -> tuple[core.ClassParams, str | None]:
    if args.preset:
        if args.A is not None or args.B is not None:
            raise UsageError("give either --preset or --A/--B, not both")
        p = core.parse_preset(args.preset)
        return p.resolved, p.label
    if args.A is None or args.B is None:
        raise UsageError("--A and --B (or --preset) are required")
    B = parse_complex(args.B)
    if B.imag != 0:
        raise UsageError("B must be real")
    return core.ClassParams(parse_complex(args.A), B.real), None


# -- output ----------------------------------------------------------------------


def _fmt(x: float, digits: int) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return format(x, f".{digits}g")


def to_json(obj, digits: int = 17) -> str:
    """JSON text with every float written to ``digits`` significant digits."""
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt(float(obj), digits)
    if isinstance(obj, (complex, np.complexfloating)):
        return to_json({"re": obj.real, "im": obj.imag}, digits)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{to_json(str(k))}: {to_json(v, digits)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ", ".join(to_json(v, digits) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _csv_cell(v) -> str:
    if isinstance(v, (float, np.floating)):
        return _fmt(float(v), 10)
    if isinstance(v, (complex, np.complexfloating)):
        return f"{_fmt(v.real, 10)}{'+' if v.imag >= 0 else '-'}{_fmt(abs(v.imag), 10)}i"
    return str(v)


def to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_csv_cell(v) for v in row])
    return buf.getvalue()


def polyline_svg(points: np.ndarray, stroke: str = "black") -> str:
    """Single polyline with an equal-aspect viewBox; ``y`` points up."""
    x = points.real
    y = -points.imag
    cx, cy = (x.max() + x.min()) / 2, (y.max() + y.min()) / 2
    half = max(x.max() - x.min(), y.max() - y.min()) / 2 * 1.05 or 1.0
    sw = half / 200
    pts = " ".join(f"{_fmt(a, 10)},{_fmt(b, 10)}" for a, b in zip(x, y))
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(cx - half, 10)} {_fmt(cy - half, 10)} {_fmt(2 * half, 10)} {_fmt(2 * half, 10)}">\n'
        f'<polyline fill="none" stroke="{stroke}" stroke-width="{_fmt(sw, 10)}" points="{pts}"/>\n'
        "</svg>\n"
    )


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _params_record(params: core.ClassParams, label) -> dict:
    rec = {"A": params.A, "B": params.B}
    if label:
        rec["preset"] = label
    return rec


# -- commands --------------------------------------------------------------------


def cmd_extremal(args) -> int:
    params, label = _params(args)
    try:
        E, method = core.extremal_area_method(params, args.r)
    except DivergentArea as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    rec = {**_params_record(params, label), "r": args.r, "E": E, "method": method}
    if args.format == "csv":
        _emit(args, to_csv(["A", "B", "r", "E", "method"], [[params.A, params.B, args.r, E, method]]))
    else:
        _emit(args, to_json(rec))
    return EXIT_OK


def table2_rows() -> list[dict]:
    rows = []
    for A, B, printed in core.TABLE2:
        params = core.ClassParams(A, B)
        E, method = core.extremal_area_method(params, 1.0)
        rows.append({
            "A": params.A, "B": params.B, "E": E, "method": method, "printed": printed,
            "abs_dev": abs(E - printed), "rel_dev": abs(E - printed) / printed,
        })
    return rows


def cmd_table2(args) -> int:
    rows = table2_rows()
    if args.format == "csv":
        _emit(args, to_csv(list(rows[0]), [list(r.values()) for r in rows]))
    else:
        _emit(args, to_json({"rows": rows}))
    return EXIT_OK


def boundary_points(params: core.ClassParams, rho: float, m: int) -> tuple[np.ndarray, np.ndarray]:
    """``theta_j`` and ``g(rho exp(i theta_j))`` with ``g = z / k_{A,B}``."""
    theta = 2.0 * np.pi * np.arange(m) / m
    z = rho * np.exp(1j * theta)
    if params.B == 0:
        g = np.exp(-params.A * z)
    else:
        g = (1.0 + params.B * z) ** (1.0 - params.A / params.B)
    return theta, g


def cmd_boundary(args) -> int:
    params, label = _params(args)
    if not 0.0 < args.rho < 1.0:
        raise UsageError(f"rho = {args.rho} must lie in (0, 1)")
    if args.points < 2:
        raise UsageError("need at least 2 points")
    theta, g = boundary_points(params, args.rho, args.points)
    if args.format == "svg":
        _emit(args, polyline_svg(np.append(g, g[:1])))
    elif args.format == "csv":
        _emit(args, to_csv(["theta", "re", "im"], zip(theta, g.real, g.imag)))
    else:
        rec = {**_params_record(params, label), "rho": args.rho,
               "points": [[t, v.real, v.imag] for t, v in zip(theta, g)]}
        _emit(args, to_json(rec))
    return EXIT_OK


def cmd_multipliers(args) -> int:
    params, label = _params(args)
    N = args.N
    if not 1 <= N <= MAX_ORDER:
        raise UsageError(f"N must lie in 1..{MAX_ORDER}")
    core._check_radius(args.r)
    table = multipliers.solve_lambda_system(params, args.r, N, full=N <= 200)
    ks = range(1, min(N, args.limits) + 1)
    try:
        table = table.with_limits(ks, args.tol)
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOCONV
    col = table.column()
    residual = multipliers.weighted_sum_identity_check(table)
    t3 = multipliers.table3_comparison()
    if args.format == "csv":
        rows = [[k, table.U[k - 1], col[k - 1], table.lambda_limit.get(k, "")] for k in range(1, N + 1)]
        _emit(args, to_csv(["k", "U_k", "lambda_kN", "lambda_k"], rows))
    else:
        rec = {
            **_params_record(params, label), "r": args.r, "N": N,
            "U": table.U, "lambda_column": col,
            "lambda_limits": {str(k): v for k, v in table.lambda_limit.items()},
            "limit_tol": args.tol,
            "positivity": multipliers.positivity_summary(table),
            "residual": residual,
            "table3": t3,
        }
        _emit(args, to_json(rec))
    return EXIT_OK


def cmd_sample_verify(args) -> int:
    params, label = _params(args)
    specs = [sampler.RotationMonomial(0.0, 1)] if args.force_identity else None
    rep = sampler.verify_maximality(params, args.r, args.samples, args.seed, args.order, specs=specs)
    rec = {**_params_record(params, label), **rep.to_dict()}
    ok = rep.margin >= -1e-8 * rep.extremal_value
    rec["passed"] = ok
    _emit(args, to_json(rec))
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_coeffs(args) -> int:
    params, label = _params(args)
    c = core.extremal_reciprocal_series(params, args.order)
    rec = {**_params_record(params, label), "order": args.order, "c": c.coeffs}
    if args.w:
        rec["w"] = parse_schwarz(args.w).to_dict()
        rec["b"] = sampler.build_member(params, parse_schwarz(args.w), args.order).coeffs
    if args.format == "csv":
        header = ["n", "c_re", "c_im"] + (["b_re", "b_im"] if args.w else [])
        rows = []
        for n in range(args.order + 1):
            row = [n, c.coeffs[n].real, c.coeffs[n].imag]
            if args.w:
                row += [rec["b"][n].real, rec["b"][n].imag]
            rows.append(row)
        _emit(args, to_csv(header, rows))
    else:
        _emit(args, to_json(rec))
    return EXIT_OK


def cmd_lemma1(args) -> int:
    params, label = _params(args)
    spec = parse_schwarz(args.w or "z")
    b = sampler.build_member(params, spec, args.order)
    terms = args.terms if args.terms is not None else args.order
    val = core.lemma1_functional(b, params, terms)
    rec = {**_params_record(params, label), "w": spec.to_dict(), "terms": terms,
           "functional": val, "satisfied": val <= 1e-8}
    _emit(args, to_json(rec))
    return EXIT_OK


# -- entry point -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="janowski", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, r_default=1.0, formats=("json", "csv")):
        p.add_argument("--A", help="complex A, e.g. 5/6 or 2/3+1/2i")
        p.add_argument("--B", help="real B in [-1, 0]")
        p.add_argument("--preset", help="named class, e.g. starlike or spirallike(0.785,0.5)")
        p.add_argument("--r", type=_real_token, default=r_default)
        p.add_argument("--format", choices=formats, default="json")
        p.add_argument("--out", help="output path (stdout if omitted)")

    p = sub.add_parser("extremal", help="closed-form maximal area E_{A,B}(r)")
    common(p)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("table2", help="reproduce the table of E_{A,B}(1) values")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("boundary", help="image curve of |z| = rho under z/k_{A,B}")
    common(p, formats=("json", "csv", "svg"))
    p.add_argument("--rho", type=float, default=0.999)
    p.add_argument("--points", type=int, default=2048)
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("multipliers", help="lambda_{k,N}, U_k and lambda_k limits")
    common(p, r_default=0.5)
    p.add_argument("--N", type=int, default=100)
    p.add_argument("--limits", type=int, default=10, help="number of lambda_k limits to estimate")
    p.add_argument("--tol", type=float, default=1e-14)
    p.set_defaults(func=cmd_multipliers)

    p = sub.add_parser("sample-verify", help="randomized maximality check")
    common(p, r_default=0.5, formats=("json",))
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--force-identity", action="store_true", help="use only w(z) = z")
    p.set_defaults(func=cmd_sample_verify)

    p = sub.add_parser("coeffs", help="dump c (extremal) and optionally b (member) coefficients")
    common(p)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--w", help="Schwarz function: z, rot:THETA:M, poly:a1,a2,..., OUTER@INNER")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("lemma1", help="coefficient functional of a member")
    common(p)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--terms", type=int, default=None)
    p.add_argument("--w", help="Schwarz function (default z)")
    p.set_defaults(func=cmd_lemma1)
    return ap


_VALUE_FLAGS = ("--A", "--B")


def _join_signed_values(argv: list[str]) -> list[str]:
    # argparse reads "-2+i" as an option; glue it to its flag instead
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-"):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    ap = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = ap.parse_args(_join_signed_values(argv))
    try:
        if getattr(args, "order", None) is None and hasattr(args, "order"):
            args.order = default_order()
        return args.func(args)
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOCONV
    except (UsageError, JanowskiError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
