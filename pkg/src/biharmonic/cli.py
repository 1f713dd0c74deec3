"""Command-line front end.

Usage::

    biharm basis-check --input basis.json
    biharm table       --input basis.json
    biharm eval        --input fn.json
    biharm components  --input fn.json --grid "0,0,1,1,11" --format csv
    biharm reconstruct --input goursat.json
    biharm verify      [--input suites.json]

Exit codes: 0 success, 1 a verification failed, 2 bad input.  Failures and
errors print one JSON line on stderr with a ``reason`` field.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from dataclasses import dataclass

from . import jsonio
from .bases import product_table, verify_biharmonic_identity
from .errors import BiharmonicError, SchemaError
from .goursat import goursat_u, reconstruct, u1_round_trip_residual
from .monogenic import RawAssembly, components
from .numeric import GridSpec, sample_components
from .verification import SUITES, SuiteConfig, check_function, run_suites

COMMANDS = ("basis-check", "table", "eval", "components", "reconstruct", "verify")
DEFAULT_GRID = "0,0,1,1,11"


@dataclass(frozen=True)
class JobConfig:
    command: str
    input: str | None
    output: str | None
    format: str = "json"
    tolerance: float = 1e-10
    grid: str | None = None


def _load(path):
    if path is None:
        raise SchemaError("--input is required for this command")
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise SchemaError(f"input file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON in {path}: {exc.msg} at line {exc.lineno}") from None


def _basis_doc(doc):
    return doc["basis"] if isinstance(doc, dict) and "basis" in doc else doc


# -- commands ----------------------------------------------------------------


def cmd_basis_check(cfg: JobConfig, doc):
    if isinstance(doc, dict) and "raw" in doc:
        pair = jsonio.raw_pair_from_json(doc["raw"])
        rep = verify_biharmonic_identity(pair, cfg.tolerance)
        head = {"raw": {"e1": jsonio.element_to_json(pair[0]), "e2": jsonio.element_to_json(pair[1])}}
    else:
        b = jsonio.basis_from_json(_basis_doc(doc))
        rep = verify_biharmonic_identity(b, cfg.tolerance)
        head = {"basis": jsonio.basis_to_json(b)}
    out = {
        "command": "basis-check",
        **head,
        "lhs": jsonio.element_to_json(rep.lhs),
        "sum_sq": jsonio.element_to_json(rep.sum_sq),
        "residual": rep.residual,
        "ok": rep.ok,
    }
    return out, rep.ok


def cmd_table(cfg: JobConfig, doc):
    b = jsonio.basis_from_json(_basis_doc(doc))
    t = product_table(b)
    direct = (b.e1 * b.e1, b.e2 * b.e2, b.e1 * b.e2)
    agree = all(c.isclose(d, rel_tol=cfg.tolerance) for c, d in zip((t.e1_sq, t.e2_sq, t.e1_e2), direct))
    out = {
        "command": "table",
        "basis": jsonio.basis_to_json(b),
        "e1": jsonio.element_to_json(b.e1),
        "e2": jsonio.element_to_json(b.e2),
        "e1_sq": jsonio.element_to_json(t.e1_sq),
        "e2_sq": jsonio.element_to_json(t.e2_sq),
        "e1_e2": jsonio.element_to_json(t.e1_e2),
        "agrees_with_direct_product": agree,
    }
    return out, agree


def _points(doc):
    pts = doc.get("points") if isinstance(doc, dict) else None
    if not isinstance(pts, list) or not pts:
        raise SchemaError("eval: expected a non-empty 'points' list of [x, y]")
    out = []
    for p in pts:
        if not isinstance(p, list) or len(p) != 2:
            raise SchemaError(f"eval: bad point {p!r}")
        out.append((jsonio.real_from_json(p[0], "point.x"), jsonio.real_from_json(p[1], "point.y")))
    return out


def cmd_eval(cfg: JobConfig, doc):
    m = jsonio.monogenic_from_json(doc)
    comps = components(m)
    rows = []
    for x, y in _points(doc):
        value = m.eval(x, y)
        us = [float(u(x, y)) for u in comps.as_tuple()]
        rows.append({"x": x, "y": y, "value": jsonio.element_to_json(value), "components": us})
    if cfg.format == "csv":
        return _csv(["x", "y", "U1", "U2", "U3", "U4"], [[r["x"], r["y"], *r["components"]] for r in rows]), True
    return {"command": "eval", "function": jsonio.monogenic_to_json(m), "points": rows}, True


def _grid(cfg: JobConfig, doc) -> GridSpec:
    text = cfg.grid
    if text is None and isinstance(doc, dict) and "grid" in doc:
        g = doc["grid"]
        text = g if isinstance(g, str) else ",".join(str(v) for v in g)
    try:
        return GridSpec.parse(text or DEFAULT_GRID)
    except BiharmonicError:
        raise
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"grid: {exc}") from None


def cmd_components(cfg: JobConfig, doc):
    m = jsonio.monogenic_from_json(doc)
    g = _grid(cfg, doc)
    us = sample_components(m, g)
    X, Y = g.mesh()
    rows = [
        [float(X[i, j]), float(Y[i, j]), *(float(u[i, j]) for u in us)]
        for i in range(g.n)
        for j in range(g.n)
    ]
    if cfg.format == "csv":
        return _csv(["x", "y", "U1", "U2", "U3", "U4"], rows), True
    comps = components(m)
    out = {
        "command": "components",
        "function": jsonio.monogenic_to_json(m),
        "components": {f"U{k + 1}": jsonio.bipoly_to_json(u) for k, u in enumerate(comps.as_tuple())},
        "grid": {"x0": g.x0, "y0": g.y0, "x1": g.x1, "y1": g.y1, "n": g.n},
        "columns": ["x", "y", "U1", "U2", "U3", "U4"],
        "samples": rows,
    }
    return out, True


def cmd_reconstruct(cfg: JobConfig, doc):
    g, p = jsonio.goursat_from_json(doc)
    m = reconstruct(g, p)
    residual = u1_round_trip_residual(g, p)
    ok = residual <= cfg.tolerance
    out = {
        "command": "reconstruct",
        "basis": jsonio.basis_to_json(m.basis),
        "F": jsonio.poly_to_json(m.F),
        "F0": jsonio.poly_to_json(m.F0),
        "phi0": jsonio.phi0_to_json(p),
        "u1": jsonio.bipoly_to_json(goursat_u(g)),
        "round_trip_residual": residual,
        "ok": ok,
    }
    return out, ok


def _user_function(doc):
    if not isinstance(doc, dict):
        raise SchemaError("verify.functions: each entry must be an object")
    if "components" in doc:
        terms = doc["components"]
        if not isinstance(terms, list) or len(terms) != 4:
            raise SchemaError("function.components: expected four term lists")
        b = jsonio.basis_from_json(_basis_doc(doc))
        return RawAssembly.of(b, *(jsonio.real_bipoly_from_json(t, f"U{k + 1}") for k, t in enumerate(terms)))
    return jsonio.monogenic_from_json(doc)


def cmd_verify(cfg: JobConfig, doc):
    doc = doc or {}
    if not isinstance(doc, dict):
        raise SchemaError("verify: expected an object")
    names = doc.get("suites", list(SUITES))
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise SchemaError(f"verify: unknown suites {unknown}")
    try:
        suite_cfg = SuiteConfig.from_json(doc)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"verify: {exc}") from None
    functions = [_user_function(f) for f in doc.get("functions", [])]

    checks = run_suites(suite_cfg, names)
    fn_reports = []
    for k, f in enumerate(functions):
        fc = check_function(f, cfg.tolerance)
        fn_reports.append({"index": k, "ok": all(c.ok for c in fc), "checks": [c.to_json() for c in fc]})
    ok = all(c.ok for c in checks) and all(r["ok"] for r in fn_reports)
    out = {
        "command": "verify",
        "seed": suite_cfg.seed,
        "checks": [c.to_json() for c in checks],
        "functions": fn_reports,
        "ok": ok,
    }
    return out, ok


HANDLERS = {
    "basis-check": cmd_basis_check,
    "table": cmd_table,
    "eval": cmd_eval,
    "components": cmd_components,
    "reconstruct": cmd_reconstruct,
    "verify": cmd_verify,
}
CSV_COMMANDS = ("eval", "components")


def _csv(header, rows) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(jsonio.format_float(v) for v in row) + "\n")
    return buf.getvalue()


# -- driver ------------------------------------------------------------------


def run(cfg: JobConfig):
    """Execute a job; returns ``(exit_code, text)``."""
    if cfg.command not in HANDLERS:
        raise SchemaError(f"unknown command {cfg.command!r}")
    if not cfg.tolerance > 0:
        raise SchemaError("tolerance must be positive")
    if cfg.format not in ("json", "csv"):
        raise SchemaError(f"unknown format {cfg.format!r}")
    if cfg.format == "csv" and cfg.command not in CSV_COMMANDS:
        raise SchemaError(f"csv output is only available for {', '.join(CSV_COMMANDS)}")
    doc = None
    if cfg.command != "verify" or cfg.input is not None:
        doc = _load(cfg.input)
    result, ok = HANDLERS[cfg.command](cfg, doc)
    text = result if isinstance(result, str) else jsonio.dumps(result)
    return (0 if ok else 1), text


def _emit_status(status, reason, detail):
    line = json.dumps({"status": status, "reason": reason, "detail": str(detail)}, sort_keys=True)
    print(line.replace("\n", " "), file=sys.stderr)


def build_parser():
    p = argparse.ArgumentParser(prog="biharm", description="Biharmonic algebra toolkit.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", "-i", help="JSON job file")
    p.add_argument("--output", "-o", help="output path (default: stdout)")
    p.add_argument("--format", "-f", default="json", choices=("json", "csv"))
    p.add_argument("--tolerance", "-t", type=float, default=1e-10)
    p.add_argument("--grid", help='"x0,y0,x1,y1,n" for the components command')
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    cfg = JobConfig(args.command, args.input, args.output, args.format, args.tolerance, args.grid)
    try:
        code, text = run(cfg)
    except BiharmonicError as exc:
        _emit_status("error", exc.reason, exc)
        return 2
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if code == 1:
        _emit_status("fail", "VerificationFailed", f"{cfg.command} reported ok=false")
    return code


if __name__ == "__main__":
    sys.exit(main())
