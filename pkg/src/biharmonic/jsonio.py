"""JSON layouts for elements, bases, polynomials and jobs.

Complex numbers are ``[re, im]`` pairs.  Output floats are written with 17
significant digits and keys in a fixed order, so equal inputs give
byte-identical documents.
"""

from __future__ import annotations

import json
import math
from numbers import Integral, Real

import numpy as np

from .algebra import AlgebraElement
from .bases import BiharmonicBasis, parse_sign, preset
from .errors import SchemaError
from .goursat import GoursatPair, Phi0Params
from .monogenic import MonogenicFn
from .sympoly import HoloPoly, RealBiPoly


# -- decoding ----------------------------------------------------------------


def _require(doc, key, where):
    if not isinstance(doc, dict):
        raise SchemaError(f"{where}: expected an object, got {type(doc).__name__}")
    if key not in doc:
        raise SchemaError(f"{where}: missing key {key!r}")
    return doc[key]


def complex_from_json(v, where="complex") -> complex:
    if isinstance(v, bool):
        raise SchemaError(f"{where}: booleans are not numbers")
    if isinstance(v, Real):
        z = complex(float(v), 0.0)
    elif isinstance(v, (list, tuple)) and len(v) == 2 and all(
        isinstance(p, Real) and not isinstance(p, bool) for p in v
    ):
        z = complex(float(v[0]), float(v[1]))
    else:
        raise SchemaError(f"{where}: expected [re, im], got {v!r}")
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise SchemaError(f"{where}: non-finite value")
    return z


def real_from_json(v, where="real") -> float:
    if isinstance(v, bool) or not isinstance(v, Real) or not math.isfinite(v):
        raise SchemaError(f"{where}: expected a finite number, got {v!r}")
    return float(v)


def element_from_json(doc) -> AlgebraElement:
    return AlgebraElement(
        complex_from_json(_require(doc, "e", "element"), "element.e"),
        complex_from_json(_require(doc, "rho", "element.rho"), "element.rho"),
    )


def basis_from_json(doc) -> BiharmonicBasis:
    """Basis descriptor or ``{"preset": name, ...}``.  Raises InvalidBasis on bad parameters."""
    if not isinstance(doc, dict):
        raise SchemaError("basis: expected an object")
    if "preset" in doc:
        name = doc["preset"]
        beta2 = complex_from_json(doc["beta2"], "basis.beta2") if "beta2" in doc else None
        sign = parse_sign(doc.get("sign", "+"))
        return preset(name, beta2=beta2, sign=sign)
    params = [complex_from_json(_require(doc, k, "basis"), f"basis.{k}") for k in ("alpha1", "beta1", "beta2")]
    sign = _require(doc, "sign", "basis")
    if sign not in ("+", "-"):
        raise SchemaError(f"basis.sign: expected '+' or '-', got {sign!r}")
    return BiharmonicBasis(*params, sign=parse_sign(sign))


def raw_pair_from_json(doc):
    """``{"e1": element, "e2": element}`` for unvalidated candidate pairs."""
    return element_from_json(_require(doc, "e1", "raw")), element_from_json(_require(doc, "e2", "raw"))


def poly_from_json(doc, where="poly") -> HoloPoly:
    coeffs = _require(doc, "coeffs", where)
    if not isinstance(coeffs, list):
        raise SchemaError(f"{where}.coeffs: expected a list")
    return HoloPoly([complex_from_json(c, f"{where}.coeffs[{k}]") for k, c in enumerate(coeffs)])


def real_bipoly_from_json(terms, where="bipoly") -> RealBiPoly:
    if not isinstance(terms, list):
        raise SchemaError(f"{where}: expected a list of terms")
    out = []
    for t in terms:
        i, j = _require(t, "i", where), _require(t, "j", where)
        if not (isinstance(i, Integral) and isinstance(j, Integral)) or i < 0 or j < 0:
            raise SchemaError(f"{where}: exponents must be non-negative integers")
        out.append((int(i), int(j), real_from_json(_require(t, "c", where), f"{where}.c")))
    return RealBiPoly.from_terms(out)


def monogenic_from_json(doc) -> MonogenicFn:
    basis = basis_from_json(_require(doc, "basis", "monogenic"))
    F = poly_from_json(_require(doc, "F", "monogenic"), "F")
    F0 = poly_from_json(_require(doc, "F0", "monogenic"), "F0")
    return MonogenicFn(basis, F, F0)


def goursat_from_json(doc):
    psi = poly_from_json(_require(doc, "psi", "goursat"), "psi")
    phi = poly_from_json(_require(doc, "phi", "goursat"), "phi")
    p = doc.get("phi0", {})
    if not isinstance(p, dict):
        raise SchemaError("goursat.phi0: expected an object")
    unknown = set(p) - {"a", "b", "c", "d"}
    if unknown:
        raise SchemaError(f"goursat.phi0: unknown keys {sorted(unknown)}")
    params = Phi0Params(*(real_from_json(p.get(k, 0.0), f"phi0.{k}") for k in "abcd"))
    return GoursatPair(psi, phi), params


# -- encoding ----------------------------------------------------------------


def complex_to_json(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def element_to_json(a: AlgebraElement) -> dict:
    return {"e": complex_to_json(a.e_coef), "rho": complex_to_json(a.rho_coef)}


def basis_to_json(b: BiharmonicBasis) -> dict:
    return {
        "alpha1": complex_to_json(b.alpha1),
        "beta1": complex_to_json(b.beta1),
        "beta2": complex_to_json(b.beta2),
        "sign": b.sign_str,
    }


def poly_to_json(p: HoloPoly) -> dict:
    return {"coeffs": [complex_to_json(c) for c in p.coeffs]}


def bipoly_to_json(q) -> list:
    if isinstance(q, RealBiPoly):
        return [{"i": i, "j": j, "c": float(c)} for i, j, c in q.terms()]
    return [{"i": i, "j": j, "c": complex_to_json(c)} for i, j, c in q.terms()]


def monogenic_to_json(m: MonogenicFn) -> dict:
    return {"basis": basis_to_json(m.basis), "F": poly_to_json(m.F), "F0": poly_to_json(m.F0)}


def phi0_to_json(p: Phi0Params) -> dict:
    return {"a": p.a, "b": p.b, "c": p.c, "d": p.d}


# -- deterministic serialisation ----------------------------------------------


def format_float(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialise non-finite float {x!r}")
    if x == 0:
        x = 0.0  # drop the sign of negative zero
    return format(x, ".17g")


def dumps(obj, indent: int = 2) -> str:
    """JSON text with 17-digit floats; dict order is preserved as given."""
    def enc(o, level):
        pad = " " * (indent * (level + 1))
        end = " " * (indent * level)
        if isinstance(o, bool) or o is None:
            return json.dumps(o)
        if isinstance(o, (int, np.integer)):
            return str(int(o))
        if isinstance(o, (float, np.floating)):
            return format_float(o)
        if isinstance(o, str):
            return json.dumps(o, ensure_ascii=False)
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = [f"{pad}{json.dumps(str(k))}: {enc(v, level + 1)}" for k, v in o.items()]
            return "{\n" + ",\n".join(items) + "\n" + end + "}"
        if isinstance(o, (list, tuple)):
            if not o:
                return "[]"
            if all(isinstance(v, (int, float, np.number)) and not isinstance(v, bool) for v in o):
                return "[" + ", ".join(enc(v, level + 1) for v in o) + "]"
            return "[\n" + ",\n".join(pad + enc(v, level + 1) for v in o) + "\n" + end + "]"
        raise TypeError(f"cannot serialise {type(o).__name__}")

    return enc(obj, 0) + "\n"

