"""JSON-ready encodings of exact values.

A Laurent polynomial is a list of ``[e_q, e_t, "coefficient"]`` records in
canonical ``(e_t, e_q)`` order; coefficients are decimal strings so that
arbitrarily large integers survive any JSON reader.  A fraction adds its
Pochhammer denominator factors.  With ``var="qinv"`` every exponent of ``q``
is reported for the variable ``1/q`` instead.
"""

from __future__ import annotations

from typing import Any

from .laurent import PochFactor, QTFraction, QTLaurent, TSeries, format_laurent

__all__ = [
    "SCHEMA_VERSION",
    "encode_laurent",
    "decode_laurent",
    "encode_fraction",
    "decode_fraction",
    "encode_value",
    "decode_value",
    "format_value",
]

SCHEMA_VERSION = 1
VARS = ("q", "qinv")


def _flip(p: QTLaurent, var: str) -> QTLaurent:
    if var not in VARS:
        raise ValueError(f"var must be one of {VARS}")
    if var == "q" or not p:
        return p
    return QTLaurent({(-a, b): c for (a, b), c in p.items()})


def encode_laurent(p: QTLaurent, var: str = "q") -> list[list[Any]]:
    return [[a, b, str(c)] for (a, b), c in _flip(QTLaurent.coerce(p), var).items()]


def decode_laurent(records, var: str = "q") -> QTLaurent:
    return _flip(QTLaurent({(int(a), int(b)): int(c) for a, b, c in records}), var)


def _encode_factor(f: PochFactor, var: str) -> dict[str, Any]:
    step = -f.step if var == "qinv" else f.step
    return {"base": encode_laurent(f.base, var)[0], "step": step, "length": f.length}


def encode_fraction(z: QTFraction, var: str = "q") -> dict[str, Any]:
    return {
        "num": encode_laurent(z.num, var),
        "den": [_encode_factor(f, var) for f in z.den],
    }


def decode_fraction(obj, var: str = "q") -> QTFraction:
    den = []
    for f in obj["den"]:
        base = decode_laurent([f["base"]], var)
        step = -int(f["step"]) if var == "qinv" else int(f["step"])
        den.append(PochFactor(base, step, int(f["length"])))
    return QTFraction(decode_laurent(obj["num"], var), den)


def encode_value(v, var: str = "q") -> dict[str, Any]:
    """Tagged encoding of an int, Laurent polynomial, fraction or series."""
    if isinstance(v, bool):
        return {"kind": "bool", "value": v}
    if isinstance(v, int):
        v = QTLaurent.const(v)
    if isinstance(v, QTLaurent):
        return {"kind": "laurent", "var": var, "terms": encode_laurent(v, var)}
    if isinstance(v, QTFraction):
        return {"kind": "fraction", "var": var, **encode_fraction(v, var)}
    if isinstance(v, TSeries):
        return {
            "kind": "series",
            "var": var,
            "series_var": v.var,
            "order": v.order,
            "coeffs": [encode_laurent(c, var) for c in v.coeffs],
        }
    if isinstance(v, (list, tuple)) and all(isinstance(x, int) for x in v):
        return {"kind": "ints", "values": [str(x) for x in v]}
    raise TypeError(f"cannot encode {type(v).__name__}")


def decode_value(obj):
    kind = obj["kind"]
    var = obj.get("var", "q")
    if kind == "bool":
        return obj["value"]
    if kind == "laurent":
        return decode_laurent(obj["terms"], var)
    if kind == "fraction":
        return decode_fraction(obj, var)
    if kind == "series":
        return TSeries([decode_laurent(c, var) for c in obj["coeffs"]], obj["order"], obj["series_var"])
    if kind == "ints":
        return [int(x) for x in obj["values"]]
    raise ValueError(f"unknown kind {kind!r}")


def format_value(v, var: str = "q") -> str:
    """Human-readable text; ``qinv`` prints powers of ``(1/q)``."""
    qname = "q" if var == "q" else "(1/q)"
    if isinstance(v, int) and not isinstance(v, bool):
        return str(v)
    if isinstance(v, QTLaurent):
        return format_laurent(_flip(v, var), qname)
    if isinstance(v, QTFraction):
        num = format_laurent(_flip(v.num, var), qname)
        if not v.den:
            return num
        dens = []
        for f in v.den:
            base = format_laurent(_flip(f.base, var), qname)
            step = -f.step if var == "qinv" else f.step
            dens.append(f"({base}; {qname}^{step})_{f.length}")
        return f"({num}) / {' '.join(dens)}"
    if isinstance(v, TSeries):
        terms = [format_laurent(_flip(c, var), qname) for c in v.coeffs]
        return "[" + ", ".join(terms) + f"] + O({v.var}^{v.order + 1})"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(map(str, v)) + "]"
    return str(v)

