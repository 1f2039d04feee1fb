"""Deterministic rendering of exact values as text, LaTeX and JSON."""

from __future__ import annotations

import math
from fractions import Fraction

from .precision import DomainError
from .quadfield import QuadExt, Surd
from .specialvalues import ExactValue

FORMATS = ("text", "latex", "json")
TERM_ORDERS = ("alg_first", "pi_first")


def _split_coeff(coeff: QuadExt) -> tuple[int, int, int, int]:
    """coeff = (na + nb*sqrt(d)) / q with integers na, nb and q > 0."""
    q = math.lcm(coeff.a.denominator, coeff.b.denominator)
    na = coeff.a.numerator * (q // coeff.a.denominator)
    nb = coeff.b.numerator * (q // coeff.b.denominator)
    return na, nb, coeff.d, q


def _radicand_text(r: QuadExt) -> str:
    if r.b == 0:
        return str(r.a)
    sign = "+" if r.b > 0 else "-"
    b = abs(r.b)
    b_part = f"sqrt({r.d})" if b == 1 else f"{b}*sqrt({r.d})"
    return f"{r.a}{sign}{b_part}"

def _radicand_latex(r: QuadExt) -> str:
    if r.b == 0:
        return str(r.a)
    sign = "+" if r.b > 0 else "-"
    b = abs(r.b)
    b_part = f"\\sqrt{{{r.d}}}" if b == 1 else f"{b}\\sqrt{{{r.d}}}"
    return f"{r.a}{sign}{b_part}"


def _term_text(coeff: QuadExt, surd: Surd, with_pi: bool) -> tuple[int, str]:
    sign = coeff.sign()
    na, nb, d, q = _split_coeff(abs(coeff))
    if nb == 0:
        numerator = str(na)
        simple_one = na == 1
    else:
        inner = f"{na}+{nb}*sqrt({d})" if nb > 0 else f"{na}-{-nb}*sqrt({d})"
        numerator = f"({inner})"
        simple_one = False
    if with_pi:
        numerator = "pi" if simple_one else f"{numerator}*pi"
    rad = surd.radicand
    has_surd = not (rad.b == 0 and rad.a == 1)
    if not has_surd:
        return sign, numerator if q == 1 else f"{numerator}/{q}"
    surd_text = f"sqrt({_radicand_text(rad)})"
    if q == 1:
        return sign, f"{numerator}/{surd_text}"
    return sign, f"{numerator}/({q}*{surd_text})"


def _term_latex(coeff: QuadExt, surd: Surd, with_pi: bool) -> tuple[int, str]:
    sign = coeff.sign()
    na, nb, d, q = _split_coeff(abs(coeff))
    if nb == 0:
        numerator = str(na)
        simple_one = na == 1
    else:
        inner = f"{na}+{nb}\\sqrt{{{d}}}" if nb > 0 else f"{na}-{-nb}\\sqrt{{{d}}}"
        numerator = f"({inner})"
        simple_one = False
    if with_pi:
        numerator = "\\pi" if simple_one else f"{numerator}\\pi"
    rad = surd.radicand
    has_surd = not (rad.b == 0 and rad.a == 1)
    denominator = ""
    if q != 1:
        denominator = str(q)
    if has_surd:
        denominator += f"\\sqrt{{{_radicand_latex(rad)}}}"
    if not denominator:
        return sign, numerator
    return sign, f"\\frac{{{numerator}}}{{{denominator}}}"


def _fraction_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _quadext_json(x: QuadExt) -> dict:
    return {"a": _fraction_str(x.a), "b": _fraction_str(x.b), "d": x.d}


def _surd_json(s: Surd) -> dict:
    return {"radicand": _quadext_json(s.radicand), "scale": _fraction_str(s.scale)}


def exact_value_to_json(v: ExactValue) -> dict:
    return {
        "pi": {"coeff": _quadext_json(v.pi_coeff), "surd": _surd_json(v.pi_surd)},
        "alg": {"coeff": _quadext_json(v.alg_coeff), "surd": _surd_json(v.alg_surd)},
    }


def _quadext_from_json(obj: dict) -> QuadExt:
    return QuadExt(Fraction(obj["a"]), Fraction(obj["b"]), int(obj["d"]))


def _surd_from_json(obj: dict) -> Surd:
    return Surd(_quadext_from_json(obj["radicand"]), Fraction(obj["scale"]))


def exact_value_from_json(obj: dict) -> ExactValue:
    return ExactValue(
        pi_coeff=_quadext_from_json(obj["pi"]["coeff"]),
        pi_surd=_surd_from_json(obj["pi"]["surd"]),
        alg_coeff=_quadext_from_json(obj["alg"]["coeff"]),
        alg_surd=_surd_from_json(obj["alg"]["surd"]),
    )


def render(v: ExactValue, format: str = "text", term_order: str = "alg_first"):
    """Canonical string (text/latex) or dict (json) for an exact value."""
    if format not in FORMATS:
        raise DomainError(f"unknown format {format!r}; choose from {FORMATS}")
    if term_order not in TERM_ORDERS:
        raise DomainError(f"unknown term order {term_order!r}; choose from {TERM_ORDERS}")
    if format == "json":
        return exact_value_to_json(v)
    term_fn = _term_text if format == "text" else _term_latex
    terms = []
    pi_term = (v.pi_coeff, v.pi_surd, True)
    alg_term = (v.alg_coeff, v.alg_surd, False)
    ordered = (alg_term, pi_term) if term_order == "alg_first" else (pi_term, alg_term)
    for coeff, surd, with_pi in ordered:
        if coeff.is_zero():
            continue
        terms.append(term_fn(coeff, surd, with_pi))
    if not terms:
        return "0"
    sep_plus = " + " if format == "text" else "+"
    sep_minus = " - " if format == "text" else "-"
    out = ("-" if terms[0][0] < 0 else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += (sep_minus if sign < 0 else sep_plus) + body
    return out
