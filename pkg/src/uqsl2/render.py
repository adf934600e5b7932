"""Printers and serialization for elements.

Text output parses back through expr.parse; JSON follows the schema
{"terms":[{"coeff":{"num":...,"den":...},"word":[{"g":"x+","k":0},...],
"kexp":0},...]} with polynomials as canonical text.  In human-facing text
even powers of u print as powers of gamma; JSON keeps raw u powers.
"""

from __future__ import annotations

import json

from .coeff import LaurentPoly, RatFunc, _is_one
from .elements import (
    AGEN,
    XMINUS,
    XPLUS,
    Element,
    Gen,
    Monomial,
    mono_sort_key,
)
from . import expr as _expr

_GEN_TEXT = {XPLUS: "x+", XMINUS: "x-", AGEN: "a"}
_GEN_FROM_TEXT = {"x+": XPLUS, "x-": XMINUS, "a": AGEN}


def _var_text(eq: int, eu: int, use_gamma: bool):
    bits = []
    if eq:
        bits.append("q" if eq == 1 else f"q^{eq}")
    if eu:
        if use_gamma and eu % 2 == 0:
            g = eu // 2
            bits.append("gamma" if g == 1 else f"gamma^{g}")
        else:
            bits.append("u" if eu == 1 else f"u^{eu}")
    return bits


def poly_text(p: LaurentPoly, use_gamma: bool = True) -> str:
    if p.is_zero():
        return "0"
    out = []
    for (eq, eu), c in sorted(p.terms.items(), reverse=True):
        bits = _var_text(eq, eu, use_gamma)
        mag = abs(c)
        if mag != 1 or not bits:
            bits = [str(mag)] + bits
        body = "*".join(bits)
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


def _paren(s: str) -> str:
    return f"({s})"


def coeff_text(rf: RatFunc, use_gamma: bool = True) -> str:
    """Coefficient as a term factor: parenthesized whenever composite."""
    num = poly_text(rf.num, use_gamma)
    if _is_one(rf.den):
        if len(rf.num.terms) > 1:
            return _paren(num)
        return num
    if len(rf.num.terms) > 1:
        num = _paren(num)
    if len(rf.den.terms) > 1:
        den = _paren(poly_text(rf.den, use_gamma))
    else:
        den = poly_text(rf.den, use_gamma)
    return f"{num}/{den}"


def _word_text(mono: Monomial) -> str:
    bits = [f"{_GEN_TEXT[g.kind]}[{g.idx}]" for g in mono.word]
    if mono.kexp == 1:
        bits.append("K")
    elif mono.kexp:
        bits.append(f"K^{mono.kexp}")
    return "*".join(bits)


def element_text(e: Element) -> str:
    if e.is_zero():
        return "0"
    parts = []
    for mono, c in e.sorted_terms():
        c = c.canonical()
        word = _word_text(mono)
        if not word:
            parts.append(coeff_text(c))
        elif c.is_one():
            parts.append(word)
        elif (-c).is_one():
            parts.append("-" + word)
        else:
            parts.append(f"{coeff_text(c)}*{word}")
    out = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            out += " - " + part[1:]
        else:
            out += " + " + part
    return out


# --- LaTeX -------------------------------------------------------------


def _poly_latex(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for (eq, eu), c in sorted(p.terms.items(), reverse=True):
        bits = []
        if eq:
            bits.append("q" if eq == 1 else f"q^{{{eq}}}")
        if eu:
            if eu % 2 == 0:
                g = eu // 2
                bits.append("\\gamma" if g == 1 else f"\\gamma^{{{g}}}")
            else:
                bits.append("u" if eu == 1 else f"u^{{{eu}}}")
        mag = abs(c)
        if mag != 1 or not bits:
            bits = [str(mag)] + bits
        body = " ".join(bits)
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


def _coeff_latex(rf: RatFunc) -> str:
    if _is_one(rf.den):
        body = _poly_latex(rf.num)
        if len(rf.num.terms) > 1:
            return f"\\left({body}\\right)"
        return body
    return f"\\frac{{{_poly_latex(rf.num)}}}{{{_poly_latex(rf.den)}}}"


def _word_latex(mono: Monomial) -> str:
    bits = []
    for g in mono.word:
        if g.kind == XPLUS:
            bits.append(f"x^{{+}}_{{{g.idx}}}")
        elif g.kind == XMINUS:
            bits.append(f"x^{{-}}_{{{g.idx}}}")
        else:
            bits.append(f"a_{{{g.idx}}}")
    if mono.kexp == 1:
        bits.append("K")
    elif mono.kexp:
        bits.append(f"K^{{{mono.kexp}}}")
    return " ".join(bits)


def element_latex(e: Element) -> str:
    if e.is_zero():
        return "0"
    parts = []
    for mono, c in e.sorted_terms():
        c = c.canonical()
        word = _word_latex(mono)
        if not word:
            parts.append(_coeff_latex(c))
        elif c.is_one():
            parts.append(word)
        elif (-c).is_one():
            parts.append("-" + word)
        else:
            parts.append(f"{_coeff_latex(c)} {word}")
    out = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            out += " - " + part[1:]
        else:
            out += " + " + part
    return out


# --- JSON --------------------------------------------------------------


def element_to_obj(e: Element) -> dict:
    terms = []
    for mono, c in e.sorted_terms():
        c = c.canonical()
        terms.append(
            {
                "coeff": {
                    "num": poly_text(c.num, use_gamma=False),
                    "den": poly_text(c.den, use_gamma=False),
                },
                "word": [{"g": _GEN_TEXT[g.kind], "k": g.idx} for g in mono.word],
                "kexp": mono.kexp,
            }
        )
    return {"terms": terms}


def element_json(e: Element) -> str:
    return json.dumps(element_to_obj(e), separators=(",", ":"))


def _poly_from_text(text: str) -> LaurentPoly:
    el = _expr.eval_ast(_expr.parse(text))
    if el.is_zero():
        return LaurentPoly()
    if len(el.terms) != 1:
        raise ValueError(f"not a polynomial: {text!r}")
    mono, c = next(iter(el.terms.items()))
    if mono != Monomial((), 0) or not _is_one(c.den):
        raise ValueError(f"not a polynomial: {text!r}")
    return c.num


def element_from_obj(obj: dict) -> Element:
    terms = {}
    for t in obj["terms"]:
        num = _poly_from_text(t["coeff"]["num"])
        den = _poly_from_text(t["coeff"]["den"])
        word = tuple(Gen(_GEN_FROM_TEXT[g["g"]], g["k"]) for g in t["word"])
        mono = Monomial(word, t["kexp"])
        coeff = RatFunc.make(num, den)
        acc = terms.get(mono)
        terms[mono] = coeff if acc is None else acc + coeff
    return Element(terms)


def element_from_json(s: str) -> Element:
    return element_from_obj(json.loads(s))


def print_element(e: Element, format: str = "text") -> str:
    """Deterministic rendering in the requested format; text output parses
    back to an equal element."""
    if format == "text":
        return element_text(e)
    if format == "latex":
        return element_latex(e)
    if format == "json":
        return element_json(e)
    raise ValueError(f"unknown format {format!r}")
