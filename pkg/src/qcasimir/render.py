"""Plain-text rendering: ``q^a`` powers, ``*`` products, variables ``L1..Ln``."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from .laurent import QLaurent
from .qfield import QField


def _rat(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _qpow(e: int) -> str:
    return "q" if e == 1 else f"q^{e}"


def _laurent_terms(p: QLaurent) -> List[Tuple[bool, str]]:
    """(negative, magnitude text) per term, highest power of q first."""
    out = []
    for e, c in sorted(p.terms(), reverse=True):
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            body = _rat(a)
        elif a == 1:
            body = _qpow(e)
        else:
            body = f"{_rat(a)}*{_qpow(e)}"
        out.append((neg, body))
    return out


def _join(parts: List[Tuple[bool, str]]) -> str:
    if not parts:
        return "0"
    neg, body = parts[0]
    text = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        text += (" - " if neg else " + ") + body
    return text


def render_laurent(p: QLaurent) -> str:
    return _join(_laurent_terms(p))


def render_qfield(x: QField) -> str:
    num = render_laurent(x.num)
    if x.den.is_one():
        return num
    if len(x.num) > 1:
        num = f"({num})"
    den = render_laurent(x.den)
    if len(x.den) > 1:
        den = f"({den})"
    return f"{num}/{den}"


def _is_negative(x: QField) -> bool:
    return x.num.leading_coeff() < 0


def _as_factor(x: QField) -> str:
    """Coefficient text safe to place in front of ``*``."""
    if x.den.is_one() and len(x.num) == 1:
        return render_laurent(x.num)
    return f"({render_qfield(x)})"


def _monomial(e) -> str:
    parts = []
    for i, x in enumerate(e, start=1):
        if x == 1:
            parts.append(f"L{i}")
        elif x:
            parts.append(f"L{i}^{x}")
    return "*".join(parts)


def _term(c: QField, e) -> Tuple[bool, str]:
    return _term_text(c, _monomial(e))


def _term_text(c: QField, mono: str) -> Tuple[bool, str]:
    neg = _is_negative(c)
    a = -c if neg else c
    if not mono:
        return neg, _as_factor(a)
    if a.is_one():
        return neg, mono
    return neg, f"{_as_factor(a)}*{mono}"


def render_mpoly(p) -> str:
    """Graded-lex descending; a coefficient shared (up to a rational) by every term is factored out."""
    if p.is_constant():
        return render_qfield(p.constant_value())
    terms = p.sorted_terms()
    if len(terms) > 1:
        common = terms[0][1]
        if _is_negative(common):
            common = -common
        if not common.is_one():
            ratios = [c / common for _, c in terms]
            if all(r.is_const() for r in ratios):
                inner = _join([_term(r, e) for r, (e, _) in zip(ratios, terms)])
                return f"{_as_factor(common)}*({inner})"
    return _join([_term(c, e) for e, c in terms])


def render_casimir_expression(expr) -> str:
    """Products of generators written ``G3*G1^2``, in the stored order of ``mu``."""
    if not expr.coeffs:
        return "0"
    parts = []
    for mu, c in expr.coeffs.items():
        factors = []
        for j in sorted(set(mu), reverse=True):
            m = mu.count(j)
            factors.append(f"G{j}" if m == 1 else f"G{j}^{m}")
        parts.append(_term_text(c, "*".join(factors)))
    return _join(parts)
