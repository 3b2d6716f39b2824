"""The field Q(q) as canonical ratios of Laurent polynomials."""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, PoleAtPoint
from .laurent import (
    ONE as _L_ONE,
    ZERO as _L_ZERO,
    Coeff,
    QLaurent,
    as_coeff,
    format_rational,
    poly_divexact,
    poly_gcd,
)


def _normalize(num: QLaurent, den: QLaurent) -> "QField":
    if not den:
        raise DivisionByZero("zero denominator in Q(q)")
    if not num:
        return QField.ZERO
    t, dden = den.to_dense()
    s, dnum = num.to_dense()
    shift = s - t
    if len(dden) == 1:
        p = QLaurent.from_dense(dnum, shift)
        return QField._raw(p if dden[0] == 1 else p.scale(Fraction(1) / dden[0]), _L_ONE)
    if len(dnum) > 1:
        g = poly_gcd(dnum, dden)
        if len(g) > 1:
            dnum = poly_divexact(dnum, g)
            dden = poly_divexact(dden, g)
    lc = dden[-1]
    if lc != 1:
        inv = Fraction(1) / lc
        dnum = [c * inv for c in dnum]
        dden = [c * inv for c in dden]
    return QField._raw(QLaurent.from_dense(dnum, shift), QLaurent.from_dense(dden))


class QField:
    """Immutable element of Q(q) in canonical form.

    ``den`` is an ordinary monic polynomial in ``q`` with nonzero constant
    term, every power of ``q`` lives in ``num``, and the two are coprime.
    Equal field elements therefore share one representation, so equality and
    hashing work on the stored pair directly.
    """

    __slots__ = ("num", "den", "_hash")

    ZERO: "QField"
    ONE: "QField"

    def __init__(self, num: Union[QLaurent, int, Fraction, str] = 0, den: Union[QLaurent, int, Fraction, str] = 1):
        if not isinstance(num, QLaurent):
            num = QLaurent.const(num)
        if not isinstance(den, QLaurent):
            den = QLaurent.const(den)
        x = _normalize(num, den)
        self.num = x.num
        self.den = x.den
        self._hash = None

    @classmethod
    def _raw(cls, num: QLaurent, den: QLaurent) -> "QField":
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def laurent(cls, p: QLaurent) -> "QField":
        return cls._raw(p, _L_ONE)

    @classmethod
    def const(cls, c) -> "QField":
        return cls._raw(QLaurent.const(c), _L_ONE)

    @classmethod
    def q(cls, e: int = 1, c=1) -> "QField":
        """The scalar ``c * q**e``."""
        return cls._raw(QLaurent.monomial(e, c), _L_ONE)

    @classmethod
    def coerce(cls, x) -> "QField":
        if isinstance(x, QField):
            return x
        if isinstance(x, QLaurent):
            return cls._raw(x, _L_ONE)
        return cls.const(x)

    # -- predicates -----------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.num)

    @property
    def is_laurent(self) -> bool:
        return self.den.is_one()

    def is_const(self) -> bool:
        return self.den.is_one() and self.num.is_const()

    def is_one(self) -> bool:
        return self.den.is_one() and self.num.is_one()

    def as_rational(self) -> Coeff:
        if not self.is_const():
            raise ValueError(f"{self!r} is not a rational constant")
        return self.num.coeff(0)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other) -> "QField":
        if not isinstance(other, QField):
            other = QField.coerce(other)
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den.is_one() and other.den.is_one():
            return QField._raw(self.num + other.num, _L_ONE)
        if self.den == other.den:
            return _normalize(self.num + other.num, self.den)
        return _normalize(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "QField":
        return QField._raw(-self.num, self.den)

    def __sub__(self, other) -> "QField":
        if not isinstance(other, QField):
            other = QField.coerce(other)
        return self + (-other)

    def __rsub__(self, other) -> "QField":
        return QField.coerce(other) - self

    def __mul__(self, other) -> "QField":
        if not isinstance(other, QField):
            other = QField.coerce(other)
        if not self.num or not other.num:
            return QField.ZERO
        if self.den.is_one() and other.den.is_one():
            return QField._raw(self.num * other.num, _L_ONE)
        if len(other.num) == 1 and other.den.is_one():
            # monomial scalars commute with the canonical form up to the leading coefficient
            return QField._raw(self.num * other.num, self.den)
        if len(self.num) == 1 and self.den.is_one():
            return QField._raw(other.num * self.num, other.den)
        return _normalize(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "QField":
        if not self.num:
            raise DivisionByZero("inverse of zero in Q(q)")
        return _normalize(self.den, self.num)

    def __truediv__(self, other) -> "QField":
        if not isinstance(other, QField):
            other = QField.coerce(other)
        if not other.num:
            raise DivisionByZero("division by zero in Q(q)")
        return _normalize(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "QField":
        return QField.coerce(other) / self

    def __pow__(self, k: int) -> "QField":
        if k < 0:
            return self.inverse() ** (-k)
        if self.den.is_one():
            return QField._raw(self.num ** k, _L_ONE)
        # num and den stay coprime under powers, and a power of a monic polynomial is monic
        return QField._raw(self.num ** k, self.den ** k)

    def evaluate(self, a) -> Coeff:
        """Value at ``q = a``; removable singularities are already cancelled."""
        a = as_coeff(a)
        d = self.den.evaluate(a)
        if not d:
            raise PoleAtPoint(f"denominator vanishes at q = {a}")
        n = self.num.evaluate(a)
        return as_coeff(Fraction(n) / d)

    # -- comparison / hashing -------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, QField):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, QLaurent)):
            return self == QField.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self) -> str:
        from .render import render_qfield

        return f"QField({render_qfield(self)!r})"

    def __str__(self) -> str:
        from .render import render_qfield

        return render_qfield(self)

    # -- serialization --------------------------------------------------
    def to_json(self) -> dict:
        return {
            "num": [[e, format_rational(c)] for e, c in self.num.terms()],
            "den": [[e, format_rational(c)] for e, c in self.den.terms()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "QField":
        num = QLaurent((int(e), Fraction(c)) for e, c in obj["num"])
        den = QLaurent((int(e), Fraction(c)) for e, c in obj["den"])
        return cls(num, den)


QField.ZERO = QField._raw(_L_ZERO, _L_ONE)
QField.ONE = QField._raw(_L_ONE, _L_ONE)
