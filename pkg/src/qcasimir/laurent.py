"""Laurent polynomials in ``q`` over the rationals, plus univariate gcd helpers.

Coefficients are kept as ``int`` whenever they are integral and as
:class:`fractions.Fraction` otherwise; mixed arithmetic between the two is
exact, and integers are a lot cheaper for the integral coefficients that
dominate every computation in this package.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Dict, Iterable, Iterator, List, Tuple, Union

from .errors import DivisionByZero, PoleAtPoint

Coeff = Union[int, Fraction]


def as_coeff(value) -> Coeff:
    """Convert an int/Fraction/str to the compact coefficient representation."""
    if isinstance(value, bool):
        value = int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        value = Fraction(value)
    if isinstance(value, Rational):
        value = Fraction(value)
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"not an exact rational: {value!r}")


def _tidy(c) -> Coeff:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def format_rational(c: Coeff) -> str:
    """Serialize as ``"p/r"``; the denominator is always written."""
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


class QLaurent:
    """Immutable element of ``Q[q, q^-1]``, stored as ``{exponent: coefficient}``."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Union[Dict[int, object], Iterable[Tuple[int, object]], None] = None):
        t: Dict[int, Coeff] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                c = as_coeff(c)
                if c:
                    e = int(e)
                    s = _tidy(t.get(e, 0) + c)
                    if s:
                        t[e] = s
                    else:
                        t.pop(e, None)
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: Dict[int, Coeff]) -> "QLaurent":
        obj = cls.__new__(cls)
        obj._t = t
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "QLaurent":
        c = as_coeff(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, e: int, c=1) -> "QLaurent":
        c = as_coeff(c)
        return cls._raw({int(e): c} if c else {})

    # -- inspection -----------------------------------------------------
    def terms(self) -> Iterator[Tuple[int, Coeff]]:
        """Terms in ascending exponent order."""
        for e in sorted(self._t):
            yield e, self._t[e]

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def coeff(self, e: int) -> Coeff:
        return self._t.get(e, 0)

    @property
    def min_exp(self) -> int:
        return min(self._t)

    @property
    def max_exp(self) -> int:
        return max(self._t)

    def leading_coeff(self) -> Coeff:
        return self._t[max(self._t)]

    def is_const(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def is_one(self) -> bool:
        return len(self._t) == 1 and self._t.get(0) == 1

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other: "QLaurent") -> "QLaurent":
        if not isinstance(other, QLaurent):
            other = QLaurent.const(other)
        if len(self._t) < len(other._t):
            a, b = other._t, self._t
        else:
            a, b = self._t, other._t
        t = dict(a)
        for e, c in b.items():
            s = t.get(e)
            if s is None:
                t[e] = c
            else:
                s = _tidy(s + c)
                if s:
                    t[e] = s
                else:
                    del t[e]
        return QLaurent._raw(t)

    __radd__ = __add__

    def __neg__(self) -> "QLaurent":
        return QLaurent._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other: "QLaurent") -> "QLaurent":
        if not isinstance(other, QLaurent):
            other = QLaurent.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "QLaurent":
        return QLaurent.const(other) - self

    def __mul__(self, other: "QLaurent") -> "QLaurent":
        if not isinstance(other, QLaurent):
            return self.scale(other)
        a, b = self._t, other._t
        if not a or not b:
            return QLaurent._raw({})
        if len(b) == 1:
            (e2, c2), = b.items()
            return QLaurent._raw({e + e2: _tidy(c * c2) for e, c in a.items()})
        if len(a) == 1:
            (e1, c1), = a.items()
            return QLaurent._raw({e + e1: _tidy(c * c1) for e, c in b.items()})
        t: Dict[int, Coeff] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                t[e] = t.get(e, 0) + c1 * c2
        return QLaurent._raw({e: _tidy(c) for e, c in t.items() if c})

    def __rmul__(self, other) -> "QLaurent":
        return self.scale(other)

    def scale(self, c) -> "QLaurent":
        c = as_coeff(c)
        if not c:
            return QLaurent._raw({})
        if c == 1:
            return self
        return QLaurent._raw({e: _tidy(v * c) for e, v in self._t.items()})

    def shift(self, s: int) -> "QLaurent":
        """Multiply by ``q**s``."""
        if not s:
            return self
        return QLaurent._raw({e + s: c for e, c in self._t.items()})

    def __pow__(self, k: int) -> "QLaurent":
        if k < 0:
            raise ValueError("negative powers of Laurent polynomials are not Laurent polynomials")
        result = QLaurent.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def evaluate(self, a) -> Coeff:
        a = as_coeff(a)
        if not self._t:
            return 0
        if a == 0:
            if self.min_exp < 0:
                raise PoleAtPoint("negative power of q evaluated at q = 0")
            return self._t.get(0, 0)
        a = Fraction(a)
        total = Fraction(0)
        for e, c in self._t.items():
            total += c * a ** e
        return _tidy(total)

    # -- comparison -----------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, QLaurent):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"QLaurent({dict(self.terms())!r})"

    # -- conversion to ordinary polynomials -----------------------------
    def to_dense(self) -> Tuple[int, List[Coeff]]:
        """Return ``(s, coeffs)`` with ``self == q**s * sum(coeffs[i] q**i)`` and ``coeffs[0] != 0``."""
        if not self._t:
            return 0, []
        s = self.min_exp
        dense: List[Coeff] = [0] * (self.max_exp - s + 1)
        for e, c in self._t.items():
            dense[e - s] = c
        return s, dense

    @classmethod
    def from_dense(cls, coeffs: List[Coeff], s: int = 0) -> "QLaurent":
        return cls._raw({i + s: _tidy(c) for i, c in enumerate(coeffs) if c})


ZERO = QLaurent._raw({})
ONE = QLaurent._raw({0: 1})


# -- dense univariate helpers (coefficient lists, lowest degree first) ------

def _strip(p: List) -> List:
    while p and not p[-1]:
        p.pop()
    return p


def _integer_primitive(p: List[Coeff]) -> List[int]:
    """Scale a rational coefficient list to a primitive integer list with positive leading coefficient."""
    den = 1
    for c in p:
        if type(c) is Fraction:
            den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = gcd(*ints)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _pseudo_rem(a: List[int], b: List[int]) -> List[int]:
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for i, bi in enumerate(b):
            r[shift + i] -= c * bi
        _strip(r)
    return r


def poly_gcd(a: List[Coeff], b: List[Coeff]) -> List[int]:
    """Primitive integer gcd of two nonzero univariate polynomials over Q."""
    x = _integer_primitive(_strip(list(a)))
    y = _integer_primitive(_strip(list(b)))
    if len(x) < len(y):
        x, y = y, x
    while len(y) > 1:
        r = _pseudo_rem(x, y)
        if not r:
            return y
        x, y = y, _integer_primitive(r)
    return [1]


def poly_divexact(a: List[Coeff], b: List[Coeff]) -> List[Coeff]:
    """Quotient of ``a`` by ``b`` over Q; the caller guarantees exactness."""
    if not b or not b[-1]:
        raise DivisionByZero("division by the zero polynomial")
    r = [Fraction(c) for c in a]
    db = len(b) - 1
    lb = Fraction(b[-1])
    quot: List[Coeff] = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db] / lb
        quot[k] = _tidy(c)
        if c:
            for i, bi in enumerate(b):
                r[k + i] -= c * bi
    return quot
