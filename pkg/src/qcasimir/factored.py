"""Rational functions whose denominators are products of ``L_i - L_j``.

General multivariate gcd is deliberately absent: every denominator that
arises here is a product of such linear factors, and exact division by one
linear factor at a time is all the cancellation machinery needed.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence, Tuple

from .errors import CancellationFailure, NotDivisible
from .mpoly import MPoly

Pair = Tuple[int, int]


def _linear_product(n: int, pairs: Iterable[Pair]) -> MPoly:
    out = MPoly.const(n, 1)
    for i, j in sorted(pairs):
        out = out.mul_linear(i, j)
    return out


class FactoredRational:
    """``sign * num / prod(L_i - L_j for (i, j) in den)`` with every pair ``i < j``."""

    __slots__ = ("num", "den", "sign")

    def __init__(self, num: MPoly, den: Iterable[Pair] = (), sign: int = 1):
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        pairs = []
        for i, j in den:
            if i == j or not (1 <= i <= num.n and 1 <= j <= num.n):
                raise IndexError(f"invalid factor (L{i} - L{j}) for n={num.n}")
            if i > j:
                i, j = j, i
                sign = -sign
            pairs.append((i, j))
        self.num = num
        self.den = Counter(pairs)
        self.sign = sign

    @property
    def n(self) -> int:
        return self.num.n

    @classmethod
    def polynomial(cls, p: MPoly) -> "FactoredRational":
        return cls(p)

    def factors(self) -> Tuple[Pair, ...]:
        return tuple(sorted(self.den.elements()))

    def is_polynomial(self) -> bool:
        return not self.den

    def signed_num(self) -> MPoly:
        return self.num if self.sign == 1 else -self.num

    def to_mpoly(self) -> MPoly:
        if self.den:
            raise CancellationFailure(f"denominator factors {self.factors()} did not cancel")
        return self.signed_num()

    def __neg__(self) -> "FactoredRational":
        return FactoredRational(self.num, self.factors(), -self.sign)

    def __mul__(self, other) -> "FactoredRational":
        if isinstance(other, FactoredRational):
            return FactoredRational(self.num * other.num, self.factors() + other.factors(), self.sign * other.sign)
        return FactoredRational(self.num * other, self.factors(), self.sign)

    __rmul__ = __mul__

    def __add__(self, other: "FactoredRational") -> "FactoredRational":
        return frac_add(self, other)

    def reduce(self) -> "FactoredRational":
        return frac_reduce(self)

    def value_equals(self, other: "FactoredRational") -> bool:
        """Equality of values, by cross-multiplying out both denominators."""
        lhs = self.signed_num() * _linear_product(self.n, other.den.elements())
        rhs = other.signed_num() * _linear_product(self.n, self.den.elements())
        return lhs == rhs

    def __repr__(self) -> str:
        den = "*".join(f"(L{i} - L{j})" for i, j in self.factors()) or "1"
        sign = "-" if self.sign < 0 else ""
        return f"FactoredRational({sign}({self.num}) / {den})"


def frac_reduce(x: FactoredRational) -> FactoredRational:
    """Cancel every denominator factor that exactly divides the numerator."""
    num = x.num
    remaining: Counter = Counter()
    for pair in sorted(x.den):
        mult = x.den[pair]
        while mult:
            try:
                num = num.exact_divide_linear(*pair)
            except NotDivisible:
                break
            mult -= 1
        if mult:
            remaining[pair] = mult
    return FactoredRational(num, sorted(remaining.elements()), x.sign)


def frac_sum(terms: Sequence[FactoredRational], n: int) -> FactoredRational:
    """Sum over the least common denominator (multiset union), then reduce."""
    lcd: Counter = Counter()
    for t in terms:
        lcd |= t.den
    total = MPoly.zero(n)
    for t in terms:
        missing = lcd - t.den
        cofactor = _linear_product(n, missing.elements())
        total = total + t.signed_num() * cofactor
    return frac_reduce(FactoredRational(total, sorted(lcd.elements())))


def frac_add(a: FactoredRational, b: FactoredRational) -> FactoredRational:
    if a.n != b.n:
        raise ValueError("mismatched variable counts")
    return frac_sum([a, b], a.n)
