"""Polynomials in ``L_1..L_n`` with coefficients in Q(q).

Exponent vectors are dense tuples of length ``n``.  Negative entries are
allowed so that symmetric Laurent inputs (powers of ``c``) can be carried
around; everything that needs an honest polynomial checks
:meth:`MPoly.is_polynomial` first.
"""

from __future__ import annotations

import json
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import NotDivisible
from .qfield import QField

Exps = Tuple[int, ...]


def grlex_key(e: Exps):
    """Sort key for graded lexicographic order with ``L_1 > L_2 > ... > L_n``."""
    return (sum(e), e)


class MPoly:
    __slots__ = ("n", "_t", "_hash")

    def __init__(self, n: int, terms=None):
        if n < 0:
            raise ValueError("variable count must be nonnegative")
        t: Dict[Exps, QField] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                e = tuple(int(x) for x in e)
                if len(e) != n:
                    raise ValueError(f"exponent vector {e} has length {len(e)}, expected {n}")
                c = QField.coerce(c)
                if c:
                    s = t.get(e)
                    s = c if s is None else s + c
                    if s:
                        t[e] = s
                    else:
                        t.pop(e, None)
        self.n = n
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, n: int, t: Dict[Exps, QField]) -> "MPoly":
        obj = cls.__new__(cls)
        obj.n = n
        obj._t = t
        obj._hash = None
        return obj

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "MPoly":
        return cls._raw(n, {})

    @classmethod
    def const(cls, n: int, c=1) -> "MPoly":
        c = QField.coerce(c)
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def monomial(cls, n: int, exps: Sequence[int], c=1) -> "MPoly":
        return cls(n, {tuple(exps): c})

    @classmethod
    def var(cls, n: int, i: int, power: int = 1) -> "MPoly":
        """The monomial ``L_i**power`` (``i`` is 1-based)."""
        if not 1 <= i <= n:
            raise IndexError(f"variable L{i} out of range for n={n}")
        e = [0] * n
        e[i - 1] = power
        return cls._raw(n, {tuple(e): QField.ONE})

    @classmethod
    def linear(cls, n: int, coeffs: Dict[int, object]) -> "MPoly":
        """``sum(c * L_i)`` from a map of 1-based index to coefficient."""
        terms = []
        for i, c in coeffs.items():
            e = [0] * n
            e[i - 1] = 1
            terms.append((tuple(e), c))
        return cls(n, terms)

    # -- inspection -----------------------------------------------------
    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def items(self):
        return self._t.items()

    def coeff(self, exps: Sequence[int]) -> QField:
        return self._t.get(tuple(exps), QField.ZERO)

    def sorted_terms(self) -> List[Tuple[Exps, QField]]:
        """Terms in graded-lex descending order."""
        return [(e, self._t[e]) for e in sorted(self._t, key=grlex_key, reverse=True)]

    def leading_term(self) -> Tuple[Exps, QField]:
        e = max(self._t, key=grlex_key)
        return e, self._t[e]

    def total_degree(self) -> int:
        return max(sum(e) for e in self._t) if self._t else -1

    def degree_in(self, i: int) -> int:
        return max(e[i - 1] for e in self._t) if self._t else -1

    def is_polynomial(self) -> bool:
        return all(x >= 0 for e in self._t for x in e)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._t}) <= 1

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and not any(next(iter(self._t))))

    def constant_value(self) -> QField:
        return self._t.get((0,) * self.n, QField.ZERO)

    def homogeneous_components(self) -> Dict[int, "MPoly"]:
        parts: Dict[int, Dict[Exps, QField]] = {}
        for e, c in self._t.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: MPoly._raw(self.n, t) for d, t in sorted(parts.items())}

    def min_exponents(self) -> Exps:
        if not self._t:
            return (0,) * self.n
        return tuple(min(e[i] for e in self._t) for i in range(self.n))

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: "MPoly"):
        if other.n != self.n:
            raise ValueError(f"mismatched variable counts {self.n} and {other.n}")

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            self._check(other)
            return other
        return MPoly.const(self.n, other)

    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        a, b = (self._t, other._t) if len(self._t) >= len(other._t) else (other._t, self._t)
        t = dict(a)
        for e, c in b.items():
            s = t.get(e)
            if s is None:
                t[e] = c
            else:
                s = s + c
                if s:
                    t[e] = s
                else:
                    del t[e]
        return MPoly._raw(self.n, t)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw(self.n, {e: -c for e, c in self._t.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            return self.scale(other)
        self._check(other)
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        t: Dict[Exps, QField] = {}
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                p = c1 * c2
                s = t.get(e)
                t[e] = p if s is None else s + p
        return MPoly._raw(self.n, {e: c for e, c in t.items() if c})

    def __rmul__(self, other) -> "MPoly":
        return self.scale(other)

    def scale(self, c) -> "MPoly":
        c = QField.coerce(c)
        if not c:
            return MPoly.zero(self.n)
        if c.is_one():
            return self
        return MPoly._raw(self.n, {e: v * c for e, v in self._t.items()})

    def mul_monomial(self, exps: Sequence[int], c=None) -> "MPoly":
        exps = tuple(exps)
        t = {tuple(x + y for x, y in zip(e, exps)): v for e, v in self._t.items()}
        out = MPoly._raw(self.n, t)
        return out if c is None else out.scale(c)

    def mul_var(self, i: int, power: int = 1) -> "MPoly":
        """Multiply by ``L_i**power`` (1-based)."""
        k = i - 1
        t = {}
        for e, v in self._t.items():
            le = list(e)
            le[k] += power
            t[tuple(le)] = v
        return MPoly._raw(self.n, t)

    def mul_linear(self, i: int, j: int) -> "MPoly":
        """Multiply by ``L_i - L_j`` (1-based)."""
        return self.mul_var(i) - self.mul_var(j)

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.const(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- variable manipulation ------------------------------------------
    def embed(self, n_new: int) -> "MPoly":
        """View as a polynomial in ``n_new >= n`` variables (extra exponents zero)."""
        if n_new < self.n:
            raise ValueError("cannot embed into fewer variables")
        pad = (0,) * (n_new - self.n)
        return MPoly._raw(n_new, {e + pad: c for e, c in self._t.items()})

    def permute(self, perm: Sequence[int]) -> "MPoly":
        """Apply ``L_i -> L_{perm[i]}`` with ``perm`` a 0-based permutation of ``range(n)``."""
        t = {}
        for e, c in self._t.items():
            ne = [0] * self.n
            for i, x in enumerate(e):
                ne[perm[i]] = x
            t[tuple(ne)] = c
        return MPoly._raw(self.n, t)

    def swap(self, i: int, j: int) -> "MPoly":
        """Exchange ``L_i`` and ``L_j`` (1-based)."""
        perm = list(range(self.n))
        perm[i - 1], perm[j - 1] = j - 1, i - 1
        return self.permute(perm)

    def substitute_qpowers(self, e: Sequence[int]) -> QField:
        """Evaluate with ``L_i -> q**e[i]``."""
        if len(e) != self.n:
            raise ValueError(f"need {self.n} exponents, got {len(e)}")
        by_power: Dict[int, QField] = {}
        for exps, c in self._t.items():
            s = sum(a * b for a, b in zip(exps, e))
            prev = by_power.get(s)
            by_power[s] = c if prev is None else prev + c
        total = QField.ZERO
        # groups keyed by q-power keep the number of normalizations small
        for s in sorted(by_power):
            total = total + by_power[s] * QField.q(s)
        return total

    def exact_divide_linear(self, i: int, j: int) -> "MPoly":
        """Exact quotient by ``L_i - L_j`` (1-based, ``i != j``).

        Synthetic division with the polynomial viewed as univariate in
        ``L_i``; raises :class:`NotDivisible` when the remainder is nonzero.
        """
        if i == j or not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"invalid linear factor (L{i} - L{j}) for n={self.n}")
        if not self._t:
            return self
        ki, kj = i - 1, j - 1
        slices: Dict[int, Dict[Exps, QField]] = {}
        for e, c in self._t.items():
            le = list(e)
            d = le[ki]
            le[ki] = 0
            slices.setdefault(d, {})[tuple(le)] = c
        dmax, dmin = max(slices), min(slices)
        quotient: Dict[Exps, QField] = {}
        carry: Dict[Exps, QField] = {}
        for d in range(dmax, dmin - 1, -1):
            cur = dict(slices.get(d, {}))
            for e, c in carry.items():
                s = cur.get(e)
                if s is None:
                    cur[e] = c
                else:
                    s = s + c
                    if s:
                        cur[e] = s
                    else:
                        del cur[e]
            if d == dmin:
                if cur:
                    raise NotDivisible(f"nonzero remainder dividing by (L{i} - L{j})")
                break
            carry = {}
            for e, c in cur.items():
                le = list(e)
                le[ki] = d - 1
                quotient[tuple(le)] = c
                le[ki] = 0
                le[kj] += 1
                carry[tuple(le)] = c
        return MPoly._raw(self.n, quotient)

    # -- comparison -----------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.n == other.n and self._t == other._t
        if isinstance(other, (int, QField)):
            return self == MPoly.const(self.n, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._t.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"MPoly({self.n}, {str(self)!r})"

    def __str__(self) -> str:
        from .render import render_mpoly

        return render_mpoly(self)

    # -- serialization --------------------------------------------------
    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"L": list(e), "coeff": c.to_json()} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "MPoly":
        n = int(obj["n"])
        return cls(n, [(tuple(t["L"]), QField.from_json(t["coeff"])) for t in obj["terms"]])

    def dumps(self) -> str:
        return dumps(self.to_json())

    @classmethod
    def loads(cls, text: str) -> "MPoly":
        return cls.from_json(json.loads(text))


def dumps(obj) -> str:
    """Canonical JSON text; ``dumps(json.loads(dumps(x))) == dumps(x)``."""
    return json.dumps(obj)


def mpoly_sum(polys: Iterable[MPoly], n: int) -> MPoly:
    t: Dict[Exps, QField] = {}
    for p in polys:
        for e, c in p._t.items():
            s = t.get(e)
            t[e] = c if s is None else s + c
    return MPoly._raw(n, {e: c for e, c in t.items() if c})
