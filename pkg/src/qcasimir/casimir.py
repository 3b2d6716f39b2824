"""Harish-Chandra images of the quantum Casimir operators of U_q(gl_n).

Everything is expressed in the Cartan variables ``L_i``, which act on a
highest weight vector of weight ``Lambda`` by ``q**(2*Lambda_i + n - 2*i + 1)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, List, Sequence, Tuple

from .errors import (
    CancellationFailure,
    DegenerateWeight,
    IndexOutOfRange,
    NonDominantWeight,
    NotSymmetric,
    SolveFailure,
)
from .factored import FactoredRational, frac_sum
from .laurent import QLaurent
from .mpoly import MPoly, dumps
from .qfield import QField
from .symfun import Partition, ZERO_HOOK, hook_partition, is_symmetric, pad, partitions, schur_bialternant

log = logging.getLogger(__name__)

Q = QField.q(1)
Q_INV = QField.q(-1)
Q_DIFF = Q - Q_INV  # q - q^-1


@dataclass(frozen=True)
class Weight:
    """A dominant integral highest weight ``(Lambda_1 >= ... >= Lambda_n)``."""

    coords: Tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(x) for x in self.coords)
        object.__setattr__(self, "coords", coords)
        if not coords:
            raise ValueError("a weight needs at least one coordinate")
        if any(a < b for a, b in zip(coords, coords[1:])):
            raise NonDominantWeight(f"{coords} is not dominant (coordinates must weakly decrease)")

    @classmethod
    def parse(cls, text: str) -> "Weight":
        return cls(tuple(int(x) for x in text.split(",")))

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def exp2(self) -> Tuple[int, ...]:
        """``2 (Lambda + rho, eps_i)`` for each ``i``."""
        n = self.n
        return tuple(2 * lam + n - 2 * i + 1 for i, lam in enumerate(self.coords, start=1))


def dominant_weights(n: int, lo: int, hi: int):
    """All dominant weights with entries in ``[lo, hi]``, lexicographically decreasing."""

    def rec(prefix, bound):
        if len(prefix) == n:
            yield Weight(tuple(prefix))
            return
        for v in range(bound, lo - 1, -1):
            yield from rec(prefix + [v], v)

    yield from rec([], hi)


# -- P_{n,i} and G_{n,k} ------------------------------------------------

@lru_cache(maxsize=None)
def p_ni(n: int, i: int) -> FactoredRational:
    """``prod_{j != i} (q L_i - q^-1 L_j) / (L_i - L_j)``."""
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"P_{{n,i}} needs 1 <= i <= n, got n={n}, i={i}")
    num = MPoly.const(n, 1)
    den = []
    for j in range(1, n + 1):
        if j != i:
            num = num * MPoly.linear(n, {i: Q, j: -Q_INV})
            den.append((i, j))
    return FactoredRational(num, den)


def _require_polynomial(x: FactoredRational, what: str) -> MPoly:
    if not x.is_polynomial():
        raise CancellationFailure(f"{what}: denominator factors {x.factors()} survived reduction")
    return x.to_mpoly()


@lru_cache(maxsize=None)
def g_direct(n: int, k: int) -> MPoly:
    """``G_{n,k} = sum_i L_i**k P_{n,i}``, summed as a rational function and reduced."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    terms = [p_ni(n, i) * MPoly.var(n, i, k) for i in range(1, n + 1)]
    return _require_polynomial(frac_sum(terms, n), f"G_{{{n},{k}}}")


_RECURSION_MEMO: Dict[Tuple[str, int, int], MPoly] = {}


def _publish(key, value: MPoly) -> MPoly:
    # a racing thread may have published the identical value first
    return _RECURSION_MEMO.setdefault(key, value)


def _g_sum_recursion(n: int, k: int) -> MPoly:
    key = ("sum", n, k)
    hit = _RECURSION_MEMO.get(key)
    if hit is not None:
        return hit
    if n == 1:
        return _publish(key, MPoly.var(1, 1, k))
    # G_{n,k} = q G_{n-1,k} + (q - q^-1) sum_{i<k} L_n^{k-i} G_{n-1,i} + q^{-(n-1)} L_n^k
    out = _g_sum_recursion(n - 1, k).embed(n).scale(Q)
    for i in range(k):
        out = out + _g_sum_recursion(n - 1, i).embed(n).mul_var(n, k - i).scale(Q_DIFF)
    out = out + MPoly.var(n, n, k).scale(QField.q(1 - n))
    return _publish(key, out)


def _g_two_term(n: int, k: int) -> MPoly:
    key = ("two_term", n, k)
    hit = _RECURSION_MEMO.get(key)
    if hit is not None:
        return hit
    if n == 1:
        return _publish(key, MPoly.var(1, 1, k))
    if k == 0:
        # k = 0 column: G_{n,0} = q G_{n-1,0} + q^{-(n-1)}
        return _publish(key, _g_two_term(n - 1, 0).embed(n).scale(Q) + QField.q(1 - n))
    # G_{n,k} = L_n G_{n,k-1} + q G_{n-1,k} - q^-1 L_n G_{n-1,k-1}
    out = (
        _g_two_term(n, k - 1).mul_var(n)
        + _g_two_term(n - 1, k).embed(n).scale(Q)
        - _g_two_term(n - 1, k - 1).embed(n).mul_var(n).scale(Q_INV)
    )
    return _publish(key, out)


def g_recursive(n: int, k: int, scheme: str = "sum") -> MPoly:
    """``G_{n,k}`` from ``G_{1,k} = L_1**k`` by recursion in ``n``.

    ``scheme="sum"`` uses the recursion read off the generating function;
    ``scheme="two_term"`` uses ``G_{n,k} = L_n G_{n,k-1} + q G_{n-1,k} - q^-1 L_n G_{n-1,k-1}``.
    """
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    if scheme == "sum":
        return _g_sum_recursion(n, k)
    if scheme == "two_term":
        return _g_two_term(n, k)
    raise ValueError(f"unknown recursion scheme {scheme!r}")


def clear_caches():
    """Drop every memo table (used by benchmarks to time cold computations)."""
    _RECURSION_MEMO.clear()
    for f in (p_ni, g_direct, _g_products, _schur_cached):
        f.cache_clear()


@lru_cache(maxsize=None)
def _schur_cached(lam: Partition, n: int) -> MPoly:
    return schur_bialternant(lam, n)


def gamma_ki(n: int, k: int, i: int) -> MPoly:
    """The hook Schur polynomial ``s_{(k-i+1, 1^(i-1))}``; zero when ``i > k``."""
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"need 1 <= i <= n, got n={n}, i={i}")
    shape = hook_partition(k, i, n)
    if shape is ZERO_HOOK:
        return MPoly.zero(n)
    return _schur_cached(shape, n)


def hook_sign(n: int, i: int) -> QField:
    """``(-1)**(i-1) * q**(n-2i+1)``."""
    return QField.q(n - 2 * i + 1, (-1) ** (i - 1))


def g_character(n: int, k: int) -> MPoly:
    """``G_{n,k}`` as a signed, q-weighted sum of hook Schur polynomials (``k >= 1``)."""
    if n < 1 or k < 1:
        raise ValueError("the hook expansion needs n >= 1 and k >= 1")
    total = MPoly.zero(n)
    for i in range(1, n + 1):
        total = total + gamma_ki(n, k, i).scale(hook_sign(n, i))
    return total


def g_zero_closed_form(n: int) -> QField:
    """``q^(n-1) + q^(n-3) + ... + q^(1-n)``."""
    return QField.laurent(QLaurent({n - 2 * i + 1: 1 for i in range(1, n + 1)}))


def g_one_closed_form(n: int) -> MPoly:
    return MPoly.linear(n, {i: 1 for i in range(1, n + 1)}).scale(QField.q(n - 1))


# -- Harish-Chandra images ------------------------------------------------

def hc_image(n: int, k: int, route: str = "binomial") -> MPoly:
    """``C^0_{n,k}``, the Harish-Chandra image of the ``k``-th Casimir.

    ``route="binomial"`` combines ``G_{n,0..k}``; ``route="product"`` reduces
    ``sum_i ((q^(1-n) L_i - 1) / (q - q^-1))**k P_{n,i}`` directly.
    """
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    if route == "binomial":
        a = QField.q(1 - n, -1)  # -q^(1-n)
        total = MPoly.zero(n)
        for j in range(k + 1):
            total = total + g_recursive(n, j).scale(a ** j * comb(k, j))
        return total.scale((Q_INV - Q) ** (-k))
    if route == "product":
        shifted = [MPoly.var(n, i).scale(QField.q(1 - n)) - 1 for i in range(1, n + 1)]
        terms = [p_ni(n, i) * (shifted[i - 1] ** k) for i in range(1, n + 1)]
        num = _require_polynomial(frac_sum(terms, n), f"C0_{{{n},{k}}}")
        return num.scale(Q_DIFF ** (-k))
    raise ValueError(f"unknown route {route!r}")


# -- eigenvalues ------------------------------------------------------------

def casimir_level(n: int) -> int:
    """``(Lambda_0, Lambda_0 + 2 rho)`` for ``Lambda_0 = eps_1``."""
    return n


def eigenvalue_direct(weight: Weight, k: int) -> QField:
    """Scalar by which ``C_{n,k}`` acts on the irreducible module of highest weight ``weight``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = weight.n
    a = weight.exp2
    if len(set(a)) != n:
        raise DegenerateWeight(f"repeated exponents {a}")
    c0 = casimir_level(n)
    total = QField.ZERO
    for i in range(n):
        up = a[i] + 1  # (eps_i, 2 Lambda + 2 rho + eps_i)
        num = QLaurent.monomial(c0 - 1)
        den = QLaurent.const(1)
        for j in range(n):
            if j != i:
                num = num * (QLaurent.monomial(up) - QLaurent.monomial(a[j] - 1))
                den = den * (QLaurent.monomial(up) - QLaurent.monomial(a[j] + 1))
        base = QField.q(up - c0) - 1
        total = total + QField(num, den) * base ** k
    return total * Q_DIFF ** (-k)


def script_g(weight: Weight, l: int) -> QField:
    """The hook-character expansion of ``G_{n,l}`` evaluated at ``L_i = q**exp2_i``."""
    if l == 0:
        return g_zero_closed_form(weight.n)
    return g_character(weight.n, l).substitute_qpowers(weight.exp2)


def eigenvalue_via_hc(weight: Weight, k: int, route: str = "image") -> QField:
    """Eigenvalue through the Harish-Chandra image.

    ``route="image"`` substitutes into ``C^0_{n,k}``; ``route="character"``
    combines the substituted hook-character sums.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = weight.n
    if route == "image":
        return hc_image(n, k).substitute_qpowers(weight.exp2)
    if route == "character":
        total = QField.ZERO
        for l in range(k + 1):
            c = QField.q((1 - n) * l, (-1) ** (k - l) * comb(k, l))
            total = total + c * script_g(weight, l)
        return total * Q_DIFF ** (-k)
    raise ValueError(f"unknown route {route!r}")


# -- generation of the symmetric ring ---------------------------------------

def _mu_key(mu: Partition):
    return (sum(mu), mu)


@dataclass(frozen=True)
class CasimirExpression:
    """``sum_mu c_mu prod_j G_{n, mu_j}``."""

    n: int
    coeffs: Dict[Partition, QField] = field(default_factory=dict)

    def __post_init__(self):
        ordered = {tuple(sorted(k, reverse=True)): v for k, v in self.coeffs.items() if v}
        object.__setattr__(self, "coeffs", dict(sorted(ordered.items(), key=lambda kv: _mu_key(kv[0]), reverse=True)))

    def reconstruct(self) -> MPoly:
        total = MPoly.zero(self.n)
        for mu, c in self.coeffs.items():
            total = total + _g_products(self.n, mu).scale(c)
        return total

    def generators_used(self) -> Tuple[int, ...]:
        return tuple(sorted({j for mu in self.coeffs for j in mu}))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"mu": list(mu), "coeff": c.to_json()} for mu, c in self.coeffs.items()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CasimirExpression":
        return cls(int(obj["n"]), {tuple(t["mu"]): QField.from_json(t["coeff"]) for t in obj["terms"]})

    def dumps(self) -> str:
        return dumps(self.to_json())


@lru_cache(maxsize=None)
def _g_products(n: int, mu: Partition) -> MPoly:
    if not mu:
        return MPoly.const(n, 1)
    return _g_products(n, mu[1:]) * g_recursive(n, mu[0])


def _solve(matrix: List[List[QField]], rhs: List[QField]) -> List[QField]:
    """Gauss-Jordan elimination over Q(q) for a square system."""
    size = len(rhs)
    a = [row[:] + [b] for row, b in zip(matrix, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col]), None)
        if pivot is None:
            raise SolveFailure(f"singular system at column {col}")
        a[col], a[pivot] = a[pivot], a[col]
        inv = a[col][col].inverse()
        a[col] = [x * inv for x in a[col]]
        for r in range(size):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[-1] for row in a]


def express_in_casimirs(p: MPoly) -> CasimirExpression:
    """Write a symmetric polynomial as a polynomial in ``G_{n,1}, ..., G_{n,n}``."""
    n = p.n
    if not p.is_polynomial():
        raise NotSymmetric("negative exponents; use center_express")
    if not is_symmetric(p):
        raise NotSymmetric("polynomial is not symmetric in L_1..L_n")
    coeffs: Dict[Partition, QField] = {}
    for d, part in p.homogeneous_components().items():
        if d == 0:
            coeffs[()] = part.constant_value()
            continue
        mus = list(partitions(d, max_part=n))
        lams = [pad(lam, n) for lam in partitions(d, max_len=n)]
        cols = [_g_products(n, mu) for mu in mus]
        matrix = [[col.coeff(lam) for col in cols] for lam in lams]
        rhs = [part.coeff(lam) for lam in lams]
        for mu, c in zip(mus, _solve(matrix, rhs)):
            if c:
                coeffs[mu] = c
    expr = CasimirExpression(n, coeffs)
    if expr.reconstruct() != p:
        raise SolveFailure("expansion in Casimir generators does not reproduce the input")
    return expr


def center_express(p: MPoly) -> Tuple[int, CasimirExpression]:
    """``(m, expr)`` with ``p = c**(2m) * expr`` and ``c**-2 = L_1 ... L_n``."""
    n = p.n
    if not is_symmetric(p):
        raise NotSymmetric("element is not symmetric in L_1..L_n, so not Weyl invariant")
    m = max(0, -min(p.min_exponents(), default=0))
    return m, express_in_casimirs(p.mul_monomial((m,) * n))


# -- generating function ----------------------------------------------------

def _series_mul(a: List[MPoly], b: List[MPoly], order: int, n: int) -> List[MPoly]:
    out = [MPoly.zero(n) for _ in range(order + 1)]
    for i, x in enumerate(a[: order + 1]):
        if not x:
            continue
        for j, y in enumerate(b[: order + 1 - i]):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def generating_function_check(n: int, order: int) -> bool:
    """Check ``S_n = (q - q^-1)/(1 - t L_n) S_{n-1} + q^-1 S_{n-1} + q^(1-n)/(1 - t L_n)`` through ``t**order``.

    Both sides use ``G`` from its defining sum.
    """
    if n < 2 or order < 0:
        raise ValueError("need n >= 2 and order >= 0")
    lhs = [g_direct(n, k) for k in range(order + 1)]
    prev = [g_direct(n - 1, k).embed(n) for k in range(order + 1)]
    geometric = [MPoly.var(n, n, j) for j in range(order + 1)]
    rhs_a = _series_mul(geometric, prev, order, n)
    rhs = [
        rhs_a[k].scale(Q_DIFF) + prev[k].scale(Q_INV) + geometric[k].scale(QField.q(1 - n))
        for k in range(order + 1)
    ]
    return lhs == rhs


def warn_if_large(n: int, k: int):
    if n > 5 or k > 8:
        log.warning("n=%d, k=%d is beyond the verified desk-scale range (n <= 5, k <= 8); this may be slow", n, k)
