"""Partitions, hook shapes, Schur polynomials and the complete-homogeneous basis."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import BoundExceeded, IndexOutOfRange, NotSymmetric
from .mpoly import MPoly
from .qfield import QField

Partition = Tuple[int, ...]

ORACLE_MAX_SIZE = 8
ORACLE_MAX_VARS = 5


class _ZeroHook:
    """Marker for a hook shape whose character vanishes (more legs than boxes)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO_HOOK"

    def __bool__(self) -> bool:
        return False


ZERO_HOOK = _ZeroHook()


def as_partition(parts: Sequence[int]) -> Partition:
    """Validate and strip trailing zeros."""
    parts = tuple(int(x) for x in parts)
    if any(x < 0 for x in parts):
        raise ValueError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not weakly decreasing")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def pad(parts: Sequence[int], n: int) -> Partition:
    parts = as_partition(parts)
    if len(parts) > n:
        raise IndexOutOfRange(f"partition {parts} has more than {n} nonzero parts")
    return parts + (0,) * (n - len(parts))


def conjugate(parts: Sequence[int]) -> Partition:
    parts = as_partition(parts)
    if not parts:
        return ()
    return tuple(sum(1 for x in parts if x > j) for j in range(parts[0]))


def partitions(d: int, max_len: Optional[int] = None, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of ``d`` in lexicographically decreasing order."""
    if max_part is None:
        max_part = d
    if max_len is None:
        max_len = d

    def rec(rest, bound, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, bound), 0, -1):
            if first * slots < rest:
                break
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    yield from rec(d, max_part, max_len)


def hook_partition(k: int, i: int, n: int):
    """The hook ``(k-i+1, 1^(i-1), 0^(n-i))``, or :data:`ZERO_HOOK` when ``i > k``."""
    if k < 1 or i < 1 or n < 1:
        raise ValueError("hook indices must be positive")
    if i > n:
        raise IndexOutOfRange(f"hook arm index {i} exceeds n={n}")
    if i > k:
        return ZERO_HOOK
    return (k - i + 1,) + (1,) * (i - 1) + (0,) * (n - i)


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def alternant(exps: Sequence[int], n: int) -> MPoly:
    """``sum_w sign(w) L^{w(exps)}``."""
    terms = []
    for perm in permutations(range(n)):
        e = [0] * n
        for i, p in enumerate(perm):
            e[p] = exps[i]
        terms.append((tuple(e), _perm_sign(perm)))
    return MPoly(n, terms)


def schur_bialternant(lam: Sequence[int], n: int) -> MPoly:
    """Schur polynomial as alternant over Vandermonde, by exact linear division."""
    lam = pad(lam, n)
    shifted = [lam[i] + n - 1 - i for i in range(n)]
    p = alternant(shifted, n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            p = p.exact_divide_linear(i, j)
    return p


def hook_alternant(k: int, i: int, n: int) -> MPoly:
    """Numerator of the Weyl character formula at ``(k-i+1) e_1 + e_2 + ... + e_i``.

    Defined for every ``1 <= i <= n``; for ``i > k`` two shifted exponents
    coincide and the alternant is identically zero.
    """
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"hook arm index {i} exceeds n={n}")
    raw = [k - i + 1] + [1] * (i - 1) + [0] * (n - i)
    return alternant([raw[j] + n - 1 - j for j in range(n)], n)


def semistandard_tableaux(lam: Sequence[int], n: int) -> Iterator[List[List[int]]]:
    """Rows weakly increase, columns strictly increase, entries in ``1..n``."""
    lam = as_partition(lam)
    cells = [(r, c) for r, length in enumerate(lam) for c in range(length)]
    rows = [[0] * length for length in lam]

    def fill(idx):
        if idx == len(cells):
            yield [list(r) for r in rows]
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, rows[r][c - 1])
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        # room for the rest of the column below this cell
        col_len = sum(1 for length in lam if length > c)
        hi = n - (col_len - r - 1)
        for v in range(lo, hi + 1):
            rows[r][c] = v
            yield from fill(idx + 1)
        rows[r][c] = 0

    yield from fill(0)


def schur_tableaux_oracle(lam: Sequence[int], n: int, *, max_size: int = None, max_vars: int = None) -> MPoly:
    """Schur polynomial as the content generating function of semistandard tableaux."""
    max_size = ORACLE_MAX_SIZE if max_size is None else max_size
    max_vars = ORACLE_MAX_VARS if max_vars is None else max_vars
    lam = as_partition(lam)
    if sum(lam) > max_size or n > max_vars:
        raise BoundExceeded(f"tableau oracle limited to |lambda| <= {max_size}, n <= {max_vars}")
    counts: Dict[Tuple[int, ...], int] = {}
    for tab in semistandard_tableaux(lam, n):
        e = [0] * n
        for row in tab:
            for v in row:
                e[v - 1] += 1
        e = tuple(e)
        counts[e] = counts.get(e, 0) + 1
    return MPoly(n, counts)


@lru_cache(maxsize=None)
def complete_homogeneous(k: int, n: int) -> MPoly:
    """Sum of all monomials of total degree ``k`` in ``n`` variables."""
    if k < 0:
        return MPoly.zero(n)
    t = {}
    for combo in combinations_with_replacement(range(n), k):
        e = [0] * n
        for v in combo:
            e[v] += 1
        t[tuple(e)] = QField.ONE
    return MPoly(n, t)


@lru_cache(maxsize=None)
def elementary(k: int, n: int) -> MPoly:
    """Sum of squarefree monomials of degree ``k``; zero when ``k > n``."""
    if k < 0 or k > n:
        return MPoly.zero(n)
    t = {}
    for combo in combinations(range(n), k):
        e = [0] * n
        for v in combo:
            e[v] = 1
        t[tuple(e)] = QField.ONE
    return MPoly(n, t)


def is_symmetric(p: MPoly) -> bool:
    return all(p.swap(i, i + 1) == p for i in range(1, p.n))


def h_product(mu: Sequence[int], n: int) -> MPoly:
    out = MPoly.const(n, 1)
    for part in mu:
        out = out * complete_homogeneous(part, n)
    return out


def e_product(mu: Sequence[int], n: int) -> MPoly:
    out = MPoly.const(n, 1)
    for part in mu:
        out = out * elementary(part, n)
    return out


HExpr = Dict[Partition, QField]


def _hexpr_mul(a: HExpr, b: HExpr) -> HExpr:
    out: HExpr = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            key = tuple(sorted(ma + mb, reverse=True))
            out[key] = out.get(key, QField.ZERO) + ca * cb
    return {k: v for k, v in out.items() if v}


def _hexpr_add(a: HExpr, b: HExpr, scale: QField = QField.ONE) -> HExpr:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, QField.ZERO) + v * scale
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _e_in_h(k: int) -> Tuple[Tuple[Partition, QField], ...]:
    # e_k = sum_{i<k} (-1)^(k+1+i) e_i h_{k-i}
    if k == 0:
        return (((), QField.ONE),)
    acc: HExpr = {}
    for i in range(k):
        term = _hexpr_mul(dict(_e_in_h(i)), {(k - i,): QField.ONE})
        acc = _hexpr_add(acc, term, QField.const((-1) ** (k + 1 + i)))
    return tuple(sorted(acc.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True))


def _check_symmetric_polynomial(p: MPoly):
    if not p.is_polynomial():
        raise NotSymmetric("negative exponents are not allowed here")
    if not is_symmetric(p):
        raise NotSymmetric("polynomial is not symmetric in L_1..L_n")


def decompose_e_basis(p: MPoly) -> HExpr:
    """Coefficients in the elementary basis by leading-monomial elimination."""
    _check_symmetric_polynomial(p)
    n = p.n
    rem = p
    out: HExpr = {}
    while rem:
        lead, c = rem.leading_term()
        mu = conjugate(lead)
        out[mu] = out.get(mu, QField.ZERO) + c
        rem = rem - e_product(mu, n).scale(c)
    return {k: v for k, v in out.items() if v}


def decompose_h_basis(p: MPoly) -> HExpr:
    """Coefficients ``c_mu`` with ``p = sum c_mu prod_j h_{mu_j}`` and all parts ``<= n``.

    Leading monomials of ``h`` products of one degree coincide, so the
    triangular elimination runs in the elementary basis and each ``e_k``
    is then rewritten through ``sum_i (-1)^i e_i h_{k-i} = 0``.
    """
    by_e = decompose_e_basis(p)
    out: HExpr = {}
    for mu, c in by_e.items():
        term: HExpr = {(): QField.ONE}
        for part in mu:
            term = _hexpr_mul(term, dict(_e_in_h(part)))
        out = _hexpr_add(out, term, c)
    return dict(sorted(out.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True))


def reconstruct_h(coeffs: HExpr, n: int) -> MPoly:
    total = MPoly.zero(n)
    for mu, c in coeffs.items():
        total = total + h_product(mu, n).scale(c)
    return total


def symmetric_coordinates(p: MPoly) -> Dict[Partition, QField]:
    """Coefficients in the monomial symmetric basis (read off at sorted exponents)."""
    return {e: c for e, c in p.items() if all(a >= b for a, b in zip(e, e[1:]))}
