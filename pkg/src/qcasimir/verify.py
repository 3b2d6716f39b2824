"""Grid runner for every identity the library relies on.

Each identity expands to a list of cells; a cell evaluates to a pair
``(lhs, rhs)`` that must be equal.  Cells are independent, so they can be
spread over a process pool and collected back in index order, which keeps
the printed table identical for any ``jobs`` value.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import casimir as cz
from . import symfun as sf
from .errors import QCasimirError
from .laurent import QLaurent
from .mpoly import MPoly
from .qfield import QField

Witness = Tuple[Tuple[str, object], ...]

EIGEN_KMAX = 4
CATALOGUE_MAX_SIZE = 6


@dataclass(frozen=True)
class Bounds:
    n: int
    kmax: int
    weight_bound: int = 2
    max_degree: Optional[int] = None
    seed: int = 0
    samples: int = 6

    @property
    def degree(self) -> int:
        return self.n if self.max_degree is None else self.max_degree


def _w(**kw) -> Witness:
    return tuple(kw.items())


def _weight_cells(b: Bounds, kmax: int) -> List[Witness]:
    cells = []
    for n in range(1, b.n + 1):
        for weight in cz.dominant_weights(n, -b.weight_bound, b.weight_bound):
            for k in range(kmax + 1):
                cells.append(_w(n=n, weight=weight.coords, k=k))
    return cells


# -- cells ------------------------------------------------------------------

def _grid(n_lo, k_lo):
    def cells(b: Bounds):
        return [_w(n=n, k=k) for n in range(max(n_lo, 1), b.n + 1) for k in range(k_lo, b.kmax + 1)]
    return cells


def _ranks(n_lo):
    def cells(b: Bounds):
        return [_w(n=n) for n in range(n_lo, b.n + 1)]
    return cells


def _eigen_cells(b: Bounds):
    return _weight_cells(b, min(b.kmax, EIGEN_KMAX))


def _classical_cells(b: Bounds):
    return [_w(n=n, weight=w.coords) for n in range(1, b.n + 1)
            for w in cz.dominant_weights(n, -b.weight_bound, b.weight_bound)]


def _generation_cells(b: Bounds):
    return [_w(n=n, k=k) for n in range(1, b.n + 1) for k in range(1, b.degree + 1)]


def _schur_cells(b: Bounds):
    cells = []
    for n in range(1, min(b.n, sf.ORACLE_MAX_VARS) + 1):
        for d in range(min(b.kmax, CATALOGUE_MAX_SIZE) + 1):
            for lam in sf.partitions(d, max_len=n):
                cells.append(_w(n=n, partition=lam))
    return cells


def _sample_cells(b: Bounds):
    return [_w(seed=b.seed, sample=s) for s in range(b.samples)]


# -- evaluations --------------------------------------------------------------

def _closed_g0(n):
    return cz.g_direct(n, 0), MPoly.const(n, cz.g_zero_closed_form(n))


def _closed_g1(n):
    return cz.g_direct(n, 1), cz.g_one_closed_form(n)


def _polynomial(n, k):
    try:
        cz.g_direct(n, k)
    except QCasimirError as exc:
        return repr(exc), "polynomial"
    return "polynomial", "polynomial"


def _direct_vs_sum(n, k):
    return cz.g_direct(n, k), cz.g_recursive(n, k, "sum")


def _direct_vs_two_term(n, k):
    return cz.g_direct(n, k), cz.g_recursive(n, k, "two_term")


def _direct_vs_character(n, k):
    return cz.g_direct(n, k), cz.g_character(n, k)


def _two_term_identity(n, k):
    rhs = (
        cz.g_direct(n, k - 1).mul_var(n)
        + cz.g_direct(n - 1, k).embed(n).scale(cz.Q)
        - cz.g_direct(n - 1, k - 1).embed(n).mul_var(n).scale(cz.Q_INV)
    )
    return cz.g_direct(n, k), rhs


def _generating(n, order):
    return cz.generating_function_check(n, order), True


def _symmetric(n, k):
    return sf.is_symmetric(cz.g_direct(n, k)), True


def _hook(n, k):
    total = MPoly.zero(n)
    for i in range(1, n + 1):
        total = total + cz.gamma_ki(n, k, i).scale(cz.hook_sign(n, i))
    vanishing = [sf.hook_alternant(k, i, n) for i in range(k + 1, n + 1)]
    return (cz.g_direct(n, k), vanishing), (total, [MPoly.zero(n)] * len(vanishing))


def _hc_routes(n, k):
    return cz.hc_image(n, k, "binomial"), cz.hc_image(n, k, "product")


def _eigen(n, weight, k):
    w = cz.Weight(weight)
    direct = cz.eigenvalue_direct(w, k)
    image = cz.eigenvalue_via_hc(w, k, "image")
    character = cz.eigenvalue_via_hc(w, k, "character")
    return (direct, direct), (image, character)


def _classical(n, weight):
    w = cz.Weight(weight)
    return cz.eigenvalue_direct(w, 1).evaluate(1), sum(weight)


def _generation(n, k):
    h = sf.complete_homogeneous(k, n)
    expr = cz.express_in_casimirs(h)
    too_high = [j for j in expr.generators_used() if j > max(k, n)]
    return (expr.reconstruct(), too_high), (h, [])


def _center(n):
    inv = MPoly.monomial(n, (-1,) * n)
    m, expr = cz.center_express(inv)
    return (m, expr.coeffs), (1, {(): QField.ONE})


def _schur(n, partition):
    return sf.schur_bialternant(partition, n), sf.schur_tableaux_oracle(partition, n)


def _random_qfield(rng: random.Random) -> QField:
    def lp():
        return QLaurent({rng.randint(-3, 3): rng.randint(-4, 4) for _ in range(rng.randint(1, 3))})
    num = lp()
    den = lp()
    while not den:
        den = lp()
    return QField(num, den)


def _random_mpoly(rng: random.Random, n: int) -> MPoly:
    terms = []
    for _ in range(rng.randint(1, 4)):
        e = tuple(rng.randint(0, 2) for _ in range(n))
        terms.append((e, _random_qfield(rng)))
    return MPoly(n, terms)


def _ring_axioms(seed, sample):
    rng = random.Random(seed * 1000 + sample)
    a, b, c = (_random_mpoly(rng, 3) for _ in range(3))
    lhs = ((a * b) * c, a * (b + c), a * b, a - a)
    rhs = (a * (b * c), a * b + a * c, b * a, MPoly.zero(3))
    return lhs, rhs


@dataclass(frozen=True)
class Identity:
    name: str
    cells: Callable[[Bounds], List[Witness]]
    evaluate: Callable[..., Tuple[object, object]]


IDENTITIES: Sequence[Identity] = (
    Identity("closed_form_g0", _ranks(2), _closed_g0),
    Identity("closed_form_g1", _ranks(2), _closed_g1),
    Identity("polynomiality", _grid(1, 0), _polynomial),
    Identity("direct_eq_recursive", _grid(1, 0), _direct_vs_sum),
    Identity("direct_eq_two_term", _grid(1, 0), _direct_vs_two_term),
    Identity("direct_eq_character", _grid(1, 1), _direct_vs_character),
    Identity("two_term_recursion", _grid(2, 1), _two_term_identity),
    Identity("generating_function", lambda b: [_w(n=n, order=b.kmax) for n in range(2, b.n + 1)], _generating),
    Identity("symmetry", _grid(1, 0), _symmetric),
    Identity("hook_decomposition", _grid(1, 1), _hook),
    Identity("hc_image_routes", _grid(1, 0), _hc_routes),
    Identity("eigenvalue_coherence", _eigen_cells, _eigen),
    Identity("classical_limit", _classical_cells, _classical),
    Identity("casimir_generation", _generation_cells, _generation),
    Identity("center_inverse", _ranks(1), _center),
    Identity("schur_oracle", _schur_cells, _schur),
    Identity("ring_axioms", _sample_cells, _ring_axioms),
)

_BY_NAME: Dict[str, Identity] = {ident.name: ident for ident in IDENTITIES}


def _corrupt(x):
    if isinstance(x, bool):
        return not x
    if isinstance(x, (MPoly, QField)):
        return x + 1
    return ("corrupted", x)


def _run_cell(task) -> Tuple[bool, str]:
    name, witness, corrupt = task
    try:
        lhs, rhs = _BY_NAME[name].evaluate(**dict(witness))
    except QCasimirError as exc:
        return False, f"{type(exc).__name__}: {exc}"
    if corrupt:
        rhs = _corrupt(rhs)
    return lhs == rhs, ""


def format_witness(witness: Witness) -> str:
    parts = []
    for key, value in witness:
        if isinstance(value, tuple):
            value = "(" + ",".join(str(v) for v in value) + ")"
        parts.append(f"{key}={value}")
    return ", ".join(parts)


@dataclass
class Report:
    lines: List[str]
    ok: bool
    first_failure: Optional[str]


def run_verify(bounds: Bounds, jobs: int = 1, fault: Optional[str] = None) -> Report:
    """Evaluate every identity on the grid.

    ``fault`` names an identity whose first cell gets a perturbed right-hand
    side; it exists so tests can exercise the failure path.
    """
    if fault is not None and fault not in _BY_NAME:
        raise ValueError(f"unknown identity {fault!r}")
    tasks = []
    owners = []
    for ident in IDENTITIES:
        for idx, witness in enumerate(ident.cells(bounds)):
            tasks.append((ident.name, witness, fault == ident.name and idx == 0))
            owners.append(ident.name)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_cell, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_run_cell(t) for t in tasks]

    lines = [
        f"bounds: n<={bounds.n} kmax={bounds.kmax} eigen_kmax={min(bounds.kmax, EIGEN_KMAX)} "
        f"weights in [-{bounds.weight_bound},{bounds.weight_bound}] max_degree={bounds.degree} seed={bounds.seed}",
        f"{'identity':<24}{'cells':>7}{'failed':>8}  status",
    ]
    first_failure = None
    ok = True
    for ident in IDENTITIES:
        rows = [(t, r) for t, r, owner in zip(tasks, results, owners) if owner == ident.name]
        failed = [(t, r) for t, r in rows if not r[0]]
        status = "PASS" if not failed else "FAIL"
        lines.append(f"{ident.name:<24}{len(rows):>7}{len(failed):>8}  {status}")
        if failed and first_failure is None:
            (name, witness, _), (_, detail) = failed[0]
            first_failure = f"{name} at {format_witness(witness)}" + (f" ({detail})" if detail else "")
        ok = ok and not failed
    total = len(tasks)
    if ok:
        lines.append(f"result: PASS ({len(IDENTITIES)} identities, {total} cells)")
    else:
        lines.append(f"result: FAIL, first failing identity: {first_failure}")
    return Report(lines, ok, first_failure)
