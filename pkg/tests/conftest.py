import sympy as sp
from hypothesis import settings, strategies as st

from qcasimir.laurent import QLaurent
from qcasimir.mpoly import MPoly
from qcasimir.qfield import QField

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SQ = sp.Symbol("q")


def q(e=1, c=1):
    return QField.q(e, c)


def L(n, i, power=1):
    return MPoly.var(n, i, power)


# -- sympy bridge, used only as an independent oracle in tests ------------

def laurent_to_sympy(p: QLaurent):
    return sum((sp.Rational(c) * SQ ** e for e, c in p.terms()), sp.Integer(0))


def qfield_to_sympy(x: QField):
    return laurent_to_sympy(x.num) / laurent_to_sympy(x.den)


def mpoly_to_sympy(p: MPoly, syms):
    return sum((qfield_to_sympy(c) * sp.Mul(*[s ** a for s, a in zip(syms, e)]) for e, c in p.items()),
               sp.Integer(0))


def sympy_equal(a, b) -> bool:
    return sp.simplify(sp.together(a - b)) == 0


# -- hypothesis strategies ------------------------------------------------

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
small_ints = st.integers(min_value=-4, max_value=4)

laurents = st.dictionaries(st.integers(min_value=-3, max_value=3), rationals, max_size=4).map(QLaurent)
nonzero_laurents = laurents.filter(bool)


@st.composite
def qfields(draw):
    num = draw(laurents)
    den = draw(nonzero_laurents)
    return QField(num, den)


def mpolys(n, coeffs=None, max_exp=2, max_terms=4):
    coeffs = coeffs if coeffs is not None else qfields()
    exps = st.tuples(*[st.integers(min_value=0, max_value=max_exp)] * n)
    return st.lists(st.tuples(exps, coeffs), max_size=max_terms).map(lambda ts: MPoly(n, ts))


# -- acceptance report ----------------------------------------------------

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
