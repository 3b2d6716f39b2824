import json

import pytest
from hypothesis import given, strategies as st

from conftest import L, mpolys, q
from qcasimir.errors import CancellationFailure, NotDivisible
from qcasimir.factored import FactoredRational, frac_add, frac_reduce
from qcasimir.mpoly import MPoly, dumps
from qcasimir.qfield import QField

pairs3 = st.sampled_from([(1, 2), (1, 3), (2, 3)])


def test_divide_difference_of_squares():
    p = L(2, 1, 2) - L(2, 2, 2)
    assert p.exact_divide_linear(1, 2) == L(2, 1) + L(2, 2)


def test_divide_not_divisible():
    p = L(2, 1).scale(q(1)) - L(2, 2).scale(q(-1))
    with pytest.raises(NotDivisible):
        p.exact_divide_linear(1, 2)


def test_divide_product_of_linears():
    p = (L(3, 1) - L(3, 2)) * (L(3, 1) - L(3, 3))
    assert p.exact_divide_linear(1, 3) == L(3, 1) - L(3, 2)


@given(mpolys(3), pairs3)
def test_divide_round_trip(r, pair):
    i, j = pair
    assert r.mul_linear(i, j).exact_divide_linear(i, j) == r


@given(mpolys(3), mpolys(3), mpolys(3))
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a - a).to_json()["terms"] == []


def test_substitute_qpowers():
    assert (L(2, 1) + L(2, 2)).substitute_qpowers([3, -1]) == q(3) + q(-1)
    g21 = (L(2, 1) + L(2, 2)).scale(q(1))
    assert g21.substitute_qpowers([3, -1]) == q(4) + 1
    assert MPoly.const(2, 5).substitute_qpowers([7, 2]) == QField.const(5)


def test_graded_lex_order():
    p = L(3, 3, 3) + L(3, 1) * L(3, 2) + L(3, 1, 2) + L(3, 2, 2) + MPoly.const(3, 1)
    order = [e for e, _ in p.sorted_terms()]
    assert order == [(0, 0, 3), (2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 0, 0)]


def test_json_contract():
    p = (L(2, 1) + L(2, 2)).scale(q(1)) - MPoly.const(2, q(-1))
    obj = p.to_json()
    assert obj == {
        "n": 2,
        "terms": [
            {"L": [1, 0], "coeff": {"num": [[1, "1/1"]], "den": [[0, "1/1"]]}},
            {"L": [0, 1], "coeff": {"num": [[1, "1/1"]], "den": [[0, "1/1"]]}},
            {"L": [0, 0], "coeff": {"num": [[-1, "-1/1"]], "den": [[0, "1/1"]]}},
        ],
    }


@given(mpolys(2))
def test_json_text_round_trip(p):
    text = p.dumps()
    assert MPoly.loads(text) == p
    assert dumps(json.loads(text)) == text


def test_rendering():
    assert str((L(2, 1) + L(2, 2)).scale(q(1))) == "q*(L1 + L2)"
    p = L(2, 1, 2).scale(q(1)) + (L(2, 1) * L(2, 2)).scale(q(1) - q(-1)) + L(2, 2, 2).scale(q(1))
    assert str(p) == "q*L1^2 + (q - q^-1)*L1*L2 + q*L2^2"
    assert str(MPoly.const(2, q(1) + q(-1))) == "q + q^-1"
    assert str(L(2, 1) - L(2, 2)) == "L1 - L2"
    assert str(MPoly.zero(3)) == "0"


def test_embed_and_swap():
    p = L(2, 1, 2) * L(2, 2)
    assert p.embed(3) == L(3, 1, 2) * L(3, 2)
    assert p.swap(1, 2) == L(2, 2, 2) * L(2, 1)


# -- FactoredRational ---------------------------------------------------

def _p2():
    p21 = FactoredRational(L(2, 1).scale(q(1)) - L(2, 2).scale(q(-1)), [(1, 2)])
    p22 = FactoredRational(L(2, 2).scale(q(1)) - L(2, 1).scale(q(-1)), [(2, 1)])
    return p21, p22


def test_sign_normalization():
    _, p22 = _p2()
    assert p22.factors() == ((1, 2),)
    assert p22.sign == -1


def test_reduce_cancels():
    x = frac_reduce(FactoredRational(L(2, 1, 2) - L(2, 2, 2), [(1, 2)]))
    assert x.is_polynomial()
    assert x.to_mpoly() == L(2, 1) + L(2, 2)


def test_reduce_leaves_irreducible():
    p21, _ = _p2()
    x = frac_reduce(p21)
    assert x.factors() == ((1, 2),)
    assert x.num == p21.num
    with pytest.raises(CancellationFailure):
        x.to_mpoly()


def test_sum_of_p2_is_quantum_two():
    p21, p22 = _p2()
    assert frac_add(p21, p22).to_mpoly() == MPoly.const(2, q(1) + q(-1))


def test_weighted_sum_is_g21():
    p21, p22 = _p2()
    s = frac_add(p21 * L(2, 1), p22 * L(2, 2))
    assert s.is_polynomial()
    assert s.to_mpoly() == (L(2, 1) + L(2, 2)).scale(q(1))


def test_add_zero_and_common_denominator():
    p21, _ = _p2()
    zero = FactoredRational(MPoly.zero(2))
    assert frac_add(p21, zero).value_equals(p21)
    a = FactoredRational(L(2, 1), [(1, 2)])
    b = FactoredRational(-L(2, 2), [(1, 2)])
    assert frac_add(a, b).to_mpoly() == MPoly.const(2, 1)


@given(mpolys(3, max_terms=3), mpolys(3, max_terms=3), st.lists(pairs3, max_size=2), st.lists(pairs3, max_size=2))
def test_add_is_value_correct(na, nb, da, db):
    a = FactoredRational(na, da)
    b = FactoredRational(nb, db)
    s = frac_add(a, b)
    # clear every denominator: s * Da * Db == na * Db + nb * Da
    lhs = FactoredRational(s.signed_num(), s.factors())
    rhs_num = na * _prod(3, db) + nb * _prod(3, da)
    assert lhs.value_equals(FactoredRational(rhs_num, list(da) + list(db)))


def _prod(n, pairs):
    out = MPoly.const(n, 1)
    for i, j in pairs:
        out = out.mul_linear(i, j)
    return out
