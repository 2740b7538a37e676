import pytest
from hypothesis import given
from hypothesis import strategies as st

import klheap.qpoly as Q
from klheap.errors import ConsistencyError, InputError

qpolys = st.lists(st.integers(-9, 9), max_size=6).map(Q.qnorm)
hls = st.dictionaries(st.integers(-6, 6), st.integers(-9, 9)).map(Q.hl_norm)


def test_qnorm():
    assert Q.qnorm([1, 2, 0]) == (1, 2)
    assert Q.qnorm([0, 0]) == ()
    assert Q.qnorm([]) == ()


def test_poly_add():
    assert Q.poly_add((1, 1), (0, 1)) == (1, 2)
    assert Q.poly_add((1,), (-1,)) == ()
    assert Q.poly_add({-1: 1}, {-1: -1, 2: 3}) == {2: 3}
    with pytest.raises(TypeError):
        Q.poly_add((1,), {0: 1})


def test_poly_mul():
    assert Q.poly_mul((1, 1), (1, 1)) == (1, 2, 1)
    assert Q.poly_mul((1, 2), ()) == ()
    assert Q.poly_mul({-1: 1}, {1: 1, -1: 1}) == {0: 1, -2: 1}
    with pytest.raises(TypeError):
        Q.poly_mul({0: 1}, (1,))


def test_degree_and_coeff():
    assert Q.degree((1, 0, 3)) == 2
    assert Q.degree(()) == Q.MINUS_INFINITY
    assert Q.degree({}) == Q.MINUS_INFINITY
    assert Q.degree({-3: 1, 5: 2}) == 5
    assert Q.coeff_at((1, 2), 1) == 2
    assert Q.coeff_at((1, 2), 7) == 0
    assert Q.coeff_at({-3: 1}, -3) == 1
    assert Q.coeff_at({-3: 1}, 0) == 0


def test_shift_eval_bar():
    assert Q.poly_shift((1, 1), 2) == (0, 0, 1, 1)
    assert Q.poly_shift((), 3) == ()
    assert Q.poly_eval((1, 2, 1), 2) == 9
    assert Q.bar({1: 1, -2: 3}) == {-1: 1, 2: 3}


@given(qpolys, qpolys, qpolys)
def test_qpoly_ring_laws(a, b, c):
    assert Q.poly_add(a, b) == Q.poly_add(b, a)
    assert Q.poly_mul(a, b) == Q.poly_mul(b, a)
    assert Q.poly_mul(a, Q.poly_mul(b, c)) == Q.poly_mul(Q.poly_mul(a, b), c)
    assert Q.poly_mul(a, Q.poly_add(b, c)) == Q.poly_add(
        Q.poly_mul(a, b), Q.poly_mul(a, c)
    )


@given(hls, hls)
def test_hl_laws(a, b):
    assert Q.poly_add(a, b) == Q.poly_add(b, a)
    assert Q.poly_mul(a, b) == Q.poly_mul(b, a)
    assert Q.bar(Q.bar(a)) == a
    assert Q.bar(Q.poly_mul(a, b)) == Q.poly_mul(Q.bar(a), Q.bar(b))


@given(qpolys, st.integers(-4, 4))
def test_hl_round_trip(p, shift):
    h = Q.hl_from_qpoly(p, shift)
    assert Q.hl_to_qpoly(h, -shift) == p


def test_hl_to_qpoly_rejects_odd_or_negative_exponents():
    with pytest.raises(ConsistencyError):
        Q.hl_to_qpoly({1: 1})
    with pytest.raises(ConsistencyError):
        Q.hl_to_qpoly({-2: 1})
    assert Q.hl_to_qpoly({-2: 1}, 4) == (0, 1)


def test_q_fibonacci():
    assert [Q.q_fibonacci(n) for n in range(6)] == [
        (1,),
        (1,),
        (1, 1),
        (1, 2),
        (1, 3, 1),
        (1, 4, 3),
    ]
    assert Q.q_fibonacci(-1) == ()
    # at q = 1 these are the Fibonacci numbers
    assert [Q.poly_eval(Q.q_fibonacci(n), 1) for n in range(8)] == [
        1, 1, 2, 3, 5, 8, 13, 21,
    ]


def test_rational_series_coeff():
    one_over_1_minus_z = (((1,),), ((1,), (-1,)))
    assert Q.rational_series_coeff(*one_over_1_minus_z, 0) == (1,)
    assert Q.rational_series_coeff(*one_over_1_minus_z, 7) == (1,)
    # 1/(1 - qz) has coefficients q^k
    assert Q.rational_series_coeff(((1,),), ((1,), (0, -1)), 3) == (0, 0, 0, 1)
    with pytest.raises(InputError):
        Q.rational_series_coeff(((1,),), ((2,), (1,)), 1)
    with pytest.raises(InputError):
        Q.rational_series_coeff(((1,),), (), 1)


def test_three_row_series_frozen():
    got = [Q.rational_series_coeff(Q.G_E_NUM, Q.G_E_DEN, m) for m in range(6)]
    assert got == [
        (1,),
        (1,),
        (1, 2),
        (1, 4, 4, 1),
        (1, 6, 12, 7),
        (1, 8, 24, 29, 11),
    ]


def test_poly_text():
    assert Q.poly_text(()) == "0"
    assert Q.poly_text((1,)) == "1"
    assert Q.poly_text((1, 2)) == "1+2q"
    assert Q.poly_text((1, 4, 4, 1)) == "1+4q+4q^2+q^3"
    assert Q.poly_text((0, -1, 0, 3)) == "-q+3q^3"
    assert Q.poly_text((-2, 1)) == "-2+q"


def test_poly_json_round_trip():
    assert Q.poly_json((1, 2)) == {"coeffs": [1, 2]}
    assert Q.poly_from_json({"coeffs": [1, 2, 0]}) == (1, 2)
    with pytest.raises(InputError):
        Q.poly_from_json({"nope": []})


def test_hl_json():
    assert Q.hl_json({2: 1, -3: 4}) == {"v_exps": {"-3": 4, "2": 1}}
