import pytest
from hypothesis import given, strategies as st

from brext.bicyclic import (
    IDENTITY,
    ZERO,
    BicyclicElem,
    bmul,
    binv,
    format_elem,
    idempotent,
    is_idempotent,
    is_zero,
    oracle_mul,
    parse_elem,
)

small = st.integers(min_value=0, max_value=40)
huge = st.integers(min_value=0, max_value=10**18)


def test_worked_products():
    assert bmul(BicyclicElem(2, 3), BicyclicElem(1, 4)) == BicyclicElem(2, 6)
    assert bmul(BicyclicElem(1, 1), BicyclicElem(1, 1)) == BicyclicElem(1, 1)
    assert bmul(IDENTITY, BicyclicElem(5, 7)) == BicyclicElem(5, 7)
    assert bmul(BicyclicElem(5, 7), IDENTITY) == BicyclicElem(5, 7)


def test_x_times_its_inverse_is_idempotent():
    for k in range(4):
        for l in range(4):
            x = BicyclicElem(k, l)
            assert bmul(x, binv(x)) == idempotent(k)
            assert bmul(binv(x), x) == idempotent(l)


def test_zero_absorbs():
    assert is_zero(bmul(ZERO, BicyclicElem(3, 1)))
    assert is_zero(bmul(BicyclicElem(3, 1), ZERO))
    assert is_zero(bmul(ZERO, ZERO))
    assert is_zero(binv(ZERO))


def test_zero_is_not_a_pair():
    assert not isinstance(ZERO, tuple)
    assert ZERO != BicyclicElem(0, 0)


def test_oracle_agrees_exhaustively_small():
    for k in range(9):
        for l in range(9):
            x = BicyclicElem(k, l)
            for m in range(9):
                for n in range(9):
                    y = BicyclicElem(m, n)
                    assert bmul(x, y) == oracle_mul(x, y)


@given(small, small, small, small)
def test_oracle_agrees_randomized(k, l, m, n):
    x, y = BicyclicElem(k, l), BicyclicElem(m, n)
    assert bmul(x, y) == oracle_mul(x, y)


@given(huge, huge, huge, huge, huge, huge)
def test_associative_at_arbitrary_precision(k, l, m, n, r, s):
    x, y, z = BicyclicElem(k, l), BicyclicElem(m, n), BicyclicElem(r, s)
    assert bmul(bmul(x, y), z) == bmul(x, bmul(y, z))


@given(huge, huge)
def test_inverse_axioms_at_arbitrary_precision(k, l):
    x = BicyclicElem(k, l)
    assert bmul(bmul(x, binv(x)), x) == x
    assert bmul(bmul(binv(x), x), binv(x)) == binv(x)


def test_idempotents_are_the_diagonal():
    for k in range(7):
        for l in range(7):
            assert is_idempotent(BicyclicElem(k, l)) == (k == l)
            assert (bmul(BicyclicElem(k, l), BicyclicElem(k, l)) == BicyclicElem(k, l)) == (k == l)


def test_idempotent_order_reverses_omega():
    for k in range(7):
        for m in range(7):
            e, f = idempotent(k), idempotent(m)
            below = bmul(e, f) == e and bmul(f, e) == e
            assert below == (k >= m)


def test_inverses_are_unique_on_window():
    elems = [BicyclicElem(k, l) for k in range(7) for l in range(7)]
    for x in elems:
        mates = [y for y in elems if bmul(bmul(x, y), x) == x and bmul(bmul(y, x), y) == y]
        assert mates == [binv(x)]


def test_parse_and_format():
    assert parse_elem("(2,3)") == BicyclicElem(2, 3)
    assert parse_elem(" ( 10 , 0 ) ") == BicyclicElem(10, 0)
    assert is_zero(parse_elem("0"))
    assert format_elem(BicyclicElem(2, 3)) == "(2,3)"
    assert format_elem(ZERO) == "0"
    for text in ("(1,2", "(-1,2)", "(1;2)", "q2p3", ""):
        with pytest.raises(ValueError):
            parse_elem(text)


def test_negative_indices_rejected():
    with pytest.raises(ValueError):
        bmul(BicyclicElem(-1, 0), IDENTITY)
