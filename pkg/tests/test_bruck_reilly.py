import random

import pytest

from brext.bicyclic import BicyclicElem, bmul
from brext.bicyclic import is_zero as b_is_zero
from brext.bruck_reilly import (
    ZERO,
    Box,
    BRElem,
    BRSystem,
    box,
    brinv,
    brmul,
    eta,
    eta_congruent,
    format_elem,
    hclass,
    idempotents_window,
    is_zero,
    nat_order,
    nat_order_oracle,
    parse_elem,
    simplicity_witness,
    window_elements,
    zero_divisor_scan,
)
from brext.clifford import CliffordElement as CE
from brext.errors import WindowTooLarge, ZeroNotAdjoined


def test_worked_product_cross_level(c2c2):
    # (0, g, 1) * (2, h, 0): the right index wins, g is shifted once through
    # theta and lands on h's level via the bond, where g h = identity
    x = BRElem(0, CE(0, 1), 1)
    y = BRElem(2, CE(1, 1), 0)
    assert brmul(c2c2, x, y) == BRElem(1, CE(1, 0), 0)


def test_worked_products_all_three_index_cases(c2c2):
    g, h = CE(0, 1), CE(1, 1)
    # j = k: plain product in T
    assert brmul(c2c2, BRElem(1, g, 2), BRElem(2, h, 0)) == BRElem(1, CE(1, 0), 0)
    # j > k: the left element shifts the right one twice
    assert brmul(c2c2, BRElem(0, g, 3), BRElem(1, h, 0)) == BRElem(0, CE(0, 0), 2)


def test_unit_fiber_identities_act_as_local_units(c2c2):
    for x in window_elements(c2c2, 2):
        e = BRElem(x.i, c2c2.sys.unit(), x.i)
        assert brmul(c2c2, e, x) == x
        f = BRElem(x.j, c2c2.sys.unit(), x.j)
        assert brmul(c2c2, x, f) == x


def test_zero_absorbs_when_adjoined(c2c2):
    x = BRElem(1, CE(0, 1), 2)
    assert is_zero(brmul(c2c2, ZERO, x))
    assert is_zero(brmul(c2c2, x, ZERO))
    assert is_zero(brinv(c2c2, ZERO))


def test_zero_rejected_when_not_adjoined(c2c2):
    bare = BRSystem(sys=c2c2.sys, with_zero=False, name="bare")
    x = BRElem(0, CE(0, 0), 0)
    with pytest.raises(ZeroNotAdjoined):
        brmul(bare, ZERO, x)
    with pytest.raises(ZeroNotAdjoined):
        zero_divisor_scan(bare, 2)


def test_inverse_swaps_indices(c2c2):
    x = BRElem(2, CE(0, 1), 5)
    assert brinv(c2c2, x) == BRElem(5, CE(0, 1), 2)
    for y in window_elements(c2c2, 3):
        yi = brinv(c2c2, y)
        assert brmul(c2c2, brmul(c2c2, y, yi), y) == y
        assert brinv(c2c2, yi) == y


def test_eta_and_congruence(c2c2):
    x = BRElem(3, CE(1, 0), 4)
    assert eta(x) == BicyclicElem(3, 4)
    assert b_is_zero(eta(ZERO))
    assert eta_congruent(x, BRElem(3, CE(0, 1), 4))
    assert not eta_congruent(x, BRElem(4, CE(1, 0), 4))
    with pytest.raises(ValueError):
        eta_congruent(x, ZERO)
    for a in window_elements(c2c2, 3):
        for b in window_elements(c2c2, 3):
            assert eta(brmul(c2c2, a, b)) == bmul(eta(a), eta(b))


def test_idempotent_window_exact_list(c2c2):
    assert idempotents_window(c2c2, 2) == [
        BRElem(0, CE(0, 0), 0),
        BRElem(0, CE(1, 0), 0),
        BRElem(1, CE(0, 0), 1),
        BRElem(1, CE(1, 0), 1),
    ]
    assert len(idempotents_window(c2c2, 8)) == 16


def test_natural_order_examples(c2c2):
    g, h = CE(0, 1), CE(1, 1)
    assert nat_order(c2c2, BRElem(1, h, 1), BRElem(0, g, 0))
    assert not nat_order(c2c2, BRElem(0, g, 0), BRElem(1, h, 1))
    assert not nat_order(c2c2, BRElem(1, h, 1), BRElem(0, CE(0, 0), 0))
    # index gaps must agree
    assert not nat_order(c2c2, BRElem(0, g, 1), BRElem(0, g, 2))
    for x in window_elements(c2c2, 2):
        assert nat_order(c2c2, x, x)
    assert nat_order(c2c2, ZERO, BRElem(0, g, 0))
    assert not nat_order(c2c2, BRElem(0, g, 0), ZERO)


def test_natural_order_witness_index_can_exceed_left_index(c2c2):
    # x = (2, h, 5) <= y = (0, g, 3): the only multiplying idempotents have
    # first index 5, above x.i, so the oracle must search up to max(i, j)
    g, h = CE(0, 1), CE(1, 1)
    x, y = BRElem(2, h, 5), BRElem(0, g, 3)
    assert nat_order(c2c2, x, y)
    assert nat_order_oracle(c2c2, x, y)
    assert not any(
        brmul(c2c2, y, BRElem(k, e, k)) == x
        for k in range(x.i + 1)
        for e in (CE(0, 0), CE(1, 0))
    )


def test_natural_order_routes_agree_on_window(c2c2, trivial):
    for B in (c2c2, trivial):
        elems = window_elements(B, 3)
        for x in elems:
            for y in elems:
                assert nat_order(B, x, y) == nat_order_oracle(B, x, y)


def test_hclass_is_the_group_fiber(c2c2):
    h = CE(1, 1)
    assert hclass(c2c2, BRElem(2, h, 0)) == [
        BRElem(2, CE(1, 0), 0),
        BRElem(2, CE(1, 1), 0),
    ]
    assert hclass(c2c2, ZERO) == [ZERO]
    for x in window_elements(c2c2, 2):
        members = hclass(c2c2, x)
        assert len(members) == c2c2.sys.group(x.s.level).order
        assert x in members


def test_simplicity_witness_worked_example(c2c2):
    a = BRElem(0, CE(0, 1), 1)
    b = BRElem(3, CE(1, 1), 2)
    x, y = simplicity_witness(c2c2, a, b)
    assert x == BRElem(3, CE(1, 0), 1)
    assert y == BRElem(2, CE(0, 0), 2)
    assert brmul(c2c2, brmul(c2c2, x, a), y) == b


def test_simplicity_witness_randomized(c2c2, trivial):
    rng = random.Random(11)
    for B in (c2c2, trivial):
        levels = B.sys.chain.size
        for _ in range(200):
            def rand():
                lv = rng.randrange(levels)
                return BRElem(
                    rng.randrange(30),
                    CE(lv, rng.randrange(B.sys.group(lv).order)),
                    rng.randrange(30),
                )

            a, b = rand(), rand()
            x, y = simplicity_witness(B, a, b)
            assert brmul(B, brmul(B, x, a), y) == b


def test_simplicity_witness_identity_pair(c2c2):
    a = BRElem(2, CE(1, 1), 7)
    x, y = simplicity_witness(c2c2, a, a)
    assert brmul(c2c2, brmul(c2c2, x, a), y) == a


def test_witness_rejects_zero(c2c2):
    with pytest.raises(ValueError):
        simplicity_witness(c2c2, ZERO, BRElem(0, CE(0, 0), 0))


def test_zero_divisor_scan_clean(c2c2, trivial):
    for B in (c2c2, trivial):
        rep = zero_divisor_scan(B, 3)
        assert rep.ok
        assert rep.checked == len(window_elements(B, 3)) ** 2


def test_zero_divisor_scan_catches_corruption(c2c2):
    culprit = BRElem(0, CE(0, 1), 1)

    def corrupted(B, x, y):
        if x == culprit and y == culprit:
            return ZERO
        return brmul(B, x, y)

    rep = zero_divisor_scan(c2c2, 2, mul=corrupted)
    assert not rep.ok
    assert (culprit, culprit) in rep.counterexamples


def test_window_cap(c2c2):
    with pytest.raises(WindowTooLarge):
        window_elements(c2c2, 17)
    with pytest.raises(WindowTooLarge):
        idempotents_window(c2c2, 17)
    with pytest.raises(WindowTooLarge):
        zero_divisor_scan(c2c2, 17)


def test_trivial_fiber_tracks_bicyclic(trivial):
    one = trivial.sys.unit()
    rng = random.Random(3)
    for _ in range(100):
        i, j, k, l = (rng.randrange(20) for _ in range(4))
        got = brmul(trivial, BRElem(i, one, j), BRElem(k, one, l))
        want = bmul(BicyclicElem(i, j), BicyclicElem(k, l))
        assert (got.i, got.j) == (want.k, want.l)


def test_parse_and_format(c2c2):
    x = parse_elem("(0,0:1,1)")
    assert x == BRElem(0, CE(0, 1), 1)
    assert format_elem(x) == "(0,0:1,1)"
    assert is_zero(parse_elem("0"))
    assert format_elem(ZERO) == "0"
    assert parse_elem(" ( 2 , 1 : 0 , 3 ) ") == BRElem(2, CE(1, 0), 3)
    for text in ("(1,2)", "(1,2:3)", "(a,0:0,1)", ""):
        with pytest.raises(ValueError):
            parse_elem(text)


def test_box_helpers(c2c2):
    x = BRElem(4, CE(0, 0), 1)
    assert box(x) == Box(4, 1)
    with pytest.raises(ValueError):
        box(ZERO)
