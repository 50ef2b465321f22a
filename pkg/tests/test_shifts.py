import pytest
from hypothesis import given, strategies as st

from dgb import ExactDivisionError, RankMismatchError
from dgb import shifts as sh


def test_mul_componentwise():
    assert sh.mul((1, 0, 2), (0, 3, 1)) == (1, 3, 3)
    assert sh.mul((0, 0, 0), (2, 1, 0)) == (2, 1, 0)
    assert sh.mul((1,), (1,)) == (2,)


def test_gcd():
    assert sh.gcd((2, 1, 0), (1, 0, 4)) == (1, 0, 0)
    assert sh.gcd((3, 2), (0, 0)) == (0, 0)
    assert sh.gcd((3, 2), (3, 2)) == (3, 2)


def test_divides_and_div():
    assert sh.divides((1, 0), (2, 3))
    assert sh.div((2, 3), (1, 0)) == (1, 3)
    assert not sh.divides((2, 0), (1, 5))
    assert sh.div((4, 7), (4, 7)) == (0, 0)
    with pytest.raises(ExactDivisionError):
        sh.div((1, 5), (2, 0))


def test_rank_mismatch():
    with pytest.raises(RankMismatchError):
        sh.mul((1, 0), (1, 0, 0))
    with pytest.raises(RankMismatchError):
        sh.gcd((1,), (1, 0))


def test_deg():
    assert sh.deg((1, 0, 1)) == 2
    assert sh.deg((0, 0, 0)) == 0
    assert sh.deg((0, 5, 0)) == 5


def test_enumerate_small():
    assert sh.enumerate_up_to_degree(1, 2) == [(0, 0), (1, 0), (0, 1)]
    assert sh.enumerate_up_to_degree(0, 3) == [(0, 0, 0)]
    assert sh.enumerate_up_to_degree(4, 1) == [(0,), (1,), (2,), (3,), (4,)]
    assert sh.enumerate_up_to_degree(float("-inf"), 2) == []


@pytest.mark.parametrize("d,rank", [(0, 1), (3, 2), (4, 3), (2, 4)])
def test_enumerate_count_and_determinism(d, rank):
    from math import comb

    out = sh.enumerate_up_to_degree(d, rank)
    assert len(out) == comb(d + rank, rank)
    assert len(set(out)) == len(out)
    assert out == sh.enumerate_up_to_degree(d, rank)


shift3 = st.tuples(*[st.integers(0, 6)] * 3)


@given(shift3, shift3)
def test_gcd_reconstruction(s, t):
    g = sh.gcd(s, t)
    assert sh.mul(g, sh.div(s, g)) == s
    assert sh.mul(g, sh.div(t, g)) == t


@given(shift3, shift3)
def test_deg_is_a_homomorphism(s, t):
    assert sh.deg(sh.mul(s, t)) == sh.deg(s) + sh.deg(t)


@given(shift3, shift3, shift3)
def test_divides_partial_order_with_gcd_meet(a, b, c):
    assert sh.divides(a, a)
    if sh.divides(a, b) and sh.divides(b, a):
        assert a == b
    if sh.divides(a, b) and sh.divides(b, c):
        assert sh.divides(a, c)
    g = sh.gcd(a, b)
    assert sh.divides(g, a) and sh.divides(g, b)
    if sh.divides(c, a) and sh.divides(c, b):
        assert sh.divides(c, g)
