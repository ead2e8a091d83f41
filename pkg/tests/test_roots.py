import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import rootrand.roots as roots_mod
from rootrand import DigitBlock, int_nth_root, root_fractional_digits
from rootrand.roots import _newton_nth_root

# Digits 51..70 of the cube roots of 5 and 17, cross-checked below
# against an independent high-precision float computation.
CBRT5_51_70 = "49243828617074442959"
CBRT17_51_70 = "62598480223762199399"


def test_isqrt_known_value():
    assert int_nth_root(2 * 10**20, 2) == 14142135623


def test_small_roots():
    assert int_nth_root(0, 2) == 0
    assert int_nth_root(1, 5) == 1
    assert int_nth_root(7**3, 3) == 7
    assert int_nth_root(7**3 - 1, 3) == 6
    assert int_nth_root(123456789, 1) == 123456789


def test_root_validation():
    with pytest.raises(ValueError):
        int_nth_root(-1, 2)
    with pytest.raises(ValueError):
        int_nth_root(4, 0)
    with pytest.raises(ValueError):
        int_nth_root(4.0, 2)
    with pytest.raises(ValueError):
        int_nth_root(4, 2.0)


@given(x=st.integers(min_value=0, max_value=10**60), r=st.integers(min_value=1, max_value=11))
def test_floor_root_bracket(x, r):
    t = int_nth_root(x, r)
    assert t**r <= x < (t + 1) ** r


@given(x=st.integers(min_value=0, max_value=10**40), r=st.integers(min_value=2, max_value=7))
def test_newton_matches_primary(x, r):
    assert _newton_nth_root(x, r) == int_nth_root(x, r)


@given(x=st.integers(min_value=0, max_value=10**30), r=st.integers(min_value=2, max_value=5))
def test_root_monotone(x, r):
    assert int_nth_root(x, r) <= int_nth_root(x + 1, r)


def test_fallback_without_gmpy2(monkeypatch):
    monkeypatch.setattr(roots_mod, "_HAVE_GMPY2", False)
    monkeypatch.setattr(roots_mod, "_digit_cache", type(roots_mod._digit_cache)())
    assert int_nth_root(2 * 10**20, 2) == 14142135623
    assert root_fractional_digits(5, 3, 1, 3).tolist() == [7, 0, 9]
    # Wide enough to exceed the default int-to-str conversion cap.
    wide = root_fractional_digits(5, 3, 1, 5000)
    assert wide.size == 5000
    monkeypatch.setattr(roots_mod, "_HAVE_GMPY2", True)
    monkeypatch.setattr(roots_mod, "_digit_cache", type(roots_mod._digit_cache)())
    assert np.array_equal(wide, root_fractional_digits(5, 3, 1, 5000))


def test_worked_digit_windows():
    assert root_fractional_digits(5, 3, 1, 3).tolist() == [7, 0, 9]
    assert root_fractional_digits(5, 3, 51, 3).tolist() == [4, 9, 2]
    assert root_fractional_digits(17, 3, 51, 3).tolist() == [6, 2, 5]
    got5 = "".join(map(str, root_fractional_digits(5, 3, 51, 20).tolist()))
    got17 = "".join(map(str, root_fractional_digits(17, 3, 51, 20).tolist()))
    assert got5 == CBRT5_51_70
    assert got17 == CBRT17_51_70


def test_sqrt2_digits():
    assert "".join(map(str, root_fractional_digits(2, 2, 1, 10).tolist())) == "4142135623"


def test_mpmath_cross_check():
    mp = pytest.importorskip("mpmath").mp
    mp.dps = 150
    for p, r, expect in ((5, 3, CBRT5_51_70), (17, 3, CBRT17_51_70)):
        value = mp.root(p, r)
        frac = mp.nstr(value, 120, strip_zeros=False).split(".")[1]
        assert frac[50:70] == expect
        assert frac[:20] == "".join(map(str, root_fractional_digits(p, r, 1, 20).tolist()))


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)


@given(
    p=st.sampled_from(_SMALL_PRIMES),
    r=st.sampled_from((2, 3, 5)),
    first=st.integers(min_value=1, max_value=60),
    a=st.integers(min_value=0, max_value=40),
    b=st.integers(min_value=0, max_value=40),
)
@settings(max_examples=60)
def test_window_concatenation(p, r, first, a, b):
    whole = root_fractional_digits(p, r, first, a + b)
    left = root_fractional_digits(p, r, first, a)
    right = root_fractional_digits(p, r, first + a, b)
    assert np.array_equal(whole, np.concatenate([left, right]))


@given(
    p=st.sampled_from(_SMALL_PRIMES),
    r=st.sampled_from((2, 3, 5, 7)),
    first=st.integers(min_value=1, max_value=200),
    count=st.integers(min_value=1, max_value=50),
)
@settings(max_examples=60)
def test_digits_stay_in_range(p, r, first, count):
    digits = root_fractional_digits(p, r, first, count)
    assert digits.dtype == np.uint8
    assert digits.size == count
    assert digits.max() <= 9


def test_perfect_powers_rejected():
    for p, r in ((8, 3), (9, 2), (4, 2), (32, 5)):
        with pytest.raises(ValueError):
            root_fractional_digits(p, r, 1, 5)
    # prime radicands are never perfect powers
    assert root_fractional_digits(2, 2, 1, 1).tolist() == [4]


def test_fractional_digit_validation():
    with pytest.raises(ValueError):
        root_fractional_digits(1, 2, 1, 5)
    with pytest.raises(ValueError):
        root_fractional_digits(5, 1, 1, 5)
    with pytest.raises(ValueError):
        root_fractional_digits(5, 3, 0, 5)
    with pytest.raises(ValueError):
        root_fractional_digits(5, 3, 1, -1)
    assert root_fractional_digits(5, 3, 7, 0).size == 0


def test_digit_block():
    block = DigitBlock.from_root(5, 3, 51, 3)
    assert len(block) == 3
    assert block.offset == 51
    assert block.digits.tolist() == [4, 9, 2]
    with pytest.raises(ValueError):
        DigitBlock(np.array([1, 2, 3], dtype=np.uint8), offset=0)
    with pytest.raises(ValueError):
        DigitBlock(np.array([4, 12], dtype=np.uint8), offset=1)
    with pytest.raises(ValueError):
        DigitBlock(np.zeros((2, 2), dtype=np.uint8), offset=1)
