from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qamont.rational import (
    cf_eval,
    cf_expand,
    floor_frac,
    flype_transform,
    hat,
    normalize_fraction,
)

F = Fraction


def test_normalize_fraction():
    assert normalize_fraction(-29, 9) == F(-29, 9)
    assert normalize_fraction(4, 8) == F(1, 2)
    assert normalize_fraction(6, -4) == F(-3, 2)
    with pytest.raises(ValueError, match="undefined fraction"):
        normalize_fraction(1, 0)


@pytest.mark.parametrize(
    "t, q, r",
    [
        (F(-29, 9), -4, F(7, 9)),
        (F(16, 5), 3, F(1, 5)),
        (F(5), 5, F(0)),
    ],
)
def test_floor_frac(t, q, r):
    assert floor_frac(t) == (q, r)


@pytest.mark.parametrize(
    "t, expected",
    [
        (F(-29, 9), F(29, 20)),
        (F(7, 2), F(7, 2)),
        (F(5, 16), F(5)),
    ],
)
def test_hat(t, expected):
    assert hat(t) == expected


def test_hat_undefined():
    with pytest.raises(ValueError, match="hat undefined"):
        hat(F(0))
    for t in (F(1), F(-1), F(1, 3), F(-1, 2)):
        with pytest.raises(ValueError, match="hat undefined"):
            hat(t)


@pytest.mark.parametrize(
    "t, expected",
    [
        (F(3, 2), F(-3)),
        (F(5, 3), F(-5, 2)),
        (F(-29, 9), F(29, 20)),
    ],
)
def test_flype_transform(t, expected):
    assert flype_transform(t) == expected


def test_flype_degenerates():
    for t in (F(1), F(-1)):
        with pytest.raises(ValueError, match="degenerates"):
            flype_transform(t)


@pytest.mark.parametrize(
    "t, terms",
    [
        (F(31, 7), (4, 2, 3)),
        (F(5, 16), (0, 3, 5)),
        (F(-29, 9), (-3, -4, -2)),
        (F(5), (5,)),
        (F(1, 2), (0, 2)),
    ],
)
def test_cf_expand(t, terms):
    assert cf_expand(t) == terms


def test_cf_expand_convention():
    # innermost term >= 2, middles >= 1, outermost >= 0 (negated for t < 0)
    for t in (F(31, 7), F(5, 16), F(7, 5), F(2, 3), F(9)):
        terms = cf_expand(t)
        assert terms[-1] >= 2
        assert all(a >= 1 for a in terms[1:-1])
        assert terms[0] >= 0
        assert cf_expand(-t) == tuple(-a for a in terms)


def test_cf_expand_rejects_elementary():
    for t in (F(0), F(1), F(-1)):
        with pytest.raises(ValueError, match="elementary"):
            cf_expand(t)


@pytest.mark.parametrize(
    "terms, value",
    [
        ((4, 2, 3), F(31, 7)),
        ((5,), F(5)),
        ((3, 0, 2), F(5)),
    ],
)
def test_cf_eval(terms, value):
    assert cf_eval(terms) == value


def test_cf_eval_divergent():
    with pytest.raises(ValueError, match="divergent"):
        cf_eval((2, -1, 1))  # inner tail evaluates to zero
    with pytest.raises(ValueError, match="divergent"):
        cf_eval((3, 0))  # innermost term zero


@st.composite
def fractions(draw, max_num=10**6, max_den=10**4):
    num = draw(st.integers(2, max_num)) * draw(st.sampled_from((1, -1)))
    den = draw(st.integers(1, max_den))
    q = Fraction(num, den)
    if abs(q.numerator) < 2:
        q = q + (1 if q > 0 else -1)
    return q


@given(fractions())
@settings(max_examples=300, deadline=None)
def test_cf_round_trip(t):
    assert cf_eval(cf_expand(t)) == t


@given(fractions(max_num=10**4))
@settings(max_examples=300, deadline=None)
def test_hat_above_one(t):
    h = hat(t)
    assert h > 1
    if t > 1:
        assert h == t


@given(fractions(max_num=10**4))
@settings(max_examples=300, deadline=None)
def test_flype_involution(t):
    # composing the positive-convention formula with the negative one is
    # the identity, whatever the sign of the intermediate value
    a, b = t.numerator, t.denominator
    pos = Fraction(a, b - a)
    assert Fraction(pos.numerator, pos.denominator + pos.numerator) == t
    # for |t| > 1 the transform flips the sign, so the sign-dispatching
    # function realizes the round trip by itself
    if abs(t) > 1:
        assert flype_transform(flype_transform(t)) == t


@given(fractions())
@settings(max_examples=300, deadline=None)
def test_floor_frac_exact(t):
    q, r = floor_frac(t)
    assert t == q + r
    assert 0 <= r < 1
