"""Exact rational arithmetic for tangle parameters.

Everything here is a pure function on ``fractions.Fraction`` values, which
already carry the invariants we need (reduced, positive denominator,
arbitrary precision).  No floating point is used anywhere: the downstream
classification rules are strict inequalities between rationals and must not
suffer rounding.

A tangle parameter t = num/den is manipulated through four operators:

* ``floor_frac``      -- split t into floor and fractional part,
* ``hat``             -- 1/{1/t}, the normalization taking any parameter
                         into (1, oo),
* ``flype_transform`` -- num/(den-num) for t > 0, num/(den+num) for t < 0,
                         the parameter change of a flype move,
* ``cf_expand`` / ``cf_eval`` -- the continued-fraction correspondence with
                         Conway tangle words.
"""

from __future__ import annotations

from fractions import Fraction

IntSequence = tuple[int, ...]


def normalize_fraction(num: int, den: int) -> Fraction:
    """Reduced fraction with positive denominator; den must be nonzero."""
    try:
        return Fraction(num, den)
    except ZeroDivisionError:
        raise ValueError("undefined fraction: zero denominator") from None


def floor_frac(t: Fraction) -> tuple[int, Fraction]:
    """Return (floor(t), {t}) with 0 <= {t} < 1 and t = floor(t) + {t}."""
    q = t.numerator // t.denominator
    return q, t - q


def hat(t: Fraction) -> Fraction:
    """The normalization 1/{1/t}, always strictly greater than 1.

    Undefined when t = 0 or when 1/t is an integer (t = +-1 or t = 1/n);
    such parameters must have been absorbed into the twist count before
    this is called.
    """
    if t == 0:
        raise ValueError("hat undefined for the zero tangle")
    _, fr = floor_frac(1 / t)
    if fr == 0:
        raise ValueError("hat undefined: 1/t is an integer")
    return 1 / fr


def flype_transform(t: Fraction) -> Fraction:
    """Parameter change of a flype: num/(den-num) if t > 0, num/(den+num) if t < 0.

    Applying the opposite-sign transform to the result recovers t.
    """
    if t == 0:
        raise ValueError("flype undefined for the zero tangle")
    a, b = t.numerator, t.denominator
    d = b - a if t > 0 else b + a
    if d == 0:
        raise ValueError("flype degenerates for t = +-1")
    return Fraction(a, d)


def cf_expand(t: Fraction) -> IntSequence:
    """Continued-fraction expansion [a_m, ..., a_1], outermost term first.

    The expansion is sign-uniform: for t > 0 all terms are >= 0 with the
    innermost a_1 >= 2 and every middle term >= 1; for t < 0 every term is
    negated.  Under this convention each admissible t has exactly one
    expansion, and reversing the sequence spells the Conway tangle word
    a_1 a_2 ... a_m.
    """
    if t == 0 or t == 1 or t == -1:
        raise ValueError("elementary tangle has no expansion")
    neg = t < 0
    if neg:
        t = -t
    terms = []
    num, den = t.numerator, t.denominator
    while den:
        q, r = divmod(num, den)
        terms.append(q)
        num, den = den, r
    if neg:
        terms = [-a for a in terms]
    return tuple(terms)


def cf_eval(terms) -> Fraction:
    """Evaluate [a_m, ..., a_1] = a_m + 1/(a_{m-1} + 1/(... + 1/a_1))."""
    terms = tuple(terms)
    if not terms or terms[-1] == 0:
        raise ValueError("divergent continued fraction: innermost term is zero")
    val: Fraction | None = None
    for a in reversed(terms):
        if val is None:
            val = Fraction(a)
        else:
            if val == 0:
                raise ValueError("divergent continued fraction")
            val = a + 1 / val
    return val
