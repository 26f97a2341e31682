"""The Montesinos link value type and its structural transformations.

A Montesinos link M(e; t1, ..., tp) is the vertical closure of e horizontal
half-twists followed by p rational tangles, each plugged in through a
product with the zero tangle.  The integer ``epsilon = e + sum(floor(1/ti))``
is a link invariant; reduction, flypes and reflection move a presentation
around inside its isotopy class while tracking e and the parameters exactly.

For p >= 3 two presentations give the same link iff they agree on epsilon
and on the cyclic sequence of fractional parts {1/ti} up to rotation and
reversal, which ``canonical`` turns into a comparable normal form.  For
p <= 2 the link degenerates to a rational (two-bridge) link, handled by
``to_rational``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .rational import cf_eval, cf_expand, floor_frac, flype_transform, hat


@dataclass(frozen=True)
class MontesinosLink:
    """Twist count ``e`` plus an ordered tuple of tangle parameters.

    Parameters with an integral reciprocal (0, +-1, 1/n) never appear here;
    ``normalize_input`` absorbs them into ``e`` before construction.
    """

    e: int
    tangles: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.tangles:
            raise ValueError("not a Montesinos link: no tangles")
        for t in self.tangles:
            if t == 0 or abs(t.numerator) < 2:
                raise ValueError("invalid tangle parameter %s" % t)

    @property
    def p(self) -> int:
        return len(self.tangles)


class Closure(enum.Enum):
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"


@dataclass(frozen=True)
class RationalReduction:
    """Single fraction describing a p <= 2 link, plus its closure direction."""

    fraction: Fraction
    closure: Closure


@dataclass(frozen=True)
class CanonicalForm:
    """Equivalence-class key: epsilon and the least dihedral rotation of the
    fractional parts (1/t̂1, ..., 1/t̂p)."""

    epsilon: int
    cycle: tuple[Fraction, ...]


class DiagramClass(enum.Enum):
    ALTERNATING = "alternating"
    ADEQUATE_NON_ALTERNATING = "adequate-non-alternating"
    BOUNDARY = "boundary"


def normalize_input(e: int, raw) -> MontesinosLink:
    """Build a link from raw parameters, absorbing degenerate tangles.

    A parameter t with integral reciprocal contributes 1/t half-twists that
    a sequence of flypes slides into ``e``; +1 and -1 are the simplest such
    cases.  A zero parameter is rejected, and absorbing everything leaves
    no link at all.
    """
    e = int(e)
    kept = []
    for t in raw:
        t = Fraction(t)
        if t == 0:
            raise ValueError("zero tangle is not allowed")
        if abs(t.numerator) == 1:
            inv = 1 / t
            e += inv.numerator
        else:
            kept.append(t)
    if not kept:
        raise ValueError("not a Montesinos link: every tangle was absorbed")
    return MontesinosLink(e, tuple(kept))


def epsilon(link: MontesinosLink) -> int:
    """e + sum(floor(1/ti)); invariant under isotopy of the link."""
    return link.e + sum(floor_frac(1 / t)[0] for t in link.tangles)


def reduce(link: MontesinosLink) -> MontesinosLink:
    """Reduced form M(epsilon; t̂1, ..., t̂p) with every parameter > 1.

    Fixed point of itself; preserves epsilon and the determinant.
    """
    return MontesinosLink(epsilon(link), tuple(hat(t) for t in link.tangles))


def flype(link: MontesinosLink, index: int, sign: str) -> MontesinosLink:
    """Flype at the 1-based ``index``: e changes by +-1 and the tangle by
    ``flype_transform``.  ``sign`` ("positive"/"negative") must match the
    sign of the tangle."""
    if not 1 <= index <= link.p:
        raise ValueError("tangle index out of range")
    t = link.tangles[index - 1]
    if sign == "positive":
        if t < 0:
            raise ValueError("positive flype needs a positive tangle")
        de = 1
    elif sign == "negative":
        if t > 0:
            raise ValueError("negative flype needs a negative tangle")
        de = -1
    else:
        raise ValueError("sign must be 'positive' or 'negative'")
    tangles = list(link.tangles)
    tangles[index - 1] = flype_transform(t)
    return MontesinosLink(link.e + de, tuple(tangles))


def reflect(link: MontesinosLink) -> MontesinosLink:
    """Mirror image M(-e; -t1, ..., -tp); epsilon becomes -epsilon - p."""
    return MontesinosLink(-link.e, tuple(-t for t in link.tangles))


def parameter_determinant(e: int, tangles) -> int:
    """|prod(num_i) * (e + sum(den_i/num_i))| for an arbitrary parameter
    list (the closed-form link determinant).  Unlike the link constructor
    this accepts +-1 entries, which certificate chains need."""
    tangles = tuple(Fraction(t) for t in tangles)
    value = prod(t.numerator for t in tangles) * (
        e + sum(Fraction(t.denominator, t.numerator) for t in tangles)
    )
    assert value.denominator == 1
    return abs(value.numerator)


def determinant(link: MontesinosLink) -> int:
    """Exact link determinant; invariant under reduce, flypes, reflection."""
    return parameter_determinant(link.e, link.tangles)


def canonical(link: MontesinosLink) -> CanonicalForm:
    """Normal form deciding equivalence for p >= 3.

    The cycle holds the fractional parts {1/ti} = 1/t̂i, each strictly
    between 0 and 1, rotated/reversed to the lexicographically least
    arrangement.  Ties never matter: any minimizing arrangement compares
    equal to any other.
    """
    if link.p < 3:
        raise ValueError(
            "use to_rational: the classification by canonical form needs p >= 3"
        )
    reduced = reduce(link)
    cyc = tuple(1 / t for t in reduced.tangles)
    p = len(cyc)
    best = None
    for seq in (cyc, cyc[::-1]):
        for r in range(p):
            cand = seq[r:] + seq[:r]
            if best is None or cand < best:
                best = cand
    return CanonicalForm(reduced.e, best)


def equivalent(first: MontesinosLink, second: MontesinosLink) -> bool:
    """Whether two presentations (p >= 3 each) give the same link."""
    return canonical(first) == canonical(second)


def to_rational(link: MontesinosLink) -> RationalReduction:
    """Collapse a p <= 2 link to a single rational tangle closure.

    With expansions t1 = [a_k, ..., a_1] and t2 = [b_l, ..., b_1], the
    combined parameter is [b_1, ..., b_l, e, a_k, ..., a_1]; the closure
    direction is vertical exactly when k + l is odd.  The numerator of the
    combined fraction has absolute value det(link).
    """
    if link.p > 2:
        raise ValueError("rational reduction applies only for p <= 2")
    a = cf_expand(link.tangles[0])
    b = cf_expand(link.tangles[1]) if link.p == 2 else ()
    seq = tuple(reversed(b)) + (link.e,) + a
    fraction = cf_eval(seq)
    closure = Closure.VERTICAL if (len(a) + len(b)) % 2 == 1 else Closure.HORIZONTAL
    return RationalReduction(fraction, closure)


def diagram_class(link: MontesinosLink) -> DiagramClass:
    """Which standard diagram the reduced form admits, decided by comparing
    |epsilon + p/2| against p/2 - 1 in exact arithmetic (as integers,
    |2*epsilon + p| against p - 2)."""
    if link.p < 3:
        raise ValueError("rational links are alternating")
    eps, p = epsilon(link), link.p
    lhs, rhs = abs(2 * eps + p), p - 2
    if lhs > rhs:
        return DiagramClass.ALTERNATING
    if lhs < rhs:
        return DiagramClass.ADEQUATE_NON_ALTERNATING
    return DiagramClass.BOUNDARY
