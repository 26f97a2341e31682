import random
from fractions import Fraction

import pytest

from qamont.diagram import (
    OracleLimitError,
    det_oracle,
    expected_crossings,
    goeritz_matrix,
    pd_text,
    standard_diagram,
    tangle_diagram,
)
from qamont.montesinos import MontesinosLink, determinant, normalize_input, reduce
from qamont.rational import cf_expand

from conftest import random_fraction

F = Fraction


def test_crossing_counts():
    assert standard_diagram(MontesinosLink(0, (F(2), F(3)))).crossing_count == 5
    big = MontesinosLink(3, (F(31, 7), F(5, 16), F(-29, 9)))
    assert standard_diagram(big).crossing_count == 29
    eleven_n_50 = MontesinosLink(-1, (F(5, 2), F(3), F(5, 3)))
    d = standard_diagram(eleven_n_50)
    assert d.crossing_count == expected_crossings(eleven_n_50) == 12


def test_pd_structure():
    d = standard_diagram(MontesinosLink(0, (F(2), F(3))))
    seen = {}
    for row in d.crossings:
        for edge in row:
            seen[edge] = seen.get(edge, 0) + 1
    assert all(count == 2 for count in seen.values())
    assert sorted(seen) == list(range(1, 2 * d.crossing_count + 1))
    assert pd_text(d).startswith("X(")


def test_known_determinants():
    # (2,n) torus closures
    for n in (1, 2, 3, 4, 5, 6):
        assert det_oracle(tangle_diagram(F(n))) == n
    # figure-eight knot is the closure of the 5/2 tangle
    assert det_oracle(tangle_diagram(F(5, 2))) == 5
    assert det_oracle(standard_diagram(MontesinosLink(0, (F(2), F(3))))) == 5


@pytest.mark.parametrize(
    "t",
    [F(5, 2), F(31, 7), F(-29, 9), F(5, 16), F(7, 3), F(2, 5), F(-8, 3)],
)
def test_rational_closure_determinants(t):
    assert det_oracle(tangle_diagram(t)) == abs(t.numerator)
    assert det_oracle(tangle_diagram(t, invert=True)) == t.denominator


def test_vanishing_determinant():
    for r in (F(2), F(7, 3)):
        d = standard_diagram(MontesinosLink(0, (r, -r)))
        assert det_oracle(d) == 0
    assert standard_diagram(MontesinosLink(0, (F(2), F(-2)))).components == 2


def test_goeritz_matrix_shape():
    d = standard_diagram(MontesinosLink(-1, (F(2), F(7), F(4, 3))))
    g = goeritz_matrix(d)
    size = len(g)
    for i in range(size):
        assert sum(g[i]) == 0
        for j in range(size):
            assert g[i][j] == g[j][i]


def test_oracle_limit():
    d = standard_diagram(MontesinosLink(3, (F(31, 7), F(5, 16), F(-29, 9))))
    with pytest.raises(OracleLimitError, match="oracle limit"):
        det_oracle(d, max_crossings=20)
    assert det_oracle(d, max_crossings=30) == 27489


def test_oracle_matches_formula_examples():
    cases = [
        (0, (F(2), F(7), F(-4))),
        (-1, (F(2), F(7), F(4, 3))),
        (0, (F(2), F(-7, 6), F(4, 3))),
        (-1, (F(5, 2), F(3), F(5, 3))),
        (1, (F(2), F(2))),
        (0, (F(5, 2),)),
        (-2, (F(2), F(2), F(2), F(2))),
    ]
    for e, tangles in cases:
        link = MontesinosLink(e, tangles)
        assert det_oracle(standard_diagram(link)) == determinant(link)


def test_oracle_matches_formula_random():
    rng = random.Random(23)
    checked = 0
    while checked < 400:
        p = rng.randint(1, 5)
        tangles = tuple(random_fraction(rng, 9, 8) for _ in range(p))
        e = rng.randint(-4, 4)
        link = MontesinosLink(e, tangles)
        if expected_crossings(link) > 30:
            continue
        assert det_oracle(standard_diagram(link)) == determinant(link)
        # reduction is an isotopy, so the reduced diagram agrees too
        red = reduce(link)
        if expected_crossings(red) <= 30:
            assert det_oracle(standard_diagram(red)) == determinant(link)
        checked += 1
