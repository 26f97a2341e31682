import random
from fractions import Fraction

import pytest

from qamont import MontesinosLink, classify
from qamont.cli import enumerate_reduced


def random_fraction(rng: random.Random, max_num: int = 40, max_den: int = 24) -> Fraction:
    """Arbitrary valid tangle parameter (|numerator| >= 2 after reduction)."""
    while True:
        num = rng.randint(2, max_num) * rng.choice((1, -1))
        den = rng.randint(1, max_den)
        q = Fraction(num, den)
        if abs(q.numerator) >= 2:
            return q


def random_link(rng: random.Random, min_p: int = 1, max_p: int = 5) -> MontesinosLink:
    p = rng.randint(min_p, max_p)
    tangles = tuple(random_fraction(rng) for _ in range(p))
    e = rng.randint(-6, 6)
    return MontesinosLink(e, tangles)


def random_link_interesting(rng: random.Random, min_p: int = 3, max_p: int = 5) -> MontesinosLink:
    """Half the time, force epsilon into the band where the boundary rules live."""
    link = random_link(rng, min_p, max_p)
    if rng.random() < 0.5:
        from qamont import epsilon

        target = rng.choice([-1, 1 - link.p, rng.randint(2 - link.p, -1)])
        shift = target - epsilon(link)
        link = MontesinosLink(link.e + shift, link.tangles)
    return link


@pytest.fixture(scope="session")
def census12():
    """Classified census: canonical reduced links, p=3, numerators <= 12,
    epsilon in [-3, 0].  Shared by the rule-disjointness and certificate
    acceptance criteria."""
    results = []
    for link in enumerate_reduced(3, 12):
        results.append((link, classify(link)))
    return results
