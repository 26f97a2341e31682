"""Three-valued quasi-alternating classification.

``classify`` decides QA / NQA / Undetermined from the reduced parameters.
The QA side rests on the epsilon ranges and the flype-witness condition
|t̂i^f| > t̂j (resp. < for the mirror regime); the NQA side on the epsilon
strip with its adequate non-alternating diagram, the all-parameters-above-2
rules, a vanishing determinant, and the horizontal-foliation criterion for
the double branched cover: coprime 0 < a < m and a slot assignment with

    t_sigma(1) > m/a,   t_sigma(2) > m/(m-a),   t_sigma(i) > m  (i >= 3).

The two rule families are provably disjoint; the classifier recomputes both
sides and raises ``RuleCollisionError`` if they ever overlap, which would
mean an implementation bug.

Results that are true but rest on classification theorems proved elsewhere
(Greene's pretzel criterion and his (m^2+1)/m family) are only applied when
``use_external`` is set, and the verdict then carries the citation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .montesinos import MontesinosLink, determinant, reduce
from .rational import flype_transform

GREENE_PRETZEL_CITATION = (
    "Greene, 'Homologically thin, non-quasi-alternating links', Prop. 2.2: "
    "P(0;p1,...,pn,-q) with n>=2, pi>=2, q>=1 is quasi-alternating iff "
    "q > min(pi)"
)
GREENE_FAMILY_CITATION = (
    "Greene, 'Homologically thin, non-quasi-alternating links': "
    "M(-1;(m^2+1)/m, n, (m^2+1)/(m^2-m+1)) is not quasi-alternating "
    "for m, n >= 2"
)


class Status(enum.Enum):
    QA = "QA"
    NQA = "NQA"
    UNDETERMINED = "Undetermined"


class Rule(enum.Enum):
    QA_RATIONAL_NONZERO_DET = "QA_RationalNonzeroDet"
    QA_EPSILON_HIGH = "QA_EpsilonHigh"
    QA_FLYPE_WITNESS_HIGH = "QA_FlypeWitnessHigh"
    QA_EPSILON_LOW = "QA_EpsilonLow"
    QA_FLYPE_WITNESS_LOW = "QA_FlypeWitnessLow"
    NQA_DET_ZERO = "NQA_DetZero"
    NQA_EPSILON_STRIP = "NQA_EpsilonStrip"
    NQA_ALL_ABOVE_TWO = "NQA_AllAboveTwo"
    NQA_ALL_ABOVE_TWO_REFLECTED = "NQA_AllAboveTwoReflected"
    NQA_FOLIATION = "NQA_Foliation"
    NQA_EXTERNAL_CITED = "NQA_ExternalCited"
    UNDETERMINED = "UNDETERMINED"


QA_RULES = frozenset(
    {
        Rule.QA_RATIONAL_NONZERO_DET,
        Rule.QA_EPSILON_HIGH,
        Rule.QA_FLYPE_WITNESS_HIGH,
        Rule.QA_EPSILON_LOW,
        Rule.QA_FLYPE_WITNESS_LOW,
    }
)
NQA_RULES = frozenset(
    {
        Rule.NQA_DET_ZERO,
        Rule.NQA_EPSILON_STRIP,
        Rule.NQA_ALL_ABOVE_TWO,
        Rule.NQA_ALL_ABOVE_TWO_REFLECTED,
        Rule.NQA_FOLIATION,
        Rule.NQA_EXTERNAL_CITED,
    }
)


@dataclass(frozen=True)
class FlypeWitness:
    """1-based tangle indices (i, j) with |t̂i^f| above/below t̂j."""

    i: int
    j: int


@dataclass(frozen=True)
class FoliationWitness:
    """Coprime pair 0 < a < m plus the slot assignment sigma (1-based,
    one-line notation: sigma[k] is the tangle index filling slot k+1)."""

    m: int
    a: int
    sigma: tuple[int, ...]

    def __post_init__(self):
        if not 0 < self.a < self.m or gcd(self.a, self.m) != 1:
            raise ValueError("witness needs coprime 0 < a < m")


@dataclass(frozen=True)
class Verdict:
    status: Status
    rule: Rule
    witness: FlypeWitness | FoliationWitness | str | None = None
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        expected = (
            Status.QA
            if self.rule in QA_RULES
            else Status.NQA
            if self.rule in NQA_RULES
            else Status.UNDETERMINED
        )
        if self.status is not expected:
            raise ValueError("status %s does not match rule %s" % (self.status, self.rule))


class RuleCollisionError(RuntimeError):
    """A QA rule and an NQA rule fired on the same link (internal bug)."""


def foliation_search(params) -> FoliationWitness | None:
    """Exhaustive search for a horizontal-foliation witness.

    ``params`` are the reduced parameters, each > 1, at least three of
    them.  Candidates are scanned by m ascending, then by the slot
    assignment (lexicographically over ordered index pairs), then by a;
    the first hit is returned.  The scan is complete: slot 3 requires some
    parameter above m, so no witness exists once m >= max(params).
    """
    params = tuple(Fraction(t) for t in params)
    if len(params) < 3:
        raise ValueError("foliation criterion needs at least three tangles")
    if any(t <= 1 for t in params):
        raise ValueError("not in reduced form: every parameter must exceed 1")
    n = len(params)
    top = max(params)
    m_bound = -(-top.numerator // top.denominator)  # ceil(max)
    for m in range(2, m_bound + 1):
        for i1 in range(n):
            for i2 in range(n):
                if i1 == i2:
                    continue
                if not all(
                    params[k] > m for k in range(n) if k != i1 and k != i2
                ):
                    continue
                for a in range(1, m):
                    if gcd(a, m) != 1:
                        continue
                    if params[i1] > Fraction(m, a) and params[i2] > Fraction(m, m - a):
                        rest = tuple(
                            k + 1 for k in range(n) if k != i1 and k != i2
                        )
                        return FoliationWitness(m, a, (i1 + 1, i2 + 1) + rest)
    return None


def _qa_case(eps: int, tangles, p: int):
    if eps > -1:
        return Rule.QA_EPSILON_HIGH, None
    if eps < 1 - p:
        return Rule.QA_EPSILON_LOW, None
    if eps == -1:
        rule, cmp_gt = Rule.QA_FLYPE_WITNESS_HIGH, True
    elif eps == 1 - p:
        rule, cmp_gt = Rule.QA_FLYPE_WITNESS_LOW, False
    else:
        return None
    flyped = [abs(flype_transform(t)) for t in tangles]
    for i in range(p):
        for j in range(p):
            if i == j:
                continue
            if (flyped[i] > tangles[j]) if cmp_gt else (flyped[i] < tangles[j]):
                return rule, FlypeWitness(i + 1, j + 1)
    return None


def _nqa_named(eps: int, tangles, p: int):
    if 1 - p < eps < -1:
        return Rule.NQA_EPSILON_STRIP
    if eps == -1 and all(t > 2 for t in tangles):
        return Rule.NQA_ALL_ABOVE_TWO
    if eps == 1 - p and all(abs(flype_transform(t)) > 2 for t in tangles):
        return Rule.NQA_ALL_ABOVE_TWO_REFLECTED
    return None


def _external_citation(eps: int, tangles, p: int) -> str | None:
    if eps == -1:
        params = tuple(tangles)
    elif eps == 1 - p:
        # mirror regime: the reflection reduces to M(-1; |t^f|, ...)
        params = tuple(abs(flype_transform(t)) for t in tangles)
    else:
        return None

    # Greene's pretzel criterion: integer tassels plus at most one q/(q-1)
    # slot (q = 1 when absent); non-quasi-alternating iff q <= min tassel.
    slots = [None] + [
        k
        for k, t in enumerate(params)
        if t.denominator == t.numerator - 1 and t.numerator >= 2
    ]
    for slot in slots:
        others = [t for k, t in enumerate(params) if k != slot]
        if len(others) < 2 or not all(t.denominator == 1 and t >= 2 for t in others):
            continue
        q = 1 if slot is None else params[slot].numerator
        if q <= min(others):
            return GREENE_PRETZEL_CITATION

    # Greene's (m^2+1)/m family, p = 3 only.
    if p == 3:
        for i in range(3):
            for j in range(3):
                if i == j:
                    continue
                k = 3 - i - j
                first, mid, last = params[i], params[k], params[j]
                m = first.denominator
                if m < 2 or first.numerator != m * m + 1:
                    continue
                if mid.denominator != 1 or mid < 2:
                    continue
                if last == Fraction(m * m + 1, m * m - m + 1):
                    return GREENE_FAMILY_CITATION
    return None


def classify(link: MontesinosLink, use_external: bool = False) -> Verdict:
    """Decide quasi-alternating status, with the most specific rule code.

    Rule precedence: rational base case; QA epsilon/witness rules; the
    named NQA rules; the foliation search (run on t̂i for epsilon = -1, on
    |t̂i^f| for epsilon = 1-p); vanishing determinant; externally cited
    rules when enabled; otherwise Undetermined.  A vanishing determinant is
    checked after the named NQA rules, whose diagrammatic and foliation
    arguments cover that degenerate case, but before anything that needs a
    rational homology sphere.
    """
    if link.p <= 2:
        if determinant(link) != 0:
            return Verdict(Status.QA, Rule.QA_RATIONAL_NONZERO_DET)
        return Verdict(Status.NQA, Rule.NQA_DET_ZERO)

    reduced = reduce(link)
    eps, tangles, p = reduced.e, reduced.tangles, reduced.p
    det = determinant(reduced)

    qa = _qa_case(eps, tangles, p)
    nqa_named = _nqa_named(eps, tangles, p)
    # needed for the verdict when nothing else fires, and for the
    # disjointness assertion whenever a QA rule fires
    foliation = None
    if qa is not None or nqa_named is None:
        if eps == -1:
            foliation = foliation_search(tangles)
        elif eps == 1 - p:
            foliation = foliation_search(tuple(abs(flype_transform(t)) for t in tangles))

    if qa is not None and (nqa_named is not None or foliation is not None or det == 0):
        raise RuleCollisionError(
            "QA rule %s collides with an NQA condition on M(%d; %s)"
            % (qa[0].value, link.e, ", ".join(str(t) for t in link.tangles))
        )

    if qa is not None:
        rule, witness = qa
        return Verdict(Status.QA, rule, witness)
    if nqa_named is not None:
        return Verdict(Status.NQA, nqa_named)
    if foliation is not None:
        return Verdict(Status.NQA, Rule.NQA_FOLIATION, foliation)
    if det == 0:
        return Verdict(Status.NQA, Rule.NQA_DET_ZERO)
    if use_external:
        citation = _external_citation(eps, tangles, p)
        if citation is not None:
            return Verdict(
                Status.NQA, Rule.NQA_EXTERNAL_CITED, citation, notes=(citation,)
            )
    return Verdict(Status.UNDETERMINED, Rule.UNDETERMINED)
