import random
from fractions import Fraction

import pytest

from qamont.classify import (
    FlypeWitness,
    FoliationWitness,
    Rule,
    Status,
    Verdict,
    classify,
    foliation_search,
)
from qamont.montesinos import MontesinosLink, flype, normalize_input, reduce, reflect
from qamont.notation import parse_link, to_link

from conftest import random_link_interesting

F = Fraction


def status_of(text, external=False):
    return classify(to_link(parse_link(text)), use_external=external)


def test_qa_epsilon_high():
    v = status_of("M(3; 31/7, 5/16, -29/9)")
    assert v.status is Status.QA and v.rule is Rule.QA_EPSILON_HIGH


def test_qa_flype_witness():
    v = status_of("M(-1; 3/2, 4/3, 7/4)")
    assert v.rule is Rule.QA_FLYPE_WITNESS_HIGH
    assert v.witness == FlypeWitness(1, 2)


def test_qa_low_rules_mirror_high():
    link = to_link(parse_link("M(-1; 3/2, 4/3, 7/4)"))
    mirrored = reflect(link)
    v = classify(mirrored)
    assert v.rule is Rule.QA_FLYPE_WITNESS_LOW
    assert v.status is Status.QA
    low = reflect(to_link(parse_link("M(3; 31/7, 5/16, -29/9)")))
    assert classify(low).rule is Rule.QA_EPSILON_LOW


def test_nqa_all_above_two():
    v = status_of("M(-1; 3, 3, 3)")
    assert v.status is Status.NQA and v.rule is Rule.NQA_ALL_ABOVE_TWO
    # the pretzel spelling of the same link
    assert status_of("P(0; 3,3,3,-1)").rule is Rule.NQA_ALL_ABOVE_TWO


def test_nqa_all_above_two_reflected():
    link = reflect(to_link(parse_link("M(-1; 3, 3, 3)")))
    v = classify(link)
    assert v.rule is Rule.NQA_ALL_ABOVE_TWO_REFLECTED


def test_nqa_epsilon_strip():
    v = status_of("M(-2; 2, 2, 2, 2)")
    assert v.status is Status.NQA and v.rule is Rule.NQA_EPSILON_STRIP


def test_nqa_foliation():
    v = status_of("M(-1; 2, 4, 4)")
    assert v.status is Status.NQA and v.rule is Rule.NQA_FOLIATION
    assert v.witness.m == 3 and v.witness.a == 2 and v.witness.sigma == (1, 2, 3)
    # same link entered as a pretzel: same status, a rotated witness
    assert status_of("P(0; 4, 4, -2)").rule is Rule.NQA_FOLIATION


def test_nqa_det_zero_rational():
    v = status_of("M(0; 2, -2)")
    assert v.status is Status.NQA and v.rule is Rule.NQA_DET_ZERO


def test_qa_rational():
    v = status_of("M(0; 2, 3)")
    assert v.status is Status.QA and v.rule is Rule.QA_RATIONAL_NONZERO_DET
    assert status_of("M(0; 5/2)").rule is Rule.QA_RATIONAL_NONZERO_DET


def test_undetermined_families():
    assert status_of("M(-1; 5/2, 3, 5/3)").status is Status.UNDETERMINED
    assert status_of("P(0; 3, 3, 3, -2)").status is Status.UNDETERMINED
    assert status_of("M(0; 5/2, 3, -5/2)").status is Status.UNDETERMINED


def test_external_rules():
    assert status_of("P(0; 3, 3, 3, -2)", external=True).rule is Rule.NQA_EXTERNAL_CITED
    v = status_of("M(-1; 5/2, 3, 5/3)", external=True)
    assert v.rule is Rule.NQA_EXTERNAL_CITED
    assert v.notes and "Greene" in v.notes[0]
    # q > min is Greene's QA side; it is already caught by a flype witness
    v = status_of("M(-1; 2, 2, 3/2)", external=True)
    assert v.status is Status.QA
    # pretzel with q = min: external only
    plain = status_of("P(0; 2, 4, 4, -2)")
    cited = status_of("P(0; 2, 4, 4, -2)", external=True)
    assert plain.status is Status.UNDETERMINED
    assert cited.rule is Rule.NQA_EXTERNAL_CITED


def test_foliation_search_examples():
    assert foliation_search([F(5, 2), F(3), F(3)]) == FoliationWitness(2, 1, (1, 2, 3))
    assert foliation_search([F(2), F(4), F(4)]) == FoliationWitness(3, 2, (1, 2, 3))
    assert foliation_search([F(5, 2), F(3), F(5, 3)]) is None


def test_foliation_search_all_above_two_is_2_1():
    # whenever every parameter exceeds 2, the first witness is (m=2, a=1)
    rng = random.Random(11)
    for _ in range(100):
        p = rng.randint(3, 6)
        params = [F(rng.randint(5, 30), rng.choice((1, 2))) for _ in range(p)]
        witness = foliation_search(params)
        assert witness is not None and (witness.m, witness.a) == (2, 1)


def test_foliation_search_preconditions():
    with pytest.raises(ValueError, match="reduced"):
        foliation_search([F(1, 2), F(3), F(3)])
    with pytest.raises(ValueError, match="three"):
        foliation_search([F(3), F(3)])


def test_verdict_consistency_enforced():
    with pytest.raises(ValueError, match="status"):
        Verdict(Status.QA, Rule.NQA_DET_ZERO)


def test_classify_invariance_random():
    rng = random.Random(4)
    for _ in range(200):
        link = random_link_interesting(rng)
        base = classify(link).status
        assert classify(reduce(link)).status is base
        assert classify(reflect(link)).status is base
        i = rng.randint(1, link.p)
        sign = "positive" if link.tangles[i - 1] > 0 else "negative"
        assert classify(flype(link, i, sign)).status is base


def test_reflection_swaps_rule_codes():
    pairs = {
        Rule.QA_EPSILON_HIGH: Rule.QA_EPSILON_LOW,
        Rule.QA_FLYPE_WITNESS_HIGH: Rule.QA_FLYPE_WITNESS_LOW,
        Rule.NQA_ALL_ABOVE_TWO: Rule.NQA_ALL_ABOVE_TWO_REFLECTED,
    }
    for text in ("M(3; 31/7, 5/16, -29/9)", "M(-1; 3/2, 4/3, 7/4)", "M(-1; 3, 3, 3)"):
        link = to_link(parse_link(text))
        rule = classify(link).rule
        assert classify(reflect(link)).rule is pairs[rule]


def test_half_integer_family_undetermined():
    for n in range(2, 11):
        link = normalize_input(
            0, [F(2 * n + 1, 2), F(n + 1), F(-(2 * n + 1), 2)]
        )
        assert classify(link).status is Status.UNDETERMINED
        if n >= 3:  # n = 2 is Greene's 11n50, cited externally
            assert classify(link, use_external=True).status is Status.UNDETERMINED
