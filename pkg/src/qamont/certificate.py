"""Constructive quasi-alternating certificates.

A certificate makes a QA verdict checkable without trusting the classifier.
Its preamble is a list of recomputable moves (reduction, flypes,
reflection) taking the target either to an alternating reduced form (a
leaf) or to ``M(0; r1, ..., rn, -s)`` with ``s > min(ri)``.  In the second
case the link is rebuilt one rational tangle at a time: each step inserts a
single crossing just before the ``-s`` tangle, checks the determinant
recursion

    det(L) = det(L0) + det(Linf),     both summands nonzero,

where L0 is the connect-sum resolution with determinant num(s) * prod
num(ri), and then extends the crossing to the next tangle.  Extending a
quasi-alternating crossing to any rational tangle preserves the property,
so the extension is recorded as a single step rather than unrolled
crossing by crossing.

The tangle below ``s`` joins first so the hypothesis ``s > min`` holds at
every stage; the remaining tangles follow in their original order.
Certificates serialize to a tab-separated text record that a third party
can parse and re-verify with ``verify_certificate``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .classify import Rule, Status, classify
from .montesinos import (
    DiagramClass,
    MontesinosLink,
    determinant,
    diagram_class,
    flype,
    parameter_determinant,
    reduce,
    reflect,
)
from .notation import LinkExpression, format_link, parse_link, print_link, to_link

KIND_ALTERNATING = "alternating-leaf"
KIND_CHAIN = "inductive-chain"

MOVE_REDUCE = "reduce"
MOVE_REFLECT = "reflect"
MOVE_FLYPE = "flype"


@dataclass(frozen=True)
class PreambleStep:
    move: str
    result: MontesinosLink
    index: int | None = None  # 1-based tangle index, flype moves only
    sign: str | None = None


@dataclass(frozen=True)
class ChainStep:
    """One induction step: the crossing diagram M(0; r1..rk, 1, -s), its
    three determinants, and the tangle the crossing is extended to."""

    included: tuple[Fraction, ...]
    s: Fraction
    det_link: int
    det_zero: int
    det_infinity: int
    extension: Fraction


@dataclass(frozen=True)
class Certificate:
    target: MontesinosLink
    preamble: tuple[PreambleStep, ...]
    kind: str
    leaf: MontesinosLink | None = None
    base: tuple[Fraction, Fraction] | None = None  # (r_min, -s)
    steps: tuple[ChainStep, ...] = ()


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    failure: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _fail(reason: str) -> VerificationResult:
    return VerificationResult(False, reason)


def _chain_determinants(included, s: Fraction):
    params = tuple(included) + (Fraction(1), -s)
    det_link = parameter_determinant(0, params)
    det_zero = abs(s.numerator) * prod(abs(r.numerator) for r in included)
    det_infinity = parameter_determinant(0, tuple(included) + (-s,))
    return det_link, det_zero, det_infinity


def build_certificate(link: MontesinosLink, verdict=None) -> Certificate:
    """Certificate for any link the classifier marks quasi-alternating.

    ``verdict`` may pass in an existing classification of ``link`` to avoid
    recomputing it.
    """
    if verdict is None:
        verdict = classify(link)
    if verdict.status is not Status.QA:
        raise ValueError("not applicable: classification is %s" % verdict.status.value)

    preamble: list[PreambleStep] = []
    current = link
    reduced = reduce(link)
    if reduced != current:
        preamble.append(PreambleStep(MOVE_REDUCE, reduced))
        current = reduced

    rule = verdict.rule
    if rule in (Rule.QA_RATIONAL_NONZERO_DET, Rule.QA_EPSILON_HIGH):
        return Certificate(link, tuple(preamble), KIND_ALTERNATING, leaf=current)

    if rule is Rule.QA_EPSILON_LOW:
        # a positive flype on every tangle yields the all-negative
        # alternating presentation
        for i in range(1, current.p + 1):
            current = flype(current, i, "positive")
            preamble.append(PreambleStep(MOVE_FLYPE, current, i, "positive"))
        return Certificate(link, tuple(preamble), KIND_ALTERNATING, leaf=current)

    if rule is Rule.QA_FLYPE_WITNESS_LOW:
        # work on the reflection, which lands in the witness-high regime
        current = reflect(current)
        preamble.append(PreambleStep(MOVE_REFLECT, current))
        for i in range(1, current.p + 1):
            current = flype(current, i, "negative")
            preamble.append(PreambleStep(MOVE_FLYPE, current, i, "negative"))
        pivot = verdict.witness.j
    else:
        pivot = verdict.witness.i

    current = flype(current, pivot, "positive")
    preamble.append(PreambleStep(MOVE_FLYPE, current, pivot, "positive"))
    assert current.e == 0

    w = pivot - 1
    s = -current.tangles[w]
    rs = current.tangles[w + 1 :] + current.tangles[:w]
    m_star = rs.index(min(rs))
    order = (rs[m_star],) + rs[:m_star] + rs[m_star + 1 :]
    assert s > order[0]

    base = (order[0], -s)
    steps = []
    included = [order[0]]
    for extension in order[1:]:
        det_link, det_zero, det_infinity = _chain_determinants(included, s)
        if det_link != det_zero + det_infinity or det_zero == 0 or det_infinity == 0:
            raise RuntimeError(
                "determinant recursion failed while building a certificate"
            )
        steps.append(
            ChainStep(tuple(included), s, det_link, det_zero, det_infinity, extension)
        )
        included.append(extension)
    return Certificate(
        link, tuple(preamble), KIND_CHAIN, base=base, steps=tuple(steps)
    )


def verify_certificate(cert: Certificate) -> VerificationResult:
    """Recompute everything from scratch; first failure wins."""
    current = cert.target
    for step in cert.preamble:
        try:
            if step.move == MOVE_REDUCE:
                expected = reduce(current)
            elif step.move == MOVE_REFLECT:
                expected = reflect(current)
            elif step.move == MOVE_FLYPE:
                expected = flype(current, step.index, step.sign)
            else:
                return _fail("unknown preamble move %r" % step.move)
        except ValueError as exc:
            return _fail("illegal preamble move: %s" % exc)
        if expected != step.result:
            return _fail("preamble step does not match the recomputed move")
        current = step.result

    if cert.kind == KIND_ALTERNATING:
        if cert.leaf != current:
            return _fail("leaf differs from the preamble endpoint")
        if current.p >= 3 and diagram_class(current) is not DiagramClass.ALTERNATING:
            return _fail("not alternating")
        if determinant(current) == 0:
            return _fail("leaf determinant is zero")
        return VerificationResult(True)

    if cert.kind != KIND_CHAIN:
        return _fail("unknown certificate kind %r" % cert.kind)
    if cert.base is None or len(cert.base) != 2:
        return _fail("chain certificate without a base")
    if current.e != 0:
        return _fail("chain endpoint must carry no twist parameter")
    negatives = [t for t in current.tangles if t < 0]
    if len(negatives) != 1:
        return _fail("chain endpoint needs exactly one negative tangle")
    s = -negatives[0]
    targets = sorted(t for t in current.tangles if t > 0)

    r0, minus_s = cert.base
    if minus_s != -s:
        return _fail("base does not use the negative tangle of the endpoint")
    if r0 not in targets:
        return _fail("base tangle is not among the endpoint tangles")
    if not s > r0:
        return _fail("base violates the hypothesis s > r")
    if parameter_determinant(0, cert.base) == 0:
        return _fail("base determinant is zero")

    included = [r0]
    for step in cert.steps:
        if step.s != s or tuple(step.included) != tuple(included):
            return _fail("chain step does not continue the induction")
        if step.det_zero + step.det_infinity != step.det_link:
            return _fail("additivity violated: %d + %d != %d"
                         % (step.det_zero, step.det_infinity, step.det_link))
        if step.det_zero == 0 or step.det_infinity == 0:
            return _fail("a resolution determinant vanishes")
        recomputed = _chain_determinants(included, s)
        if recomputed != (step.det_link, step.det_zero, step.det_infinity):
            return _fail("recorded determinants do not match recomputation")
        if not s > min(included):
            return _fail("induction hypothesis s > min fails")
        included.append(step.extension)
    if sorted(included) != targets:
        return _fail("chain does not rebuild the endpoint tangles")
    return VerificationResult(True)


def _params_expression(params) -> str:
    return print_link(LinkExpression("M", 0, tuple(params)))


def to_text(cert: Certificate) -> str:
    """Tab-separated, self-contained record; one step per line.  The writer
    never appends a verification trailer: checking is the reader's job."""
    lines = ["target\t%s" % format_link(cert.target)]
    for step in cert.preamble:
        if step.move == MOVE_FLYPE:
            lines.append(
                "preamble\tflype\t%s\t%d\t%s"
                % (step.sign, step.index, format_link(step.result))
            )
        else:
            lines.append("preamble\t%s\t%s" % (step.move, format_link(step.result)))
    lines.append("kind\t%s" % cert.kind)
    if cert.kind == KIND_ALTERNATING:
        lines.append("leaf\t%s" % format_link(cert.leaf))
    else:
        lines.append("base\t%s" % _params_expression(cert.base))
        for st in cert.steps:
            params = st.included + (Fraction(1), -st.s)
            lines.append(
                "step\t%s\tdet\t%d\tdet0\t%d\tdetinf\t%d\textend\t%s"
                % (
                    _params_expression(params),
                    st.det_link,
                    st.det_zero,
                    st.det_infinity,
                    st.extension,
                )
            )
    return "\n".join(lines) + "\n"


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def from_text(text: str) -> Certificate:
    """Parse a serialized certificate back into a value ``verify_certificate``
    can check."""
    target = None
    preamble: list[PreambleStep] = []
    kind = None
    leaf = None
    base = None
    steps: list[ChainStep] = []
    for raw in text.splitlines():
        line = raw.rstrip("\n")
        if not line.strip():
            continue
        fields = line.split("\t")
        tag = fields[0]
        if tag == "target":
            target = to_link(parse_link(fields[1]))
        elif tag == "preamble":
            move = fields[1]
            if move == MOVE_FLYPE:
                sign, index, expr = fields[2], int(fields[3]), fields[4]
                preamble.append(
                    PreambleStep(MOVE_FLYPE, to_link(parse_link(expr)), index, sign)
                )
            else:
                preamble.append(PreambleStep(move, to_link(parse_link(fields[2]))))
        elif tag == "kind":
            kind = fields[1]
        elif tag == "leaf":
            leaf = to_link(parse_link(fields[1]))
        elif tag == "base":
            expr = parse_link(fields[1])
            if expr.kind != "M" or expr.e != 0 or len(expr.params) != 2:
                raise ValueError("malformed certificate base")
            base = (expr.params[0], expr.params[1])
        elif tag == "step":
            expr = parse_link(fields[1])
            if (
                expr.kind != "M"
                or expr.e != 0
                or len(expr.params) < 3
                or expr.params[-2] != 1
                or expr.params[-1] >= 0
            ):
                raise ValueError("malformed certificate step")
            labels = dict(zip(fields[2::2], fields[3::2]))
            steps.append(
                ChainStep(
                    included=expr.params[:-2],
                    s=-expr.params[-1],
                    det_link=int(labels["det"]),
                    det_zero=int(labels["det0"]),
                    det_infinity=int(labels["detinf"]),
                    extension=_parse_fraction(labels["extend"]),
                )
            )
        else:
            raise ValueError("unknown certificate line %r" % tag)
    if target is None or kind is None:
        raise ValueError("incomplete certificate")
    return Certificate(
        target, tuple(preamble), kind, leaf=leaf, base=base, steps=tuple(steps)
    )
