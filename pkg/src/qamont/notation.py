"""Parsing and printing of link expressions.

Two textual forms are accepted, whitespace-insensitively:

    M(e; q1, q2, ...)    Montesinos form, parameters are nonzero fractions
    P(e; n1, n2, ...)    pretzel form, parameters are nonzero integers

Each parameter is one of

    a single digit with optional sign        -4        (an integer)
    a fraction                               31/7
    a bare Conway tangle word                324, -2-4-3   (one digit per
                                             tassel; a minus sign binds to
                                             the digit that follows it)
    a bracketed word for multi-digit tassels w:[3,2,4]

Because bare digit strings are read one digit per tassel, integer tangles
of absolute value >= 10 must be written with an explicit denominator
("11/1") or as a bracketed word ("w:[11]").

Note on conventions: some of the literature reverses the sign of e in the
Montesinos form.  Data using the opposite convention must be negated on
import; nothing here tries to autodetect it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import montesinos
from .rational import cf_eval, cf_expand, normalize_fraction

_INT = re.compile(r"-?\d+")
_WORD = re.compile(r"(?:-?\d)+")
_WORD_LETTERS = re.compile(r"-?\d")

STYLE_FRACTIONS = "fractions"
STYLE_WORDS = "words"


class ParseError(ValueError):
    """Syntax or value error in a link expression, with a 0-based position."""

    def __init__(self, message: str, pos: int):
        super().__init__("position %d: %s" % (pos, message))
        self.pos = pos
        self.message = message


@dataclass(frozen=True)
class LinkExpression:
    """Parsed surface form; ``kind`` is "M" or "P".

    Montesinos parameters are nonzero ``Fraction`` values (including +-1,
    which the link constructor later absorbs); pretzel parameters are
    nonzero ints.
    """

    kind: str
    e: int
    params: tuple

    def __post_init__(self):
        if self.kind not in ("M", "P"):
            raise ValueError("kind must be 'M' or 'P'")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise ParseError("expected '%s'" % ch, self.pos)
        self.pos += 1

    def match_re(self, pattern: re.Pattern) -> str | None:
        self.skip_ws()
        m = pattern.match(self.text, self.pos)
        if m is None:
            return None
        self.pos = m.end()
        return m.group(0)

    def integer(self) -> int:
        tok = self.match_re(_INT)
        if tok is None:
            raise ParseError("expected an integer", self.pos)
        return int(tok)


def _word_value(letters, pos: int) -> Fraction:
    terms = tuple(reversed(letters))
    try:
        return cf_eval(terms)
    except ValueError as exc:
        raise ParseError("invalid tangle word: %s" % exc, pos) from None


def _parse_param(sc: _Scanner) -> Fraction:
    sc.skip_ws()
    start = sc.pos
    if sc.peek() == "w":
        sc.pos += 1
        sc.expect(":")
        sc.expect("[")
        letters = [sc.integer()]
        while sc.peek() == ",":
            sc.expect(",")
            letters.append(sc.integer())
        sc.expect("]")
        value = _word_value(letters, start)
    else:
        tok = sc.match_re(_WORD)
        if tok is None:
            raise ParseError("expected a tangle parameter", start)
        if sc.peek() == "/":
            sc.expect("/")
            den_tok = sc.match_re(_INT)
            if den_tok is None:
                raise ParseError("expected a denominator", sc.pos)
            if not _INT.fullmatch(tok):
                raise ParseError("malformed numerator", start)
            try:
                value = normalize_fraction(int(tok), int(den_tok))
            except ValueError as exc:
                raise ParseError(str(exc), start) from None
        else:
            letters = [int(g) for g in _WORD_LETTERS.findall(tok)]
            if len(letters) == 1:
                value = Fraction(letters[0])
            else:
                value = _word_value(letters, start)
    if value == 0:
        raise ParseError("elementary tangle not allowed", start)
    return value


def parse_link(text: str) -> LinkExpression:
    """Parse a link expression; raises ParseError with a position."""
    sc = _Scanner(text)
    kind = sc.peek()
    if kind not in ("M", "P"):
        raise ParseError("expected 'M' or 'P'", sc.pos)
    sc.pos += 1
    sc.expect("(")
    e = sc.integer()
    sc.expect(";")
    params = [_parse_param(sc)]
    while sc.peek() == ",":
        sc.expect(",")
        params.append(_parse_param(sc))
    sc.expect(")")
    sc.skip_ws()
    if sc.pos != len(sc.text):
        raise ParseError("trailing input", sc.pos)
    if kind == "P":
        ints = []
        for q in params:
            if q.denominator != 1:
                raise ParseError("pretzel parameters must be integers", 0)
            ints.append(q.numerator)
        return LinkExpression("P", e, tuple(ints))
    return LinkExpression("M", e, tuple(params))


def _fraction_str(q: Fraction) -> str:
    if q.denominator == 1:
        # multi-digit integers would re-parse as tangle words, so keep /1
        return str(q.numerator) if abs(q.numerator) <= 9 else "%d/1" % q.numerator
    return "%d/%d" % (q.numerator, q.denominator)


def _word_str(q: Fraction) -> str:
    if abs(q) == 1:
        return str(q.numerator)  # no expansion exists; a bare letter suffices
    letters = tuple(reversed(cf_expand(q)))
    if all(abs(a) <= 9 for a in letters):
        return "".join(str(a) for a in letters)
    return "w:[%s]" % ",".join(str(a) for a in letters)


def print_link(expr: LinkExpression, style: str = STYLE_FRACTIONS) -> str:
    """Render an expression; round-trips through parse_link in both styles."""
    if style not in (STYLE_FRACTIONS, STYLE_WORDS):
        raise ValueError("unknown style %r" % style)
    if expr.kind == "P":
        body = ", ".join(_fraction_str(Fraction(n)) for n in expr.params)
    elif style == STYLE_FRACTIONS:
        body = ", ".join(_fraction_str(q) for q in expr.params)
    else:
        body = ", ".join(_word_str(q) for q in expr.params)
    return "%s(%d; %s)" % (expr.kind, expr.e, body)


def pretzel_to_montesinos(expr: LinkExpression) -> montesinos.MontesinosLink:
    """Interpret integer tassels as integral tangles, identically on
    parameters; +-1 tassels get absorbed into e by the constructor."""
    if expr.kind != "P":
        raise ValueError("expected a pretzel expression")
    return montesinos.normalize_input(expr.e, (Fraction(n) for n in expr.params))


def to_link(expr: LinkExpression) -> montesinos.MontesinosLink:
    """Turn either expression form into a normalized MontesinosLink."""
    if expr.kind == "P":
        return pretzel_to_montesinos(expr)
    return montesinos.normalize_input(expr.e, expr.params)


def link_expression(link: montesinos.MontesinosLink) -> LinkExpression:
    return LinkExpression("M", link.e, tuple(link.tangles))


def format_link(link: montesinos.MontesinosLink, style: str = STYLE_FRACTIONS) -> str:
    """Canonical textual form of a link value, e.g. ``M(-1; 2, 7, 4/3)``."""
    return print_link(link_expression(link), style)
