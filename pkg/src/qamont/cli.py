"""Command-line front end.

Commands: classify, reduce, det, equal, enumerate, certificate, diagram.
Link expressions come from arguments or, for classify, one per line on
stdin.  Exit codes: 0 success, 1 operational error (bad bounds, failed
verification, oracle limit), 2 parse error anywhere in the input, 3
internal consistency failure (a QA/NQA rule collision or an oracle
mismatch, neither of which should ever occur).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from . import certificate as cert_mod
from .classify import (
    FlypeWitness,
    FoliationWitness,
    RuleCollisionError,
    Status,
    classify,
)
from .diagram import (
    DEFAULT_ORACLE_BOUND,
    OracleLimitError,
    det_oracle,
    pd_text,
    standard_diagram,
)
from .montesinos import MontesinosLink, determinant, epsilon, equivalent, reduce
from .notation import ParseError, format_link, parse_link, to_link

ENUMERATION_CAP = 2_000_000  # refuse parameter grids larger than this

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARSE = 2
EXIT_INCONSISTENT = 3


@dataclass(frozen=True)
class Report:
    """JSON-ready classification record for one input expression."""

    input: str
    reduced: str
    epsilon: int
    p: int
    determinant: int
    status: str
    rule: str
    witness: dict | None = None
    notes: tuple[str, ...] = ()
    certificate: str | None = None
    diagram: str | None = None


def report_to_dict(report: Report) -> dict:
    return {
        "input": report.input,
        "reduced": report.reduced,
        "epsilon": report.epsilon,
        "p": report.p,
        "determinant": report.determinant,
        "status": report.status,
        "rule": report.rule,
        "witness": report.witness,
        "notes": list(report.notes),
        "certificate": report.certificate,
        "diagram": report.diagram,
    }


def report_from_dict(data: dict) -> Report:
    return Report(
        input=data["input"],
        reduced=data["reduced"],
        epsilon=data["epsilon"],
        p=data["p"],
        determinant=data["determinant"],
        status=data["status"],
        rule=data["rule"],
        witness=data["witness"],
        notes=tuple(data["notes"]),
        certificate=data.get("certificate"),
        diagram=data.get("diagram"),
    )


def _witness_dict(witness) -> dict | None:
    if witness is None:
        return None
    if isinstance(witness, FlypeWitness):
        return {"i": witness.i, "j": witness.j}
    if isinstance(witness, FoliationWitness):
        return {"m": witness.m, "a": witness.a, "sigma": list(witness.sigma)}
    return {"citation": str(witness)}


def _witness_text(witness: dict | None) -> str:
    if witness is None:
        return ""
    if "i" in witness:
        return " witness=(i=%d,j=%d)" % (witness["i"], witness["j"])
    if "m" in witness:
        return " witness=(m=%d,a=%d,sigma=%s)" % (
            witness["m"],
            witness["a"],
            tuple(witness["sigma"]),
        )
    return " witness=citation"


def make_report(text: str, link: MontesinosLink, use_external: bool) -> Report:
    verdict = classify(link, use_external=use_external)
    return Report(
        input=text,
        reduced=format_link(reduce(link)),
        epsilon=epsilon(link),
        p=link.p,
        determinant=determinant(link),
        status=verdict.status.value,
        rule=verdict.rule.value,
        witness=_witness_dict(verdict.witness),
        notes=verdict.notes,
    )


def _human_line(report: Report) -> str:
    line = "%s => %s[%s] epsilon=%d p=%d det=%d reduced=%s%s" % (
        report.input,
        report.status,
        report.rule,
        report.epsilon,
        report.p,
        report.determinant,
        report.reduced,
        _witness_text(report.witness),
    )
    if report.notes:
        line += " notes=%s" % "; ".join(report.notes)
    return line


def _emit_report(report: Report, args, out):
    if args.json:
        out.write(json.dumps(report_to_dict(report)) + "\n")
    else:
        out.write(_human_line(report) + "\n")


def _oracle_check(link: MontesinosLink, args) -> int:
    d = standard_diagram(link)
    oracle = det_oracle(d, max_crossings=args.max_crossings)
    if oracle != determinant(link):
        print(
            "internal consistency failure: oracle determinant %d != %d"
            % (oracle, determinant(link)),
            file=sys.stderr,
        )
        return EXIT_INCONSISTENT
    return EXIT_OK


def _cmd_classify(args, out) -> int:
    texts = list(args.expressions)
    batch = not texts
    if batch:
        texts = [line.strip() for line in sys.stdin if line.strip()]
    status = EXIT_OK
    for lineno, text in enumerate(texts, start=1):
        try:
            link = to_link(parse_link(text))
        except ParseError as exc:
            print("line %d: parse error: %s" % (lineno, exc), file=sys.stderr)
            status = EXIT_PARSE
            continue
        except ValueError as exc:
            print("line %d: %s" % (lineno, exc), file=sys.stderr)
            status = EXIT_PARSE
            continue
        report = make_report(text, link, args.external)
        if args.oracle:
            rc = _oracle_check(link, args)
            if rc:
                return rc
        _emit_report(report, args, out)
    return status


def _parse_single(text: str) -> MontesinosLink:
    return to_link(parse_link(text))


def _cmd_reduce(args, out) -> int:
    out.write(format_link(reduce(_parse_single(args.expression))) + "\n")
    return EXIT_OK


def _cmd_det(args, out) -> int:
    link = _parse_single(args.expression)
    if args.oracle:
        rc = _oracle_check(link, args)
        if rc:
            return rc
    out.write("%d\n" % determinant(link))
    return EXIT_OK


def _cmd_equal(args, out) -> int:
    first = _parse_single(args.first)
    second = _parse_single(args.second)
    out.write("true\n" if equivalent(first, second) else "false\n")
    return EXIT_OK


def _cmd_diagram(args, out) -> int:
    link = _parse_single(args.expression)
    d = standard_diagram(link)
    out.write(pd_text(d) + "\n")
    if args.oracle:
        out.write("det %d\n" % det_oracle(d, max_crossings=args.max_crossings))
    return EXIT_OK


def _cmd_certificate(args, out) -> int:
    if args.verify:
        with open(args.verify, encoding="utf-8") as fh:
            cert = cert_mod.from_text(fh.read())
        result = cert_mod.verify_certificate(cert)
        if result:
            out.write("certificate OK\n")
            return EXIT_OK
        out.write("certificate INVALID: %s\n" % result.failure)
        return EXIT_ERROR
    cert = cert_mod.build_certificate(_parse_single(args.expression))
    out.write(cert_mod.to_text(cert))
    return EXIT_OK


def _reduced_fractions(max_numerator: int):
    pool = []
    for num in range(2, max_numerator + 1):
        for den in range(1, num):
            if gcd(num, den) == 1:
                pool.append(Fraction(num, den))
    return pool


def enumerate_reduced(p: int, max_numerator: int, eps_filter: int | None = None):
    """Canonical reduced links M(eps; t1..tp), numerators <= max_numerator.

    One representative per dihedral (rotation/reversal) class of the tangle
    tuple.  Without an epsilon filter, eps ranges over [-p, 0], which covers
    every classification regime on both sides.
    """
    if p < 3:
        raise ValueError("enumeration needs p >= 3")
    if max_numerator < 2:
        raise ValueError("max numerator must be at least 2")
    pool = _reduced_fractions(max_numerator)
    if len(pool) ** p > ENUMERATION_CAP:
        raise ValueError(
            "enumeration bound too large: %d^%d parameter tuples exceeds the cap %d"
            % (len(pool), p, ENUMERATION_CAP)
        )
    eps_values = [eps_filter] if eps_filter is not None else list(range(-p, 1))
    for tangles in product(pool, repeat=p):
        rotations = [tangles[r:] + tangles[:r] for r in range(p)]
        rev = tangles[::-1]
        rotations += [rev[r:] + rev[:r] for r in range(p)]
        if tangles != min(rotations):
            continue
        for eps in eps_values:
            yield MontesinosLink(eps, tangles)


def _cmd_enumerate(args, out) -> int:
    counts: dict[str, int] = {}
    undetermined: list[str] = []
    writer = None
    if args.csv:
        writer = csv.writer(out)
        writer.writerow(
            [
                "input",
                "reduced",
                "epsilon",
                "p",
                "determinant",
                "status",
                "rule",
                "witness",
                "notes",
            ]
        )
    total = 0
    for link in enumerate_reduced(args.p, args.max_numerator, args.epsilon):
        text = format_link(link)
        report = make_report(text, link, args.external)
        total += 1
        counts[report.rule] = counts.get(report.rule, 0) + 1
        if report.status == Status.UNDETERMINED.value:
            undetermined.append(text)
        if args.csv:
            writer.writerow(
                [
                    report.input,
                    report.reduced,
                    report.epsilon,
                    report.p,
                    report.determinant,
                    report.status,
                    report.rule,
                    json.dumps(report.witness),
                    "; ".join(report.notes),
                ]
            )
        elif args.json:
            out.write(json.dumps(report_to_dict(report)) + "\n")
    summary = sys.stderr if (args.csv or args.json) else out
    summary.write("enumerated %d canonical links\n" % total)
    for rule in sorted(counts):
        summary.write("  %s: %d\n" % (rule, counts[rule]))
    summary.write("undetermined: %d\n" % len(undetermined))
    for text in undetermined:
        summary.write("  %s\n" % text)
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--json", action="store_true", help="one JSON object per line")
    parser.add_argument(
        "--external",
        action="store_true",
        help="also apply externally proved rules (verdicts carry citations)",
    )
    parser.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check determinants against the diagram oracle",
    )
    parser.add_argument(
        "--max-crossings",
        type=int,
        default=DEFAULT_ORACLE_BOUND,
        help="crossing bound for the diagram oracle (default %(default)s)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qamont",
        description="Montesinos link invariants and quasi-alternating classification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="classify links (args or stdin)")
    p_classify.add_argument("expressions", nargs="*")
    _add_common(p_classify)
    p_classify.set_defaults(func=_cmd_classify)

    p_reduce = sub.add_parser("reduce", help="print the reduced form")
    p_reduce.add_argument("expression")
    _add_common(p_reduce)
    p_reduce.set_defaults(func=_cmd_reduce)

    p_det = sub.add_parser("det", help="print the determinant")
    p_det.add_argument("expression")
    _add_common(p_det)
    p_det.set_defaults(func=_cmd_det)

    p_equal = sub.add_parser("equal", help="decide equivalence of two links")
    p_equal.add_argument("first")
    p_equal.add_argument("second")
    _add_common(p_equal)
    p_equal.set_defaults(func=_cmd_equal)

    p_enum = sub.add_parser("enumerate", help="classify a census of reduced links")
    p_enum.add_argument("--p", type=int, required=True, help="number of tangles")
    p_enum.add_argument("--max-numerator", type=int, required=True)
    p_enum.add_argument(
        "--epsilon",
        type=int,
        default=None,
        help="fix epsilon (default: sweep -p..0)",
    )
    p_enum.add_argument("--csv", action="store_true", help="stream CSV rows")
    _add_common(p_enum)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_cert = sub.add_parser(
        "certificate", help="emit a quasi-alternating certificate, or verify one"
    )
    p_cert.add_argument("expression", nargs="?")
    p_cert.add_argument("--verify", metavar="FILE", help="verify a serialized certificate")
    _add_common(p_cert)
    p_cert.set_defaults(func=_cmd_certificate)

    p_diag = sub.add_parser("diagram", help="print the standard PD code")
    p_diag.add_argument("expression")
    _add_common(p_diag)
    p_diag.set_defaults(func=_cmd_diagram)

    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "certificate" and not args.verify and not args.expression:
        parser.error("certificate needs an expression or --verify FILE")
    try:
        return args.func(args, out)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except RuleCollisionError as exc:
        print("internal consistency failure: %s" % exc, file=sys.stderr)
        return EXIT_INCONSISTENT
    except OracleLimitError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_ERROR


def run():
    raise SystemExit(main())
