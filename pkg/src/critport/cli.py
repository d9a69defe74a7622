"""Command line front end.

Exit status: 0 on success, 1 when the input is well formed but fails a
check, 2 when it cannot be parsed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .angles import InvalidInput, parse_angle
from .document import DocumentError, PortraitDocument, load_document
from .portrait import (
    AddressSystem,
    MarkedPartition,
    PartKind,
    build_fstar,
    build_jstar,
    check_gamma,
    format_set,
    gen_special_arguments,
    parse_family,
    verify_partitions,
)
from .render import RenderSpec, render_svg
from .twist import solve_cycle_twists, solve_external_twist
from .web import build_web, build_web_map, check_levy, pullback_report, serialize_web

EXIT_OK, EXIT_FAIL, EXIT_PARSE = 0, 1, 2


class ParseError(Exception):
    pass


class CheckFailed(Exception):
    pass


def _read_angle_list(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError:
        raw = text.replace(",", " ").split()
    if not isinstance(raw, list) or not all(isinstance(a, str) for a in raw):
        raise ParseError(f"{path}: expected a list of \"p/q\" strings")
    try:
        return frozenset(parse_angle(a) for a in raw)
    except InvalidInput as exc:
        raise ParseError(f"{path}: {exc}") from None


def _load(args) -> PortraitDocument:
    if not args.input:
        raise ParseError("--input is required")
    try:
        return load_document(args.input)
    except DocumentError as exc:
        raise ParseError(f"{args.input}: {exc}") from None


def _system(doc: PortraitDocument) -> AddressSystem:
    try:
        return AddressSystem(doc.portrait())
    except InvalidInput as exc:
        raise CheckFailed(str(exc)) from None


def _gamma(args, doc: PortraitDocument, sys: AddressSystem):
    choice = args.gamma
    if choice is None:
        supplied = doc.gamma_angles()
        choice = "auto" if supplied is None else supplied
    if choice == "auto":
        return gen_special_arguments(sys)
    if choice == "none":
        gamma = frozenset()
    elif isinstance(choice, frozenset):
        gamma = choice
    else:
        gamma = _read_angle_list(choice)
    try:
        return check_gamma(sys, gamma)
    except InvalidInput as exc:
        raise CheckFailed(str(exc)) from None


def _families(args):
    doc = _load(args)
    sys_ = _system(doc)
    gamma = _gamma(args, doc, sys_)
    return doc, sys_, gamma, build_fstar(sys_, gamma), build_jstar(sys_, gamma)


def cmd_validate(args) -> int:
    doc = _load(args)
    sys_ = _system(doc)
    gamma = _gamma(args, doc, sys_)
    result = verify_partitions(build_jstar(sys_, gamma), build_fstar(sys_, gamma))
    if not result:
        a, b = result.witness
        raise CheckFailed(
            f"degree={sys_.degree}; unlinked PASS; right-unlinked PASS; partitions FAIL "
            f"({result.reason}: {format_set(a)} vs {format_set(b)})"
        )
    print(f"degree={sys_.degree}; unlinked PASS; right-unlinked PASS; partitions PASS")
    return EXIT_OK


def cmd_classes(args) -> int:
    _, _, gamma, fstar, jstar = _families(args)
    print(f"Gamma = {format_set(gamma)}")
    print(f"F* = {fstar}")
    print(f"J* = {jstar}")
    return EXIT_OK


def cmd_web(args) -> int:
    _, sys_, _, fstar, jstar = _families(args)
    try:
        w = build_web(fstar, jstar)
        build_web_map(w, sys_)
    except (InvalidInput, RuntimeError) as exc:
        raise CheckFailed(str(exc)) from None
    sys.stdout.write(serialize_web(w))
    return EXIT_OK


def cmd_levy(args) -> int:
    _, sys_, gamma, _, jstar = _families(args)
    candidate = jstar
    if args.partition:
        try:
            text = Path(args.partition).read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"cannot read {args.partition}: {exc.strerror}") from None
        try:
            candidate = MarkedPartition(PartKind.JULIA_STAR, tuple(parse_family(text)))
        except InvalidInput as exc:
            raise ParseError(f"{args.partition}: {exc}") from None
    try:
        report = check_levy(sys_, candidate, gamma)
    except InvalidInput as exc:
        raise CheckFailed(str(exc)) from None
    if report.empty:
        print("no Levy witnesses")
        return EXIT_OK
    for w in report:
        print(f"LEVY WITNESS: {w}")
        print("  cycle: " + " -> ".join(f"({a}, {b})" for a, b in w.cycle))
    return EXIT_FAIL


def _rationals(text: str, what: str) -> list[Fraction]:
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{what}: expected comma-separated p/q values, got {text!r}") from None


def cmd_twist(args) -> int:
    degrees = _rationals(args.degrees, "degrees")
    if any(d.denominator != 1 for d in degrees):
        raise ParseError("degrees must be integers")
    degrees = [int(d) for d in degrees]
    diffs = _rationals(args.differences, "differences")
    try:
        if args.external:
            if len(degrees) != 1 or len(diffs) != 1:
                raise InvalidInput("--external takes one degree and one difference")
            print(f"t = {solve_external_twist(degrees[0], diffs[0])}")
        else:
            print(solve_cycle_twists(degrees, diffs))
    except InvalidInput as exc:
        raise CheckFailed(str(exc)) from None
    return EXIT_OK


def cmd_pullback(args) -> int:
    doc = _load(args)
    sys_ = _system(doc)
    try:
        theta = parse_angle(args.theta)
    except InvalidInput as exc:
        raise ParseError(str(exc)) from None
    if args.n < 0:
        raise ParseError("n must be >= 0")
    rep = pullback_report(sys_, theta, args.n)
    print(f"theta = {rep.theta}; n = {rep.n}")
    print(f"arcs = {rep.arcs}")
    print(f"total length = {rep.length}")
    print(f"largest arc = {rep.largest_arc}")
    return EXIT_OK


def cmd_svg(args) -> int:
    doc, sys_, gamma, _, jstar = _families(args)
    opts = doc.render_options
    labels = opts.labels if args.labels is None else args.labels == "on"
    svg = render_svg(sys_, jstar, gamma, RenderSpec(size=opts.size, labels=labels))
    if args.out:
        try:
            Path(args.out).write_text(svg, encoding="utf-8")
        except OSError as exc:
            raise CheckFailed(f"cannot write {args.out}: {exc.strerror}") from None
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critport", description="Combinatorics of critical portraits under z -> d*z mod 1."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def portrait_cmd(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--input", help="portrait document (JSON)")
        p.add_argument(
            "--gamma",
            default=None,
            help="special arguments: auto, none, or a file of p/q angles "
            "(default: the document's gamma if present, else auto)",
        )
        p.set_defaults(func=func)
        return p

    portrait_cmd("validate", cmd_validate, "check a portrait and the partitions it induces")
    portrait_cmd("classes", cmd_classes, "print Gamma, F* and J*")
    portrait_cmd("web", cmd_web, "print the abstract web")
    p = portrait_cmd("levy", cmd_levy, "look for Levy-cycle witnesses")
    p.add_argument("--partition", help="candidate partition, e.g. {{0},{1/4},{3/4}}")
    p = portrait_cmd("pullback", cmd_pullback, "arcs sharing the first n addresses of theta")
    p.add_argument("theta")
    p.add_argument("n", type=int)
    p = portrait_cmd("svg", cmd_svg, "draw the portrait as SVG")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--labels", choices=("on", "off"), default=None)

    p = sub.add_parser("twist", help="solve the untwisting equations")
    p.add_argument("degrees", help="comma-separated local degrees, e.g. 2,3")
    p.add_argument("differences", help="comma-separated differences, e.g. 1/2,1/3")
    p.add_argument("--external", action="store_true", help="solve t - t/d = difference instead")
    p.set_defaults(func=cmd_twist)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CheckFailed as exc:
        print(str(exc))
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
