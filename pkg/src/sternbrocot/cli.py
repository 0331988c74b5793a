"""Command-line front end.

All numeric output is exact rational text ("p/q", integers bare, "1/0");
SVG files are the only place floats appear.  Runs are deterministic:
identical arguments give byte-identical output.

Exit codes: 0 success, 2 parse error, 3 domain error, 4 internal
invariant violation (a failed theorem clause is an implementation bug).
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import contfrac, diagram, figures
from .contfrac import ContinuedFraction, parse_terms
from .errors import DomainError, InvariantViolation, ParseError
from .lines import LineFamily, line_family
from .links import canonical_fraction, plat_diagram, schubert_equivalent
from .rationals import ExtendedRational

_RANGE_RE = re.compile(r"\A(-?\d+)\.\.(-?\d+)\Z")
_WINDOW_RE = re.compile(r"\A(.+?)\.\.(.+)\Z")


def _parse_range(text: str) -> tuple[int, int]:
    m = _RANGE_RE.match(text)
    if m is None:
        raise ParseError(f"bad range {text!r}, expected LO..HI with integers")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise ParseError(f"empty range {text!r}")
    return lo, hi


def _parse_window(text: str) -> tuple[ExtendedRational, ExtendedRational]:
    m = _WINDOW_RE.match(text)
    if m is None:
        raise ParseError(f"bad window {text!r}, expected LO..HI with rationals")
    return ExtendedRational.parse(m.group(1)), ExtendedRational.parse(m.group(2))


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _family_from_hole(text: str) -> LineFamily:
    terms, hole = parse_terms(text, allow_hole=True)
    assert hole is not None
    # The slot value never enters the family's machinery; fill it with a
    # standard-valid placeholder so a concrete base sequence exists.
    terms[hole] = 2 if hole == len(terms) - 1 else 1
    return line_family(ContinuedFraction(tuple(terms)), hole)


def _hole_text(fam: LineFamily) -> str:
    terms: list[int | None] = list(fam.base.terms)
    terms[fam.slot] = None
    return contfrac.format_terms(terms)


# -- subcommands ---------------------------------------------------------


def _cmd_eval(args) -> int:
    print(contfrac.evaluate(ContinuedFraction.parse(args.sequence)))
    return 0


def _cmd_expand(args) -> int:
    value = ExtendedRational.parse(args.rational)
    print(contfrac.standard_expansion(value))
    return 0


def _cmd_funnel(args) -> int:
    alpha = ExtendedRational.parse(args.rational)
    f = diagram.funnel(alpha)
    report = diagram.verify_funnel_theorem(f.expansion)

    if args.json:
        _print_json(
            {
                "base": str(f.alpha),
                "terms": list(f.expansion.terms),
                "triangles": [[str(v) for v in tri] for tri in f.triangles],
                "indices": {str(v): f.indices[v] for v in sorted(f.indices)},
            }
        )
    elif args.svg:
        a0 = f.expansion.terms[0]
        window = diagram.build_diagram(
            ExtendedRational(a0),
            ExtendedRational(a0 + 1),
            max(args.max_denom, alpha.den),
        )
        svg = figures.render_svg(window, [figures.FunnelOverlay(f)])
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg)
        print(f"wrote {args.svg}")
    else:
        print(f"funnel of {f.alpha} = {f.expansion}")
        print("triangles (top to bottom):")
        for tri in f.triangles:
            print("  " + " ".join(str(v) for v in tri))
        print("left edge:  " + " ".join(str(v) for v in f.left_edge))
        print("right edge: " + " ".join(str(v) for v in f.right_edge))
        print("indices:    " + " ".join(f"{v}:{f.indices[v]}" for v in sorted(f.indices)))

    for clause in report.clauses:
        print(f"clause ({clause.name}): {'pass' if clause.passed else 'FAIL'} [{clause.detail}]",
              file=sys.stderr if args.json or args.svg else sys.stdout)
    if not report.all_passed:
        raise InvariantViolation(f"funnel theorem failed for {f.expansion}")
    return 0


def _coeff_text(coeffs: tuple[int, int]) -> str:
    c1, c0 = coeffs
    return f"{c1}m{'+' if c0 >= 0 else '-'}{abs(c0)}"


def _point_json(pt) -> dict:
    return {"x": str(pt.x), "y": str(pt.y)}


def _cmd_lines(args) -> int:
    fam = _family_from_hole(args.sequence)
    lo, hi = _parse_range(args.range)
    plus, minus = fam.line_pair()
    root = fam.denominator_root()
    rows = [(m, fam.value(m), fam.side(m)) for m in range(lo, hi + 1)]

    if args.json:
        _print_json(
            {
                "gamma": str(fam.anchor_x),
                "P": list(fam.num_coeffs),
                "Q": list(fam.den_coeffs),
                "root": str(root),
                "line_plus": {
                    "anchor": _point_json(plus.anchor),
                    "through": _point_json(plus.through),
                },
                "points": [
                    {"m": m, "alpha": str(val), "side": side.value}
                    for m, val, side in rows
                ],
            }
        )
    elif args.svg:
        a0 = fam.shift
        window = diagram.build_diagram(
            ExtendedRational(a0), ExtendedRational(a0 + 1), args.max_denom
        )
        overlays: list[figures.Overlay] = [
            figures.LineOverlay(plus),
            figures.LineOverlay(minus),
            figures.PointOverlay(tuple(fam.vertex(m) for m in range(lo, hi + 1))),
        ]
        partner = fam.shared_line_partner()
        if partner is not None:
            overlays.append(
                figures.PointOverlay(
                    tuple(partner.vertex(m) for m in range(lo, hi + 1)),
                    color="#d4a017",
                )
            )
        svg = figures.render_svg(window, overlays)
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg)
        print(f"wrote {args.svg}")
    else:
        print(f"family  {_hole_text(fam)}  (slot i={fam.slot})")
        print(f"gamma   {fam.anchor_x}")
        print(f"P(m)    {_coeff_text(fam.num_coeffs)}")
        print(f"Q(m)    {_coeff_text(fam.den_coeffs)}")
        print(f"root    {root}" + ("  (n=1: root at 0)" if fam.degree == 1 else ""))
        print(f"line+   through ({fam.anchor_x}, 0) and {plus.through}, slope {plus.slope}")
        print(f"line-   mirror image, slope {minus.slope}")
        partner = fam.shared_line_partner()
        if partner is not None:
            print(f"partner {_hole_text(partner)} shares the line pair")
        print("   m  alpha           side")
        for m, val, side in rows:
            print(f"{m:>4}  {str(val):<14}  {side.value}")
    return 0


def _cmd_diagram(args) -> int:
    lo, hi = _parse_window(args.window)
    d = diagram.build_diagram(lo, hi, args.max_denom)
    svg = figures.render_svg(d)
    with open(args.svg, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(
        f"diagram [{d.lo}, {d.hi}] max_den={d.max_den}: "
        f"{len(d.vertices)} vertices, {len(d.edges)} edges, "
        f"{len(d.triangles)} triangles -> {args.svg}"
    )
    return 0


def _cmd_link_canon(args) -> int:
    value = ExtendedRational.parse(args.rational)
    canon = canonical_fraction(value)
    plat = plat_diagram(canon.sequence.terms[1:]) if canon.sequence.degree >= 1 else None
    standard = plat.is_standard if plat is not None else False
    if args.json:
        _print_json(
            {
                "input": str(value),
                "canonical": str(canon.fraction),
                "sequence": str(canon.sequence),
                "standard": standard,
            }
        )
    else:
        print(f"{canon.fraction} = {canon.sequence}" + (" (standard plat)" if standard else ""))
        if plat is not None:
            print(plat.text_art())
    return 0


def _cmd_link_eq(args) -> int:
    a = ExtendedRational.parse(args.rational_a)
    b = ExtendedRational.parse(args.rational_b)
    eq = schubert_equivalent(a, b)
    if args.json:
        _print_json({"a": str(a), "b": str(b), "equivalent": eq})
    else:
        print("equivalent" if eq else "not equivalent")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sternbrocot",
        description="Exact continued fractions, Stern-Brocot funnels, "
        "line families, and 2-bridge link fractions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a continued fraction exactly")
    p.add_argument("sequence", help='e.g. "[-1;2,3]"')
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("expand", help="standard expansion of a rational")
    p.add_argument("rational", help='e.g. "2/7"')
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("funnel", help="funnel of a non-integer rational")
    p.add_argument("rational")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true")
    g.add_argument("--svg", metavar="FILE")
    p.add_argument("--max-denom", type=int, default=60,
                   help="diagram density for --svg (default 60)")
    p.set_defaults(func=_cmd_funnel)

    p = sub.add_parser("lines", help="line family of a sequence with one hole")
    p.add_argument("sequence", help='e.g. "[0;3,_,4]"')
    p.add_argument("--range", default="-10..10", help="m range LO..HI (default -10..10)")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true")
    g.add_argument("--svg", metavar="FILE")
    p.add_argument("--max-denom", type=int, default=60,
                   help="diagram density for --svg (default 60)")
    p.set_defaults(func=_cmd_lines)

    p = sub.add_parser("diagram", help="render a diagram window to SVG")
    p.add_argument("--window", required=True, help="LO..HI, e.g. 0..1")
    p.add_argument("--max-denom", type=int, default=60)
    p.add_argument("--svg", required=True, metavar="FILE")
    p.set_defaults(func=_cmd_diagram)

    p = sub.add_parser("link", help="2-bridge link operations")
    linksub = p.add_subparsers(dest="link_command", required=True)
    pc = linksub.add_parser("canon", help="canonical fraction and expansion")
    pc.add_argument("rational")
    pc.add_argument("--json", action="store_true")
    pc.set_defaults(func=_cmd_link_canon)
    pe = linksub.add_parser("eq", help="Schubert equivalence of two fractions")
    pe.add_argument("rational_a")
    pe.add_argument("rational_b")
    pe.add_argument("--json", action="store_true")
    pe.set_defaults(func=_cmd_link_eq)

    return parser


def _merge_window_values(argv: list[str]) -> list[str]:
    # argparse reads "-5..5" as an option; splice values like "--range -5..5"
    # into "--range=-5..5" so negative bounds parse.
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--range", "--window") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_window_values(list(argv)))
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
