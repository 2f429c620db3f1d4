"""Command-line front end.

Exit codes: 0 when the requested property holds or the computation succeeds,
1 when an exhaustive check finds a violation (a witness is printed), 2 for
malformed input or usage errors.  Output is deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import sys

from . import classify
from .axioms import AXIOM_KINDS, check_axiom
from .decisive import extract_coalition_map
from .formats import (
    FormatError,
    format_coalition_map,
    format_preorder,
    format_profile,
    format_sequence,
    parse_coalition_map,
    parse_profile,
    parse_rule_file,
)
from .relations import enumerate_preorders
from .rules import CoalitionRule
from .voters import full_mask

__all__ = ["main"]

ALT_LABELS = "abcdefghijklmnopqrstuvwxyz"


def _cmd_enumerate_orders(args) -> int:
    orders = enumerate_preorders(args.m, linear_only=args.linear)
    print(f"count={len(orders)}")
    print()
    print("\n".join(format_preorder(p) for p in orders), end="")
    return 0


def _cmd_enumerate_rules(args) -> int:
    maps = classify.enumerate_coalition_maps(args.n, require_minimality=not args.no_minimality)
    print(f"count={len(maps)}")
    print()
    print("\n".join(format_coalition_map(c) for c in maps), end="")
    return 0


def _witness_text(witness) -> str:
    lines = []
    kind = witness.kind
    if hasattr(witness, "profile") and hasattr(witness, "a"):
        lines.append(f"witness kind={kind} pair=({ALT_LABELS[witness.a]},{ALT_LABELS[witness.b]})")
        lines.append(format_profile(witness.profile).rstrip("\n"))
    elif hasattr(witness, "profile_a"):
        pa = witness.pair_a
        pb = witness.pair_b
        lines.append(
            f"witness kind={kind} "
            f"pair_a=({ALT_LABELS[pa[0]]},{ALT_LABELS[pa[1]]}) "
            f"pair_b=({ALT_LABELS[pb[0]]},{ALT_LABELS[pb[1]]})"
        )
        lines.append("profile_a:")
        lines.append(format_profile(witness.profile_a).rstrip("\n"))
        lines.append("profile_b:")
        lines.append(format_profile(witness.profile_b).rstrip("\n"))
    else:
        perm = ",".join(str(k) for k in witness.permutation)
        lines.append(f"witness kind={kind} permutation=({perm})")
        lines.append(format_profile(witness.profile).rstrip("\n"))
    return "\n".join(lines)


def _cmd_verify(args) -> int:
    rule = parse_rule_file(args.rule)
    kinds = tuple(args.axiom) if args.axiom else ()
    if args.all_axioms:
        kinds = AXIOM_KINDS
    if not kinds:
        print("verify: give --axiom KIND (repeatable) or --all-axioms", file=sys.stderr)
        return 2
    ok = True
    for kind in kinds:
        report = check_axiom(rule, kind, m=args.m, domain=args.domain)
        print(f"axiom={kind} holds={str(report.holds).lower()}")
        if not report.holds:
            ok = False
            print(_witness_text(report.witness))
    return 0 if ok else 1


def _cmd_extract(args) -> int:
    rule = parse_rule_file(args.rule)
    cmap = extract_coalition_map(rule, m=args.m)
    print(format_coalition_map(cmap), end="")
    return 0


def _cmd_classify(args) -> int:
    maps = classify.enumerate_coalition_maps(args.n)
    full = full_mask(args.n)
    shown = 0
    out = []
    for cmap in maps:
        if args.require_strong_unanimity:
            chain = classify.chain_of(cmap)
            top = chain[-1] if chain else 0
            if top != full:
                continue
        if args.linear_range:
            seq = classify.classify_linear_range(cmap, m=args.m)
            if seq is None:
                continue
            out.append(f"rule=lexseq seq={format_sequence(seq)}")
        else:
            out.append(format_coalition_map(cmap).rstrip("\n"))
        shown += 1
    if out:
        sep = "\n" if args.linear_range else "\n\n"
        print(sep.join(out))
    print(f"count={shown}")
    return 0


def _cmd_extend(args) -> int:
    rule = parse_rule_file(args.rule)
    cmap = classify.extend_from_linear(rule, m=args.m)
    print(format_coalition_map(cmap), end="")
    return 0


def _cmd_compare(args) -> int:
    with open(args.a, encoding="ascii") as fh:
        left = parse_coalition_map(fh.read())
    with open(args.b, encoding="ascii") as fh:
        right = parse_coalition_map(fh.read())
    print(f"order={classify.order_compare(left, right)}")
    return 0


def _cmd_render_dot(args) -> int:
    with open(args.delta, encoding="ascii") as fh:
        cmap = parse_coalition_map(fh.read())
    print(classify.to_dot(cmap), end="")
    return 0


def _cmd_eval(args) -> int:
    rule = parse_rule_file(args.rule)
    with open(args.profile, encoding="ascii") as fh:
        profile = parse_profile(fh.read())
    print(format_preorder(rule.evaluate(profile)), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arrovian",
        description="Construct, evaluate, and classify voting systems on partial preorders.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate-orders", help="list all preorders on m alternatives")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--linear", action="store_true", help="complete preorders only")
    p.set_defaults(func=_cmd_enumerate_orders)

    p = sub.add_parser("enumerate-rules", help="list all valid coalition maps for n voters")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--no-minimality",
        action="store_true",
        help="drop the exact-extension condition (non-canonical maps included)",
    )
    p.set_defaults(func=_cmd_enumerate_rules)

    p = sub.add_parser("verify", help="exhaustively check axioms of a rule")
    p.add_argument("--rule", required=True, help="rule spec file")
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--domain", choices=("partial", "linear"), default="partial")
    p.add_argument("--axiom", action="append", choices=AXIOM_KINDS)
    p.add_argument("--all-axioms", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("extract", help="extract the coalition map of a rule")
    p.add_argument("--rule", required=True)
    p.add_argument("--m", type=int, default=3)
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("classify", help="enumerate and filter the rules for n voters")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=3)
    p.add_argument(
        "--require-strong-unanimity",
        action="store_true",
        help="keep rules whose minimal strongly decisive coalition is the whole society",
    )
    p.add_argument(
        "--linear-range",
        action="store_true",
        help="keep rules mapping complete profiles to complete outcomes; print their sequences",
    )
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("extend", help="extend a linear-domain rule to the full domain")
    p.add_argument("--rule", required=True)
    p.add_argument("--m", type=int, default=3)
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("compare", help="compare two coalition map files pointwise")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("render-dot", help="render a coalition map file as a DOT graph")
    p.add_argument("--delta", required=True)
    p.set_defaults(func=_cmd_render_dot)

    p = sub.add_parser("eval", help="evaluate a rule on a profile file")
    p.add_argument("--rule", required=True)
    p.add_argument("--profile", required=True)
    p.set_defaults(func=_cmd_eval)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
