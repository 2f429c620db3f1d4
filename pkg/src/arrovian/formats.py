"""Text formats for relations, profiles, coalition maps, filters, and rules.

All formats round-trip bit-exactly.  Coalitions render as ``{}`` / ``{1,3}``,
relations as an ``m=<int>`` header plus an m x m block of 0/1 characters
(row x, column y holds whether x is weakly preferred to y), profiles as an
``n=<int>`` header plus n relation blocks separated by blank lines.
"""

from __future__ import annotations

import os
from typing import Sequence

from .decisive import CoalitionMap, SetFilter
from .measurable import Algebra, MeasurableMap, algebra_from_partition
from .profiles import Profile
from .relations import Preorder
from .rules import (
    CoalitionRule,
    FilterRule,
    LexChainRule,
    LexSequenceRule,
    MeasurableRule,
    ParetoRule,
    Rule,
    StrongLexChainRule,
    TrivialRule,
)
from .voters import format_voters, parse_voters

__all__ = [
    "FormatError",
    "format_preorder",
    "parse_preorder",
    "format_profile",
    "parse_profile",
    "format_coalition_map",
    "parse_coalition_map",
    "format_measurable_map",
    "parse_measurable_map",
    "format_filter",
    "parse_filter",
    "format_chain",
    "parse_chain",
    "format_sequence",
    "parse_sequence",
    "format_partition",
    "parse_partition",
    "parse_rule",
    "parse_rule_file",
]


class FormatError(ValueError):
    """Malformed input text."""


def _int_field(line: str, key: str) -> int:
    prefix = key + "="
    if not line.startswith(prefix):
        raise FormatError(f"expected {prefix}<int>, got {line!r}")
    try:
        return int(line[len(prefix):])
    except ValueError:
        raise FormatError(f"expected {prefix}<int>, got {line!r}") from None


def format_preorder(order: Preorder) -> str:
    lines = [f"m={order.m}"]
    for x in range(order.m):
        lines.append(
            "".join("1" if order.rel(x, y) else "0" for y in range(order.m))
        )
    return "\n".join(lines) + "\n"


def parse_preorder(text: str) -> Preorder:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty relation block")
    m = _int_field(lines[0], "m")
    if len(lines) != m + 1:
        raise FormatError(f"expected {m} relation rows, got {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        if len(ln) != m or set(ln) - {"0", "1"}:
            raise FormatError(f"malformed relation row {ln!r}")
        rows.append([c == "1" for c in ln])
    try:
        return Preorder.from_rows(rows)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_profile(profile: Profile) -> str:
    blocks = [format_preorder(p).rstrip("\n") for p in profile.orders]
    return f"n={profile.n}\n" + "\n\n".join(blocks) + "\n"


def parse_profile(text: str) -> Profile:
    stripped = text.strip()
    if not stripped:
        raise FormatError("empty profile")
    head, _, rest = stripped.partition("\n")
    n = _int_field(head.strip(), "n")
    blocks = [b for b in rest.split("\n\n") if b.strip()]
    if len(blocks) != n:
        raise FormatError(f"expected {n} relation blocks, got {len(blocks)}")
    return Profile(tuple(parse_preorder(b) for b in blocks))


def format_coalition_map(cmap: CoalitionMap) -> str:
    return cmap.format()


def parse_coalition_map(text: str) -> CoalitionMap:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty coalition map")
    n = _int_field(lines[0], "n")
    expected = 1 << n
    if len(lines) != expected + 1:
        raise FormatError(f"expected {expected} map lines, got {len(lines) - 1}")
    table = []
    for i, ln in enumerate(lines[1:]):
        left, sep, right = ln.partition("->")
        if not sep:
            raise FormatError(f"malformed map line {ln!r}")
        try:
            key = parse_voters(left)
            value = parse_voters(right)
        except ValueError as exc:
            raise FormatError(str(exc)) from None
        if key != i:
            raise FormatError(f"map lines must follow bitmask order; line {i} is {left.strip()!r}")
        table.append(value)
    try:
        return CoalitionMap(n, tuple(table))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_partition(algebra: Algebra) -> str:
    return algebra.format_partition()


def parse_partition(text: str, n: int) -> Algebra:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise FormatError(f"malformed partition {text!r}, expected [...|...]")
    try:
        blocks = [parse_voters(tok) for tok in text[1:-1].split("|")]
        return algebra_from_partition(n, blocks)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_measurable_map(dmap: MeasurableMap) -> str:
    return dmap.format()


def parse_measurable_map(text: str) -> MeasurableMap:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) < 2:
        raise FormatError("measurable map needs n= and partition= lines")
    n = _int_field(lines[0], "n")
    if not lines[1].startswith("partition="):
        raise FormatError(f"expected partition=..., got {lines[1]!r}")
    algebra = parse_partition(lines[1][len("partition="):], n)
    body = lines[2:]
    if len(body) != len(algebra.members):
        raise FormatError(
            f"expected {len(algebra.members)} map lines, got {len(body)}"
        )
    table = []
    for n_set, ln in zip(algebra.members, body):
        left, sep, right = ln.partition("->")
        if not sep or not right.strip().startswith("gen="):
            raise FormatError(f"malformed map line {ln!r}")
        try:
            key = parse_voters(left)
            value = parse_voters(right.strip()[len("gen="):])
        except ValueError as exc:
            raise FormatError(str(exc)) from None
        if key != n_set:
            raise FormatError(
                f"map lines must follow member order; expected {format_voters(n_set)}"
            )
        table.append(value)
    try:
        return MeasurableMap(algebra, tuple(table))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_filter(filt: SetFilter) -> str:
    """Principal filters render as their generator; others list members."""
    if filt.is_principal():
        return f"gen={format_voters(filt.generator())}\n"
    return "".join(f"member={format_voters(s)}\n" for s in filt.sets)


def parse_filter(text: str, n: int) -> SetFilter:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty filter")
    if len(lines) == 1 and lines[0].startswith("gen="):
        try:
            return SetFilter.principal(n, parse_voters(lines[0][len("gen="):]))
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    sets = []
    for ln in lines:
        if not ln.startswith("member="):
            raise FormatError(f"expected member=..., got {ln!r}")
        try:
            sets.append(parse_voters(ln[len("member="):]))
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    return SetFilter.from_sets(n, sets)


def format_chain(chain: Sequence[int]) -> str:
    return "<".join(format_voters(j) for j in chain)


def parse_chain(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(parse_voters(tok) for tok in text.split("<"))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_sequence(seq: Sequence[int]) -> str:
    return "(" + ",".join(str(k) for k in seq) + ")"


def parse_sequence(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise FormatError(f"malformed sequence {text!r}, expected (...)")
    body = text[1:-1].strip()
    if not body:
        return ()
    try:
        return tuple(int(tok) for tok in body.split(","))
    except ValueError as exc:
        raise FormatError(f"malformed sequence {text!r}") from None


def parse_rule(text: str, base_dir: str = ".") -> Rule:
    """Parse a rule spec: an ``n=<int>`` line plus a ``rule=...`` line.

    File references (``file=`` / ``dmap_file=``) resolve relative to
    ``base_dir``.
    """
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    n = None
    rule_line = None
    for ln in lines:
        if ln.startswith("n="):
            n = _int_field(ln, "n")
        elif ln.startswith("rule="):
            rule_line = ln
    if n is None:
        raise FormatError("rule spec is missing the n=<int> line")
    if rule_line is None:
        raise FormatError("rule spec is missing the rule=... line")

    tokens = rule_line.split()
    variant = tokens[0][len("rule="):]
    args: dict[str, str] = {}
    for tok in tokens[1:]:
        key, sep, value = tok.partition("=")
        if not sep:
            raise FormatError(f"malformed rule argument {tok!r}")
        args[key] = value

    def need(key: str) -> str:
        if key not in args:
            raise FormatError(f"rule={variant} needs {key}=...")
        return args[key]

    try:
        if variant == "trivial":
            return TrivialRule(n)
        if variant == "pareto":
            return ParetoRule(n, parse_voters(need("J")))
        if variant == "lex":
            return LexChainRule(n, parse_chain(need("chain")))
        if variant == "strong_lex":
            return StrongLexChainRule(n, parse_chain(need("chain")))
        if variant == "lexseq":
            return LexSequenceRule(n, parse_sequence(need("seq")))
        if variant == "delta":
            path = os.path.join(base_dir, need("file"))
            with open(path, encoding="ascii") as fh:
                cmap = parse_coalition_map(fh.read())
            if cmap.n != n:
                raise FormatError(f"coalition map is for n={cmap.n}, rule says n={n}")
            return CoalitionRule(cmap)
        if variant == "filter":
            return FilterRule(SetFilter.principal(n, parse_voters(need("gen"))))
        if variant == "measurable":
            algebra = parse_partition(need("partition"), n)
            path = os.path.join(base_dir, need("dmap_file"))
            with open(path, encoding="ascii") as fh:
                dmap = parse_measurable_map(fh.read())
            if dmap.algebra != algebra:
                raise FormatError("partition in rule spec disagrees with the map file")
            return MeasurableRule(dmap)
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    raise FormatError(f"unknown rule variant {variant!r}")


def parse_rule_file(path: str) -> Rule:
    with open(path, encoding="ascii") as fh:
        return parse_rule(fh.read(), base_dir=os.path.dirname(path) or ".")
