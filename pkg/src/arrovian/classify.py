"""Classification engine for coalition maps and the rules they induce.

The two conditions on a coalition map -- monotonicity (images grow along
inclusion) and minimality (disjoint additions extend images exactly) --
characterize the maps that arise from voting systems satisfying unanimity
and pairwise independence.  This module validates and enumerates such maps,
round-trips them through rule evaluation and extraction, locates every rule
between the two lexicographic rules of its chain, classifies the rules with
complete outputs on complete inputs, and extends linear-domain rules to the
full domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .decisive import CoalitionMap, extract_coalition_map
from .profiles import enumerate_profiles
from .relations import is_subrelation
from .rules import CoalitionRule, LexChainRule, StrongLexChainRule
from .voters import format_voters, members, size, subsets_of

__all__ = [
    "ValidationReport",
    "validate_coalition_map",
    "enumerate_coalition_maps",
    "round_trip",
    "chain_of",
    "lex_chain_map",
    "strong_lex_chain_map",
    "SandwichReport",
    "sandwich_check",
    "lex_sequence_of",
    "classify_linear_range",
    "extend_from_linear",
    "order_compare",
    "to_dot",
]

MAX_SOCIETY = 4


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validating a coalition map against the two conditions.

    ``violations`` holds replayable witnesses: ``("monotonicity", (M, N))``
    for an inclusion failure (M = N flags a coalition outside its own image),
    ``("minimality", (N, M))`` and ``("weak_minimality", (N, M))`` for a
    disjoint addition that is not extended exactly resp. not contained.
    """

    cond1: bool
    cond2: bool
    cond2prime: bool
    violations: tuple[tuple[str, tuple[int, int]], ...]

    @property
    def canonical(self) -> bool:
        return self.cond1 and self.cond2


def validate_coalition_map(cmap: CoalitionMap) -> ValidationReport:
    """Check both conditions and report first-class witnesses."""
    mono = tuple(("monotonicity", v) for v in cmap.monotonicity_violations())
    mini = tuple(("minimality", v) for v in cmap.minimality_violations(weak=False))
    weak = tuple(("weak_minimality", v) for v in cmap.minimality_violations(weak=True))
    return ValidationReport(
        cond1=not mono,
        cond2=not mini,
        cond2prime=not weak,
        violations=mono + mini + weak,
    )


def enumerate_coalition_maps(n: int, require_minimality: bool = True) -> tuple[CoalitionMap, ...]:
    """All coalition maps satisfying monotonicity (and optionally minimality).

    Backtracking over coalitions in ascending mask order.  Monotonicity gives
    a lower bound for each image from the already assigned subsets; the
    minimality condition forces the image outright whenever the coalition
    splits off a part disjoint from the image of the rest.  Output order is
    lexicographic on the table.
    """
    if not 0 <= n <= MAX_SOCIETY:
        raise ValueError(f"enumeration supports 0 <= n <= {MAX_SOCIETY}, got {n}")
    total = 1 << n
    full = total - 1
    table = [0] * total
    found: list[CoalitionMap] = []

    def assign(n_set: int) -> None:
        if n_set == total:
            found.append(CoalitionMap(n, tuple(table)))
            return
        bound = n_set
        for sub in subsets_of(n_set):
            if sub != n_set:
                bound |= table[sub]
        forced: Optional[int] = None
        if require_minimality:
            for part in subsets_of(n_set):
                if part == n_set:
                    continue
                added = n_set & ~part
                if table[part] & added:
                    continue
                want = table[part] | added
                if forced is None:
                    forced = want
                elif forced != want:
                    return
        if forced is not None:
            candidates = [forced] if forced & ~full == 0 and bound & ~forced == 0 else []
        else:
            candidates = [bound | extra for extra in subsets_of(full & ~bound)]
        for image in candidates:
            table[n_set] = image
            assign(n_set + 1)
            table[n_set] = 0

    assign(0)
    return tuple(found)


def round_trip(cmap: CoalitionMap, *, m: int = 3) -> bool:
    """Whether extraction recovers the map from its induced rule."""
    report = validate_coalition_map(cmap)
    if not report.canonical:
        raise ValueError("round trip requires a map satisfying both conditions")
    return extract_coalition_map(CoalitionRule(cmap), m=m) == cmap


def chain_of(cmap: CoalitionMap) -> tuple[int, ...]:
    """Iterated images of the empty coalition, up to the fixpoint.

    The empty starting point itself is dropped; an identity image at the
    start yields the empty chain.
    """
    chain: list[int] = []
    current = 0
    while True:
        nxt = cmap.of(current)
        if nxt == current:
            return tuple(chain)
        if current & ~nxt:
            raise ValueError("map does not satisfy monotonicity along its chain")
        chain.append(nxt)
        current = nxt


def lex_chain_map(n: int, chain: Sequence[int]) -> CoalitionMap:
    """Closed-form coalition map of the lexicographic chain rule.

    The core relative to N is empty once the top coalition is inside N, and
    otherwise comes from the smallest chain member not inside N.
    """
    chain = tuple(chain)
    table = []
    for n_set in range(1 << n):
        image = n_set
        if chain and chain[-1] & ~n_set:
            for level in chain:
                if level & ~n_set:
                    image = n_set | level
                    break
        table.append(image)
    return CoalitionMap(n, tuple(table))


def strong_lex_chain_map(n: int, chain: Sequence[int]) -> CoalitionMap:
    """Closed-form coalition map of the strong lexicographic chain rule.

    The core relative to N comes from the first level whose successor meets N
    only inside the level itself.
    """
    chain = tuple(chain)
    table = []
    for n_set in range(1 << n):
        image = n_set
        if chain and chain[-1] & ~n_set:
            levels = (0,) + chain
            for lam, level in enumerate(levels):
                nxt = levels[lam + 1] if lam + 1 < len(levels) else levels[-1]
                if nxt & n_set & ~level == 0:
                    image = n_set | nxt
                    break
        table.append(image)
    return CoalitionMap(n, tuple(table))


@dataclass(frozen=True)
class SandwichReport:
    """Location of a rule between the lexicographic rules of its chain."""

    chain: tuple[int, ...]
    lower_holds: bool
    upper_holds: bool
    lower_equal: bool
    upper_equal: bool

    @property
    def holds(self) -> bool:
        return self.lower_holds and self.upper_holds


def sandwich_check(rule, *, m: int = 3) -> SandwichReport:
    """Verify the double inclusion strong-lex <= rule <= lex on every profile.

    The chain is extracted from the rule itself.  Equality flags record
    whether either inclusion is an equality across the whole profile space;
    both are equalities exactly when the chain's two lexicographic maps
    coincide (single-member increments are the typical, but not the only,
    way this happens).
    """
    chain = chain_of(extract_coalition_map(rule, m=m))
    lower_rule = StrongLexChainRule(rule.n, chain)
    upper_rule = LexChainRule(rule.n, chain)
    lower_holds = upper_holds = True
    lower_equal = upper_equal = True
    for profile in enumerate_profiles(m, rule.n):
        mid = rule.evaluate(profile)
        low = lower_rule.evaluate(profile)
        up = upper_rule.evaluate(profile)
        if not is_subrelation(low, mid):
            lower_holds = False
        if not is_subrelation(mid, up):
            upper_holds = False
        if low != mid:
            lower_equal = False
        if mid != up:
            upper_equal = False
    return SandwichReport(chain, lower_holds, upper_holds, lower_equal, upper_equal)


def lex_sequence_of(cmap: CoalitionMap) -> Optional[tuple[int, ...]]:
    """The voter sequence of the map, when every core is at most one voter.

    Returns None as soon as some coalition has a core of two or more voters;
    otherwise the chain increments spell out the sequence.
    """
    for n_set in range(1 << cmap.n):
        if size(cmap.core(n_set)) > 1:
            return None
    sequence: list[int] = []
    prev = 0
    for level in chain_of(cmap):
        added = level & ~prev
        if size(added) != 1:
            raise AssertionError("singleton cores must grow the chain one voter at a time")
        sequence.append(members(added)[0])
        prev = level
    return tuple(sequence)


def classify_linear_range(cmap: CoalitionMap, *, m: int = 3) -> Optional[tuple[int, ...]]:
    """The voter sequence of the induced rule, when it has linear range.

    Decided by exhaustively checking that every profile of complete orders
    produces a complete outcome; the core-cardinality criterion
    (:func:`lex_sequence_of`) must agree, and the agreement is part of the
    test suite rather than assumed here.
    """
    rule = CoalitionRule(cmap)
    for profile in enumerate_profiles(m, cmap.n, linear_only=True):
        if not rule.evaluate(profile).is_complete:
            return None
    sequence = lex_sequence_of(cmap)
    if sequence is None:
        raise AssertionError("complete outcomes require singleton cores")
    return sequence


def extend_from_linear(
    rule,
    *,
    m: int = 3,
    verify: bool = True,
    check_unique: bool = False,
) -> CoalitionMap:
    """Extend a rule known only on complete orders to the full domain.

    Extraction evaluates the rule on worst-case profiles, which are complete
    by construction, so a linear-domain black box suffices.  With ``verify``
    the extension is checked pointwise against the rule on every profile of
    complete orders; with ``check_unique`` every other enumerated map is
    checked to disagree somewhere on that domain.
    """
    cmap = extract_coalition_map(rule, m=m)
    report = validate_coalition_map(cmap)
    if not report.canonical:
        raise ValueError("extracted map violates the map conditions; rule is not arrovian")
    if verify:
        ext = CoalitionRule(cmap)
        for profile in enumerate_profiles(m, rule.n, linear_only=True):
            if ext.evaluate(profile) != rule.evaluate(profile):
                raise ValueError("rule disagrees with its extension on a complete profile")
    if check_unique:
        linear = tuple(enumerate_profiles(m, rule.n, linear_only=True))
        for other in enumerate_coalition_maps(rule.n, require_minimality=True):
            if other == cmap:
                continue
            other_rule = CoalitionRule(other)
            if all(
                other_rule.evaluate(p) == rule.evaluate(p) for p in linear
            ):
                raise ValueError("extension is not unique on the linear domain")
    return cmap


def order_compare(a: CoalitionMap, b: CoalitionMap) -> str:
    """Pointwise comparison of two tables.

    Returns ``equal``, ``subset``, ``superset``, or ``incomparable``.  Note
    the contravariance: a pointwise smaller table induces a pointwise larger
    rule.
    """
    if a.n != b.n:
        raise ValueError("cannot compare maps over different societies")
    le = all(x & ~y == 0 for x, y in zip(a.table, b.table))
    ge = all(y & ~x == 0 for x, y in zip(a.table, b.table))
    if le and ge:
        return "equal"
    if le:
        return "subset"
    if ge:
        return "superset"
    return "incomparable"


def to_dot(cmap: CoalitionMap) -> str:
    """DOT graph of the map: coalition nodes ranked by size, image edges.

    Nodes sit on one rank per coalition size; an edge N -> image(N) is drawn
    whenever the image differs from N.
    """
    lines = [
        "digraph coalition_map {",
        "  rankdir=BT;",
        '  node [shape=box, fontname="Helvetica"];',
    ]
    by_size: dict[int, list[int]] = {}
    for n_set in range(1 << cmap.n):
        by_size.setdefault(size(n_set), []).append(n_set)
    for k in sorted(by_size):
        row = "; ".join(
            f's{n_set} [label="{format_voters(n_set)}"]' for n_set in sorted(by_size[k])
        )
        lines.append("  { rank=same; " + row + "; }")
    for n_set in range(1 << cmap.n):
        image = cmap.of(n_set)
        if image != n_set:
            lines.append(f"  s{n_set} -> s{image};")
    lines.append("}")
    return "\n".join(lines) + "\n"
