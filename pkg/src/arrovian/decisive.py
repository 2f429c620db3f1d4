"""Decisive coalitions, coalition-structure maps, and filters of decisive sets.

A coalition K is decisive relative to a disjoint coalition N when unanimous
strict preference inside K, together with unanimous indifference inside N,
forces the aggregate to weakly agree -- whatever everyone else says.  With
N = {} this is absolute decisiveness; the strong variant only asks K for
unanimous weak preference.

For voting systems satisfying unanimity and pairwise independence, a single
worst-case profile settles each such question, and the minimal decisive
coalitions relative to every N form the complete invariant of the rule: the
coalition map N -> N + (its minimal relatively decisive coalition).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .profiles import enumerate_profiles, worst_case_profile
from .voters import format_voters, full_mask, size, submasks, subsets_of

__all__ = [
    "CoalitionMap",
    "SetFilter",
    "is_decisive",
    "minimal_decisive",
    "extract_coalition_map",
    "decisive_filter",
]


@dataclass(frozen=True)
class CoalitionMap:
    """Total map from coalitions to coalitions, indexed by bitmask.

    ``table[N]`` is the image of coalition ``N``; a canonical map sends N to
    N plus its minimal relatively decisive coalition.  Construction checks
    only the shape; the semantic conditions (monotonicity, minimality) are
    queried separately so that invalid tables can be inspected and reported.
    """

    n: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("society size must be >= 0")
        if len(self.table) != 1 << self.n:
            raise ValueError(
                f"table must cover all {1 << self.n} coalitions, got {len(self.table)}"
            )
        full = full_mask(self.n)
        if any(v & ~full for v in self.table):
            raise ValueError("table value out of range for this society")

    def of(self, coalition: int) -> int:
        """Image of a coalition."""
        return self.table[coalition]

    def core(self, coalition: int) -> int:
        """The part added on top of the coalition itself.

        For a canonical map this is the minimal coalition that decides a pair
        once ``coalition`` is unanimously indifferent on it.
        """
        return self.table[coalition] & ~coalition

    def satisfies_monotonicity(self) -> bool:
        """N inside its image, and images ordered by inclusion."""
        return next(self.monotonicity_violations(), None) is None

    def monotonicity_violations(self) -> Iterator[tuple[int, int]]:
        """Pairs (M, N) with M <= N whose images break the condition.

        A violation of ``N subset of table[N]`` is reported as (N, N).
        """
        for n_set in range(1 << self.n):
            if n_set & ~self.table[n_set]:
                yield (n_set, n_set)
            for m_set in subsets_of(n_set):
                if m_set != n_set and self.table[m_set] & ~self.table[n_set]:
                    yield (m_set, n_set)

    def satisfies_minimality(self, weak: bool = False) -> bool:
        """Disjoint additions extend images exactly (or at most, if ``weak``)."""
        return next(self.minimality_violations(weak), None) is None

    def minimality_violations(self, weak: bool = False) -> Iterator[tuple[int, int]]:
        """Pairs (N, M), M disjoint from table[N], with a wrong table[N | M].

        With ``weak`` only the inclusion table[N | M] <= table[N] | M is
        demanded, not equality.
        """
        full = full_mask(self.n)
        for n_set in range(1 << self.n):
            image = self.table[n_set]
            for m_set in subsets_of(full & ~(n_set | image)):
                expected = image | m_set
                got = self.table[n_set | m_set]
                bad = got & ~expected if weak else got != expected
                if bad:
                    yield (n_set, m_set)

    def format(self) -> str:
        """Text form: ``n=<int>`` then one ``{N} -> {image}`` line per coalition."""
        lines = [f"n={self.n}"]
        for n_set in range(1 << self.n):
            lines.append(f"{format_voters(n_set)} -> {format_voters(self.table[n_set])}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SetFilter:
    """A family of coalitions, stored as sorted masks.

    Filter and ultrafilter axioms are queried, not enforced, so that the
    validation boundary can report failures.
    """

    n: int
    sets: tuple[int, ...]

    def __post_init__(self) -> None:
        full = full_mask(self.n)
        if any(s & ~full for s in self.sets):
            raise ValueError("member out of range for this society")
        if list(self.sets) != sorted(set(self.sets)):
            raise ValueError("members must be strictly ascending masks")

    @classmethod
    def principal(cls, n: int, generator: int) -> "SetFilter":
        """All supersets of ``generator`` within the society."""
        free = full_mask(n) & ~generator
        sets = sorted(generator | extra for extra in subsets_of(free))
        return cls(n, tuple(sets))

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[int]) -> "SetFilter":
        return cls(n, tuple(sorted(set(sets))))

    def __contains__(self, coalition: int) -> bool:
        return coalition in self.sets

    def is_filter(self) -> bool:
        """Upward closed, contains the full society, closed under intersection."""
        full = full_mask(self.n)
        if full not in self.sets:
            return False
        member = set(self.sets)
        for s in self.sets:
            for extra in subsets_of(full & ~s):
                if s | extra not in member:
                    return False
        for s, t in itertools.combinations(self.sets, 2):
            if s & t not in member:
                return False
        return True

    def is_ultrafilter(self) -> bool:
        """Proper filter containing one of K, complement-of-K for every K."""
        if not self.is_filter() or 0 in self.sets:
            return False
        full = full_mask(self.n)
        member = set(self.sets)
        return all(k in member or full & ~k in member for k in range(full + 1))

    @property
    def is_trivial(self) -> bool:
        return 0 in self.sets

    def generator(self) -> int:
        """Intersection of all members; generates the filter when principal.

        Every filter on a finite society is principal, so for actual filters
        this is lossless.
        """
        if not self.sets:
            raise ValueError("empty family has no generator")
        g = full_mask(self.n)
        for s in self.sets:
            g &= s
        return g

    def is_principal(self) -> bool:
        return self == SetFilter.principal(self.n, self.generator())


def is_decisive(
    rule,
    coalition: int,
    neutral: int = 0,
    strong: bool = False,
    *,
    m: int = 3,
    paranoid: bool = False,
    linear_only: bool = False,
) -> bool:
    """Whether ``coalition`` is decisive relative to ``neutral`` for ``rule``.

    The fast path evaluates the rule on the single worst-case profile for the
    fixed pair (0, 1); this is sound once the rule is known to satisfy
    unanimity and pairwise independence (then neutrality and monotonicity
    follow, and the worst case suffices).  ``paranoid`` instead quantifies
    over every profile of the chosen domain and every ordered pair, which is
    the raw definition and serves as the oracle for the shortcut.
    """
    if coalition & neutral:
        raise ValueError("coalition and neutral set must be disjoint")
    n = rule.n
    full = full_mask(n)
    if (coalition | neutral) & ~full:
        raise ValueError("coalition out of range for this rule")

    if not paranoid:
        profile = worst_case_profile(m, 0, 1, neutral, coalition, strong, n=n)
        return rule.evaluate(profile).rel(0, 1)

    for profile in enumerate_profiles(m, n, linear_only):
        outcome = None
        for a in range(m):
            for b in range(m):
                if a == b:
                    continue
                x, y = profile.signature(a, b)
                tied = x & y
                if neutral & ~tied:
                    continue
                if strong:
                    if coalition & ~x:
                        continue
                else:
                    if coalition & ~(x & ~y):
                        continue
                if outcome is None:
                    outcome = rule.evaluate(profile)
                if not outcome.rel(a, b):
                    return False
    return True


def minimal_decisive(rule, neutral: int = 0, strong: bool = False, *, m: int = 3) -> int:
    """The minimal coalition decisive relative to ``neutral``.

    Computed as the intersection of every decisive coalition disjoint from
    ``neutral``; for rules satisfying the arrovian axioms the intersection of
    decisive coalitions is itself decisive, which is re-checked here.
    """
    candidates = full_mask(rule.n) & ~neutral
    result = candidates
    found = False
    for k in subsets_of(candidates):
        if is_decisive(rule, k, neutral, strong, m=m):
            result &= k
            found = True
    if not found:
        raise ValueError("no decisive coalition found; rule violates unanimity")
    if not is_decisive(rule, result, neutral, strong, m=m):
        raise ValueError(
            "intersection of decisive coalitions is not decisive; "
            "rule is not arrovian"
        )
    return result


def extract_coalition_map(rule, *, m: int = 3) -> CoalitionMap:
    """The coalition map N -> N + minimal decisive coalition relative to N."""
    n = rule.n
    table = tuple(
        minimal_decisive(rule, n_set, False, m=m) | n_set for n_set in range(1 << n)
    )
    return CoalitionMap(n, table)


def decisive_filter(rule, strong: bool = False, *, m: int = 3) -> SetFilter:
    """The family of (strongly) decisive coalitions of a rule."""
    n = rule.n
    sets = [k for k in range(1 << n) if is_decisive(rule, k, 0, strong, m=m)]
    return SetFilter(n, tuple(sets))
