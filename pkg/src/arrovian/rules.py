"""Voting rule families: symbolic specs plus their evaluators.

Every rule maps a profile to an aggregate preorder and decides each pair of
alternatives from the pairwise signature alone: ``_weak(X, Y)`` answers
"is a weakly preferred to b" given the coalition X of voters with a weakly
preferred to b and the coalition Y of voters with the reverse.  Strictness is
never stored; a is strictly preferred exactly when the reverse weak
preference fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .decisive import CoalitionMap, SetFilter
from .measurable import Algebra, MeasurableMap
from .profiles import Profile
from .relations import Preorder
from .voters import format_voters, full_mask, size, submasks

__all__ = [
    "TrivialRule",
    "ParetoRule",
    "LexChainRule",
    "StrongLexChainRule",
    "LexSequenceRule",
    "CoalitionRule",
    "FilterRule",
    "MeasurableRule",
    "RestrictedRule",
    "restrict_electorate",
    "validate_chain",
    "eval_pareto",
    "eval_lex",
    "eval_strong_lex",
    "eval_lex_seq",
    "eval_coalition_rule",
    "eval_filter",
    "eval_measurable",
]


class Rule:
    """Shared evaluation driver; subclasses provide ``n`` and ``_weak``."""

    n: int

    def _weak(self, x: int, y: int) -> bool:
        raise NotImplementedError

    def evaluate(self, profile: Profile) -> Preorder:
        """Aggregate preorder of a profile."""
        if profile.n != self.n:
            raise ValueError(f"rule is for {self.n} voters, profile has {profile.n}")
        m = profile.m
        bits = 0
        for a in range(m):
            bits |= 1 << (a * m + a)
            for b in range(a + 1, m):
                x, y = profile.signature(a, b)
                if self._weak(x, y):
                    bits |= 1 << (a * m + b)
                if self._weak(y, x):
                    bits |= 1 << (b * m + a)
        return Preorder._make(m, bits)

    def describe(self) -> str:
        """One-line rule spec in the text format."""
        raise NotImplementedError


def validate_chain(n: int, chain: Sequence[int]) -> tuple[int, ...]:
    """Check a strictly ascending chain of non-empty coalitions."""
    full = full_mask(n)
    chain = tuple(chain)
    prev = 0
    for j in chain:
        if j == 0:
            raise ValueError("chain members must be non-empty")
        if j & ~full:
            raise ValueError("chain member out of range for this society")
        if prev & ~j or prev == j:
            raise ValueError("chain must be strictly ascending by inclusion")
        prev = j
    return chain


@dataclass(frozen=True)
class TrivialRule(Rule):
    """Declares all alternatives equivalent, whatever the profile."""

    n: int

    def _weak(self, x: int, y: int) -> bool:
        return True

    def describe(self) -> str:
        return "rule=trivial"


@dataclass(frozen=True)
class ParetoRule(Rule):
    """Intersection of the coalition's orders: the greatest common ordering."""

    n: int
    coalition: int

    def __post_init__(self) -> None:
        if self.coalition & ~full_mask(self.n):
            raise ValueError("coalition out of range for this society")

    def _weak(self, x: int, y: int) -> bool:
        return self.coalition & ~x == 0

    def describe(self) -> str:
        return f"rule=pareto J={format_voters(self.coalition)}"


@dataclass(frozen=True)
class LexChainRule(Rule):
    """Hierarchy of nested coalitions; indifference passes the decision down.

    The smallest chain member not unanimously indifferent settles the pair by
    unanimous weak preference; if the whole chain is indifferent the outcome
    is indifference.  An empty chain gives the trivial rule.
    """

    n: int
    chain: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "chain", validate_chain(self.n, self.chain))

    def _weak(self, x: int, y: int) -> bool:
        tied = x & y
        for level in self.chain:
            if level & ~tied:
                return level & ~x == 0
        return True

    def describe(self) -> str:
        return "rule=lex chain=" + "<".join(format_voters(j) for j in self.chain)


@dataclass(frozen=True)
class StrongLexChainRule(Rule):
    """Nested coalitions passing down until an increment is unanimously strict.

    a is weakly preferred iff some chain level weakly agrees while the next
    increment strictly agrees; the level above the top has an empty increment,
    so unanimous weak preference on the top coalition always suffices.
    """

    n: int
    chain: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "chain", validate_chain(self.n, self.chain))

    def _weak(self, x: int, y: int) -> bool:
        strict = x & ~y
        prev = 0
        for level in self.chain:
            if prev & ~x == 0 and (level & ~prev) & ~strict == 0:
                return True
            prev = level
        return prev & ~x == 0

    def describe(self) -> str:
        return "rule=strong_lex chain=" + "<".join(format_voters(j) for j in self.chain)


@dataclass(frozen=True)
class LexSequenceRule(Rule):
    """Voters consulted one at a time; the first non-indifferent one decides.

    On complete individual orders the outcome is complete.  Partial orders
    are accepted too: the deciding voter's pair state is copied verbatim, so
    an incomparable stance yields an incomparable outcome.
    """

    n: int
    sequence: tuple[int, ...]

    def __post_init__(self) -> None:
        seq = tuple(self.sequence)
        if len(set(seq)) != len(seq):
            raise ValueError("sequence entries must be distinct voters")
        if any(not 1 <= k <= self.n for k in seq):
            raise ValueError("sequence entry out of range for this society")
        object.__setattr__(self, "sequence", seq)

    def _weak(self, x: int, y: int) -> bool:
        for k in self.sequence:
            bit = 1 << (k - 1)
            if bit & x and bit & y:
                continue
            return bool(bit & x)
        return True

    def describe(self) -> str:
        return "rule=lexseq seq=(" + ",".join(str(k) for k in self.sequence) + ")"


@dataclass(frozen=True)
class CoalitionRule(Rule):
    """Rule induced by a coalition map: a is weakly preferred iff some
    coalition is unanimously indifferent while its core is unanimously strict.

    The map must satisfy the monotonicity condition (coalition inside image,
    images ordered by inclusion), which guarantees transitive outcomes.  When
    the map also satisfies the minimality condition, the single maximal
    indifferent coalition decides and evaluation takes that shortcut;
    otherwise all subsets of the indifferent coalition are scanned.
    """

    cmap: CoalitionMap
    _minimal: bool = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.cmap.satisfies_monotonicity():
            raise ValueError("coalition map violates the monotonicity condition")
        object.__setattr__(self, "_minimal", self.cmap.satisfies_minimality())

    @property
    def n(self) -> int:
        return self.cmap.n

    def _weak(self, x: int, y: int) -> bool:
        tied = x & y
        strict = x & ~y
        if self._minimal:
            return self.cmap.core(tied) & ~strict == 0
        for n_set in submasks(tied):
            if self.cmap.core(n_set) & ~strict == 0:
                return True
        return False

    def describe(self) -> str:
        return "rule=delta"


@dataclass(frozen=True)
class FilterRule(Rule):
    """a weakly preferred iff some member coalition unanimously agrees."""

    filter: SetFilter

    def __post_init__(self) -> None:
        if not self.filter.is_filter():
            raise ValueError("family violates the filter axioms")

    @property
    def n(self) -> int:
        return self.filter.n

    def _weak(self, x: int, y: int) -> bool:
        return any(s & ~x == 0 for s in self.filter.sets)

    def describe(self) -> str:
        return f"rule=filter gen={format_voters(self.filter.generator())}"


@dataclass(frozen=True)
class MeasurableRule(Rule):
    """Coalition-map rule over a restricted algebra of admissible coalitions.

    Only measurable profiles are accepted: each pairwise signature must lie
    in the algebra.  a is weakly preferred iff some measurable coalition is
    unanimously indifferent while the generator of its relative-decisiveness
    filter is unanimously strict.
    """

    dmap: MeasurableMap

    def __post_init__(self) -> None:
        if not self.dmap.satisfies_monotonicity():
            raise ValueError("measurable map violates the monotonicity condition")

    @property
    def n(self) -> int:
        return self.dmap.algebra.n

    def _weak(self, x: int, y: int) -> bool:
        algebra = self.dmap.algebra
        if not algebra.contains(x) or not algebra.contains(y):
            raise ValueError(
                f"profile is not measurable: signature "
                f"({format_voters(x)}, {format_voters(y)}) outside the algebra"
            )
        tied = x & y
        strict = x & ~y
        for n_set in algebra.members:
            if n_set & ~tied == 0 and self.dmap.core(n_set) & ~strict == 0:
                return True
        return False

    def describe(self) -> str:
        return "rule=measurable"


@dataclass(frozen=True)
class RestrictedRule(Rule):
    """Electorate restriction: absent voters are filled in as fully indifferent."""

    base: Rule
    absent: int

    def __post_init__(self) -> None:
        if self.absent & ~full_mask(self.base.n):
            raise ValueError("absent coalition out of range for the base rule")
        if size(self.absent) >= self.base.n:
            raise ValueError("cannot restrict away the whole electorate")

    @property
    def n(self) -> int:
        return self.base.n - size(self.absent)

    def _positions(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.base.n) if not self.absent >> i & 1)

    def _scatter(self, mask: int) -> int:
        out = 0
        for j, pos in enumerate(self._positions()):
            if mask >> j & 1:
                out |= 1 << pos
        return out

    def _weak(self, x: int, y: int) -> bool:
        return self.base._weak(self._scatter(x) | self.absent, self._scatter(y) | self.absent)

    def describe(self) -> str:
        return f"restriction of ({self.base.describe()}) without {format_voters(self.absent)}"


def restrict_electorate(rule: Rule, absent: int) -> RestrictedRule:
    """The rule seen by the electorate outside ``absent``."""
    return RestrictedRule(rule, absent)


def eval_pareto(coalition: int, profile: Profile) -> Preorder:
    """Evaluate the Pareto rule of a coalition; the empty coalition ties everything."""
    return ParetoRule(profile.n, coalition).evaluate(profile)


def eval_lex(chain: Sequence[int], profile: Profile) -> Preorder:
    """Evaluate the lexicographic rule of an ascending coalition chain."""
    return LexChainRule(profile.n, tuple(chain)).evaluate(profile)


def eval_strong_lex(chain: Sequence[int], profile: Profile) -> Preorder:
    """Evaluate the strong lexicographic rule of an ascending coalition chain."""
    return StrongLexChainRule(profile.n, tuple(chain)).evaluate(profile)


def eval_lex_seq(sequence: Sequence[int], profile: Profile) -> Preorder:
    """Evaluate the voter-sequence lexicographic rule."""
    return LexSequenceRule(profile.n, tuple(sequence)).evaluate(profile)


def eval_coalition_rule(cmap: CoalitionMap, profile: Profile) -> Preorder:
    """Evaluate the rule induced by a coalition map."""
    return CoalitionRule(cmap).evaluate(profile)


def eval_filter(filt: SetFilter, profile: Profile) -> Preorder:
    """Evaluate the rule induced by a filter of coalitions."""
    return FilterRule(filt).evaluate(profile)


def eval_measurable(dmap: MeasurableMap, profile: Profile) -> Preorder:
    """Evaluate the rule induced by a measurable coalition map."""
    return MeasurableRule(dmap).evaluate(profile)
