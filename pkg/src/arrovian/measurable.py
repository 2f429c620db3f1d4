"""Finite measurable societies: partition algebras and their coalition maps.

A partition of the voters generates an algebra: the admissible coalitions
are exactly the unions of blocks.  A profile is measurable when every
pairwise signature is admissible, which for a partition algebra means that
all voters of a block share one preorder.  At this finite scale every filter
inside the algebra is principal, so the map sending each admissible coalition
to the generator of its relative-decisiveness filter carries the whole
classification.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .decisive import SetFilter, is_decisive
from .profiles import Profile, PROFILE_ENUMERATION_LIMIT
from .relations import enumerate_preorders
from .voters import format_voters, full_mask

__all__ = [
    "Algebra",
    "MeasurableMap",
    "algebra_from_partition",
    "is_filter",
    "extract_measurable_map",
    "enumerate_measurable_profiles",
    "enumerate_measurable_maps",
]


@dataclass(frozen=True)
class Algebra:
    """The algebra of coalitions generated by a partition into blocks.

    Members are all unions of blocks; the family is closed under complement,
    union, and intersection by construction.
    """

    n: int
    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        blocks = tuple(sorted(self.blocks))
        object.__setattr__(self, "blocks", blocks)
        union = 0
        for b in blocks:
            if b == 0:
                raise ValueError("partition blocks must be non-empty")
            if b & union:
                raise ValueError("partition blocks must be disjoint")
            union |= b
        if union != full_mask(self.n):
            raise ValueError("blocks must cover the whole society")

    @functools.cached_property
    def members(self) -> tuple[int, ...]:
        """All admissible coalitions, ascending by mask."""
        out = set()
        for k in range(1 << len(self.blocks)):
            s = 0
            for i, b in enumerate(self.blocks):
                if k >> i & 1:
                    s |= b
            out.add(s)
        return tuple(sorted(out))

    def contains(self, coalition: int) -> bool:
        return coalition in self._member_set

    @functools.cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def format_partition(self) -> str:
        return "[" + "|".join(format_voters(b) for b in self.blocks) + "]"


def algebra_from_partition(n: int, blocks: Sequence[int]) -> Algebra:
    """Build the algebra generated by a partition of {1..n}."""
    return Algebra(n, tuple(blocks))


def is_filter(family: Iterable[int], algebra: Algebra, ultra: bool = False) -> bool:
    """Filter axioms for a family inside an algebra.

    Upward closure is demanded within the algebra only.  With ``ultra`` the
    family must also be proper and contain one of K, complement-of-K for
    every admissible K.
    """
    sets = set(family)
    if any(not algebra.contains(s) for s in sets):
        raise ValueError("family member outside the algebra")
    if full_mask(algebra.n) not in sets:
        return False
    for s in sets:
        for t in algebra.members:
            if s & ~t == 0 and t not in sets:
                return False
    for s, t in itertools.combinations(sets, 2):
        if s & t not in sets:
            return False
    if ultra:
        if 0 in sets:
            return False
        full = full_mask(algebra.n)
        if not all(k in sets or full & ~k in sets for k in algebra.members):
            return False
    return True


@dataclass(frozen=True)
class MeasurableMap:
    """Coalition map restricted to an algebra, one generator per member.

    ``table[i]`` pairs with ``algebra.members[i]`` and stores the generator
    of the upward-closed family assigned to that coalition, with the
    coalition itself included (so ``table[i]`` contains ``members[i]``).
    Every stored generator must itself be admissible.
    """

    algebra: Algebra
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        members = self.algebra.members
        if len(self.table) != len(members):
            raise ValueError("table must cover every admissible coalition")
        for n_set, image in zip(members, self.table):
            if not self.algebra.contains(image):
                raise ValueError("image outside the algebra")
            if n_set & ~image:
                raise ValueError("image must contain its coalition")

    @functools.cached_property
    def _index(self) -> dict[int, int]:
        return {n_set: i for i, n_set in enumerate(self.algebra.members)}

    def of(self, coalition: int) -> int:
        """Image of an admissible coalition."""
        return self.table[self._index[coalition]]

    def core(self, coalition: int) -> int:
        """Generator of the relative-decisiveness filter, coalition removed."""
        return self.of(coalition) & ~coalition

    def relative_filter(self, coalition: int) -> SetFilter:
        """The filter assigned to a coalition, inside the restricted algebra."""
        restricted = sorted({s & ~coalition for s in self.algebra.members})
        core = self.core(coalition)
        sets = tuple(s for s in restricted if core & ~s == 0)
        return SetFilter(self.algebra.n, sets)

    def satisfies_monotonicity(self) -> bool:
        """Images ordered by inclusion along inclusion of coalitions."""
        for m_set in self.algebra.members:
            for n_set in self.algebra.members:
                if m_set & ~n_set == 0 and self.of(m_set) & ~self.of(n_set):
                    return False
        return True

    def satisfies_minimality(self) -> bool:
        """Admissible disjoint additions extend images exactly."""
        for n_set in self.algebra.members:
            image = self.of(n_set)
            for m_set in self.algebra.members:
                if m_set & (n_set | image):
                    continue
                if self.of(n_set | m_set) != image | m_set:
                    return False
        return True

    def format(self) -> str:
        """Text form: n=, partition=, then one ``{N} -> gen={G}`` line per member."""
        lines = [f"n={self.algebra.n}", f"partition={self.algebra.format_partition()}"]
        for n_set, image in zip(self.algebra.members, self.table):
            lines.append(f"{format_voters(n_set)} -> gen={format_voters(image)}")
        return "\n".join(lines) + "\n"


def extract_measurable_map(rule, algebra: Algebra, *, m: int = 3) -> MeasurableMap:
    """Extract the measurable coalition map of a rule over an algebra.

    For each admissible N, the decisive-relative-to-N test runs over all
    admissible coalitions disjoint from N; the generator is their
    intersection and is re-checked to be decisive itself.
    """
    table = []
    for n_set in algebra.members:
        candidates = sorted({k & ~n_set for k in algebra.members})
        decisive = [
            k for k in candidates if is_decisive(rule, k, n_set, False, m=m)
        ]
        if not decisive:
            raise ValueError("no admissible decisive coalition; rule violates unanimity")
        gen = full_mask(algebra.n) & ~n_set
        for k in decisive:
            gen &= k
        if not is_decisive(rule, gen, n_set, False, m=m):
            raise ValueError("intersection of decisive coalitions is not decisive")
        table.append(gen | n_set)
    return MeasurableMap(algebra, tuple(table))


def enumerate_measurable_profiles(
    algebra: Algebra, m: int = 3, linear_only: bool = False
) -> Iterator[Profile]:
    """All measurable profiles: one preorder per block, shared inside the block."""
    orders = enumerate_preorders(m, linear_only)
    blocks = algebra.blocks
    if len(orders) ** len(blocks) > PROFILE_ENUMERATION_LIMIT:
        raise ValueError("measurable profile space exceeds the enumeration guard")
    for combo in itertools.product(orders, repeat=len(blocks)):
        assigned = [None] * algebra.n
        for block, order in zip(blocks, combo):
            for i in range(algebra.n):
                if block >> i & 1:
                    assigned[i] = order
        yield Profile(tuple(assigned))


def count_measurable_profiles(algebra: Algebra, m: int = 3, linear_only: bool = False) -> int:
    return len(enumerate_preorders(m, linear_only)) ** len(algebra.blocks)


def enumerate_measurable_maps(
    algebra: Algebra, require_minimality: bool = True
) -> tuple[MeasurableMap, ...]:
    """All measurable maps over the algebra satisfying the map conditions.

    Brute-force search over admissible images in member order, pruned by
    monotonicity; with ``require_minimality`` the exact-extension condition
    is also enforced.
    """
    members = algebra.members
    found: list[MeasurableMap] = []

    def admissible_supersets(bound: int) -> list[int]:
        return [s for s in members if bound & ~s == 0]

    def assign(idx: int, table: list[int]) -> None:
        if idx == len(members):
            candidate = MeasurableMap(algebra, tuple(table))
            if require_minimality and not candidate.satisfies_minimality():
                return
            found.append(candidate)
            return
        n_set = members[idx]
        bound = n_set
        for j in range(idx):
            if members[j] & ~n_set == 0:
                bound |= table[j]
        for image in admissible_supersets(bound):
            table.append(image)
            assign(idx + 1, table)
            table.pop()

    assign(0, [])
    return tuple(found)
