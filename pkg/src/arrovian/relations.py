"""Partial preorders on a finite set of alternatives.

Alternatives are 0-based indices ``0..m-1`` (displayed as a, b, c, ...).
A preorder is a reflexive transitive relation, stored as an int bitmask with
bit ``x*m + y`` set iff ``x`` is weakly preferred to ``y``.  Indifference and
incomparability are both allowed; completeness is not required.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "PairState",
    "Preorder",
    "is_preorder",
    "pair_state",
    "enumerate_preorders",
    "intersect",
    "apply_permutation",
    "is_subrelation",
    "MAX_ALTERNATIVES",
]

MAX_ALTERNATIVES = 4


class PairState(enum.Enum):
    """State of an ordered pair (x, y): exactly one holds for x != y."""

    STRICT_PREF = ">"
    STRICT_DISPREF = "<"
    INDIFFERENT = "~"
    INCOMPARABLE = "|"


@dataclass(frozen=True)
class Preorder:
    """A reflexive transitive relation on ``m`` alternatives.

    ``bits`` holds the full m x m table, bit ``x*m + y`` = x weakly preferred
    to y.  Instances are immutable and hashable; construction validates the
    axioms (use the class methods for prevalidated inputs).
    """

    m: int
    bits: int

    def __post_init__(self) -> None:
        if not 1 <= self.m <= MAX_ALTERNATIVES:
            raise ValueError(f"m must be in 1..{MAX_ALTERNATIVES}, got {self.m}")
        if not 0 <= self.bits < 1 << (self.m * self.m):
            raise ValueError("relation bits out of range for m")
        if not _reflexive(self.m, self.bits):
            raise ValueError("relation is not reflexive")
        if not _transitive(self.m, self.bits):
            raise ValueError("relation is not transitive")

    @classmethod
    def _make(cls, m: int, bits: int) -> "Preorder":
        """Trusted constructor, skips validation (internal hot paths)."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "m", m)
        object.__setattr__(obj, "bits", bits)
        return obj

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]]) -> "Preorder":
        """Build from an m x m table of truthy/falsy entries."""
        m = len(rows)
        if any(len(r) != m for r in rows):
            raise ValueError("relation table must be square")
        bits = 0
        for x, row in enumerate(rows):
            for y, v in enumerate(row):
                if v:
                    bits |= 1 << (x * m + y)
        return cls(m, bits)

    @classmethod
    def trivial(cls, m: int) -> "Preorder":
        """The all-pairs relation: every alternative tied with every other."""
        return cls._make(m, (1 << (m * m)) - 1)

    @classmethod
    def discrete(cls, m: int) -> "Preorder":
        """The identity relation: all distinct pairs incomparable."""
        bits = 0
        for x in range(m):
            bits |= 1 << (x * m + x)
        return cls._make(m, bits)

    @classmethod
    def from_levels(cls, m: int, levels: Sequence[Iterable[int]]) -> "Preorder":
        """Complete preorder from ranked groups, best first, ties inside a group.

        Every alternative must occur exactly once across ``levels``.
        """
        seen: list[int] = []
        groups = [tuple(g) for g in levels]
        for g in groups:
            seen.extend(g)
        if sorted(seen) != list(range(m)):
            raise ValueError("levels must partition range(m)")
        rank = {}
        for r, g in enumerate(groups):
            for x in g:
                rank[x] = r
        bits = 0
        for x in range(m):
            for y in range(m):
                if rank[x] <= rank[y]:
                    bits |= 1 << (x * m + y)
        return cls._make(m, bits)

    def rel(self, x: int, y: int) -> bool:
        """Whether x is weakly preferred to y."""
        if not (0 <= x < self.m and 0 <= y < self.m):
            raise IndexError(f"alternative out of range for m={self.m}")
        return bool(self.bits >> (x * self.m + y) & 1)

    def pair_state(self, x: int, y: int) -> PairState:
        """The unique state of (x, y); the diagonal counts as indifferent."""
        xy = self.rel(x, y)
        yx = self.rel(y, x)
        if xy and yx:
            return PairState.INDIFFERENT
        if xy:
            return PairState.STRICT_PREF
        if yx:
            return PairState.STRICT_DISPREF
        return PairState.INCOMPARABLE

    @property
    def is_complete(self) -> bool:
        """No incomparable pair (a linear preorder, i.e. ranking with ties)."""
        m = self.m
        return all(
            self.bits >> (x * m + y) & 1 or self.bits >> (y * m + x) & 1
            for x in range(m)
            for y in range(x + 1, m)
        )

    @property
    def is_antisymmetric(self) -> bool:
        """No tie between distinct alternatives."""
        m = self.m
        return not any(
            self.bits >> (x * m + y) & 1 and self.bits >> (y * m + x) & 1
            for x in range(m)
            for y in range(x + 1, m)
        )

    def bitstring(self) -> str:
        """Row-major 0/1 string; doubles as the canonical sort key."""
        mm = self.m * self.m
        return "".join("1" if self.bits >> k & 1 else "0" for k in range(mm))

    def rows(self) -> tuple[tuple[bool, ...], ...]:
        m = self.m
        return tuple(
            tuple(bool(self.bits >> (x * m + y) & 1) for y in range(m)) for x in range(m)
        )

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Preorder(m={self.m}, rows={self.bitstring()})"


def _reflexive(m: int, bits: int) -> bool:
    return all(bits >> (x * m + x) & 1 for x in range(m))


def _transitive(m: int, bits: int) -> bool:
    for x, y, z in _transitivity_triples(m):
        if bits >> (x * m + y) & 1 and bits >> (y * m + z) & 1:
            if not bits >> (x * m + z) & 1:
                return False
    return True


@functools.lru_cache(maxsize=None)
def _transitivity_triples(m: int) -> tuple[tuple[int, int, int], ...]:
    return tuple(
        (x, y, z)
        for x in range(m)
        for y in range(m)
        for z in range(m)
        if x != y and y != z
    )


def is_preorder(rows: Sequence[Sequence[object]]) -> bool:
    """Whether a square table of truthy entries is reflexive and transitive."""
    m = len(rows)
    if m < 1:
        raise ValueError("relation table must be non-empty")
    if any(len(r) != m for r in rows):
        raise ValueError("relation table must be square")
    bits = 0
    for x, row in enumerate(rows):
        for y, v in enumerate(row):
            if v:
                bits |= 1 << (x * m + y)
    return _reflexive(m, bits) and _transitive(m, bits)


def pair_state(order: Preorder, x: int, y: int) -> PairState:
    """The unique state among strict, inverse strict, indifferent, incomparable."""
    return order.pair_state(x, y)


@functools.lru_cache(maxsize=None)
def enumerate_preorders(m: int, linear_only: bool = False) -> tuple[Preorder, ...]:
    """All preorders on ``m`` alternatives, canonically ordered.

    The order is lexicographic on row-major bit strings.  With ``linear_only``
    the result is restricted to complete preorders (rankings with ties).
    Guarded to ``m <= 4``: enumeration brute-forces all ``2**(m*m)`` tables.
    """
    if not 1 <= m <= MAX_ALTERNATIVES:
        raise ValueError(f"enumeration supports 1 <= m <= {MAX_ALTERNATIVES}, got {m}")
    found = []
    for bits in range(1 << (m * m)):
        if not _reflexive(m, bits):
            continue
        if not _transitive(m, bits):
            continue
        order = Preorder._make(m, bits)
        if linear_only and not order.is_complete:
            continue
        found.append(order)
    found.sort(key=Preorder.bitstring)
    return tuple(found)


def intersect(orders: Sequence[Preorder]) -> Preorder:
    """Pointwise conjunction of preorders; the greatest common ordering.

    The intersection of preorders is again a preorder, so no revalidation is
    needed.  An empty list has no well-defined m and is rejected.
    """
    if not orders:
        raise ValueError("intersect requires at least one preorder")
    m = orders[0].m
    if any(p.m != m for p in orders):
        raise ValueError("cannot intersect preorders on different alternative sets")
    bits = (1 << (m * m)) - 1
    for p in orders:
        bits &= p.bits
    return Preorder._make(m, bits)


def apply_permutation(order: Preorder, perm: Sequence[int]) -> Preorder:
    """Relabel alternatives: result relates perm[x], perm[y] as ``order`` relates x, y."""
    m = order.m
    if sorted(perm) != list(range(m)):
        raise ValueError(f"perm must be a permutation of range({m})")
    bits = 0
    for x in range(m):
        for y in range(m):
            if order.bits >> (x * m + y) & 1:
                bits |= 1 << (perm[x] * m + perm[y])
    return Preorder._make(m, bits)


def is_subrelation(inner: Preorder, outer: Preorder) -> bool:
    """Whether every related pair of ``inner`` is also related in ``outer``."""
    if inner.m != outer.m:
        raise ValueError("cannot compare preorders on different alternative sets")
    return inner.bits & ~outer.bits == 0


def all_permutations(m: int) -> tuple[tuple[int, ...], ...]:
    """All permutations of range(m), in lexicographic order."""
    return tuple(itertools.permutations(range(m)))
