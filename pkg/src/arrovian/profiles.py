"""Preference profiles: one preorder per voter.

Voters are 1-based in all I/O and bit ``i - 1`` of a coalition mask stands
for voter ``i`` (see :mod:`arrovian.voters`).  Internally voter positions are
0-based tuple indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .relations import Preorder, enumerate_preorders
from .voters import full_mask, size

__all__ = [
    "Profile",
    "PairSignature",
    "signature",
    "worst_case_profile",
    "extend_with_indifference",
    "drop_voters",
    "enumerate_profiles",
    "count_profiles",
    "PROFILE_ENUMERATION_LIMIT",
]

PROFILE_ENUMERATION_LIMIT = 10**6


class PairSignature(NamedTuple):
    """Who weakly prefers a over b (X) and b over a (Y), as coalition masks.

    X & Y is the indifferent coalition; voters outside X | Y hold the pair
    incomparable.
    """

    X: int
    Y: int


@dataclass(frozen=True)
class Profile:
    """An immutable tuple of preorders, all on the same alternatives."""

    orders: tuple[Preorder, ...]

    def __post_init__(self) -> None:
        if not self.orders:
            raise ValueError("a profile needs at least one voter")
        m = self.orders[0].m
        if any(p.m != m for p in self.orders):
            raise ValueError("all voters must rank the same alternatives")

    @property
    def n(self) -> int:
        return len(self.orders)

    @property
    def m(self) -> int:
        return self.orders[0].m

    def order_of(self, voter: int) -> Preorder:
        """Preorder of a 1-based voter index."""
        if not 1 <= voter <= self.n:
            raise IndexError(f"voter {voter} out of range 1..{self.n}")
        return self.orders[voter - 1]

    def signature(self, a: int, b: int) -> PairSignature:
        """Masks of voters with a weakly preferred to b, and the reverse."""
        x = 0
        y = 0
        for i, p in enumerate(self.orders):
            if p.rel(a, b):
                x |= 1 << i
            if p.rel(b, a):
                y |= 1 << i
        return PairSignature(x, y)


def signature(profile: Profile, a: int, b: int) -> PairSignature:
    """Pairwise signature of a profile; see :meth:`Profile.signature`."""
    if a == b:
        raise ValueError("signature requires two distinct alternatives")
    return profile.signature(a, b)


def worst_case_profile(
    m: int,
    a: int,
    b: int,
    neutral: int,
    supporters: int,
    strong: bool = False,
    n: int | None = None,
) -> Profile:
    """The single profile that settles a relative decisiveness question.

    Voters in ``neutral`` hold a ~ b, voters in ``supporters`` hold a > b
    (a ~ b instead when ``strong``), and every other voter holds b > a.  All
    orders are complete: the remaining alternatives are appended strictly
    below both a and b in index order, so the profile is valid for rules
    defined on linear domains as well.

    ``n`` defaults to the smallest society containing both coalitions.
    """
    if m < 2:
        raise ValueError("need at least two alternatives")
    if a == b:
        raise ValueError("worst case needs two distinct alternatives")
    if not (0 <= a < m and 0 <= b < m):
        raise IndexError("alternative out of range")
    if neutral & supporters:
        raise ValueError("neutral and supporting coalitions must be disjoint")
    least = max((neutral | supporters).bit_length(), 1)
    if n is None:
        n = least
    elif n < least:
        raise ValueError(f"society of size {n} cannot hold the given coalitions")

    others = [x for x in range(m) if x not in (a, b)]
    tied = Preorder.from_levels(m, [(a, b)] + [(x,) for x in others])
    ahead = Preorder.from_levels(m, [(a,), (b,)] + [(x,) for x in others])
    behind = Preorder.from_levels(m, [(b,), (a,)] + [(x,) for x in others])
    support_order = tied if strong else ahead

    orders = []
    for i in range(n):
        bit = 1 << i
        if bit & neutral:
            orders.append(tied)
        elif bit & supporters:
            orders.append(support_order)
        else:
            orders.append(behind)
    return Profile(tuple(orders))


def extend_with_indifference(profile: Profile, absent: int) -> Profile:
    """Insert fully indifferent voters at the positions in ``absent``.

    The given profile covers the remaining electorate in original order; the
    result has ``profile.n + |absent|`` voters.
    """
    n = profile.n + size(absent)
    if absent & ~full_mask(n):
        raise ValueError("absent coalition does not fit the extended society")
    tied = Preorder.trivial(profile.m)
    orders = []
    it = iter(profile.orders)
    for i in range(n):
        if absent >> i & 1:
            orders.append(tied)
        else:
            orders.append(next(it))
    return Profile(tuple(orders))


def drop_voters(profile: Profile, absent: int) -> Profile:
    """Remove the voters in ``absent``, keeping the others in order."""
    if absent & ~full_mask(profile.n):
        raise ValueError("absent coalition out of range for this profile")
    orders = tuple(p for i, p in enumerate(profile.orders) if not absent >> i & 1)
    if not orders:
        raise ValueError("cannot drop every voter")
    return Profile(orders)


def count_profiles(m: int, n: int, linear_only: bool = False) -> int:
    """Size of the full profile space for ``n`` voters."""
    return len(enumerate_preorders(m, linear_only)) ** n


def enumerate_profiles(m: int, n: int, linear_only: bool = False) -> Iterator[Profile]:
    """All profiles over the chosen domain, voter 1 varying slowest.

    Guarded by :data:`PROFILE_ENUMERATION_LIMIT` total profiles.
    """
    if n < 1:
        raise ValueError("need at least one voter")
    total = count_profiles(m, n, linear_only)
    if total > PROFILE_ENUMERATION_LIMIT:
        raise ValueError(
            f"profile space of size {total} exceeds the enumeration guard "
            f"({PROFILE_ENUMERATION_LIMIT})"
        )
    orders = enumerate_preorders(m, linear_only)
    for combo in itertools.product(orders, repeat=n):
        yield Profile(combo)
