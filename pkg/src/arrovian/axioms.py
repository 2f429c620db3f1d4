"""Exhaustive axiom checkers over full profile spaces.

Each checker sweeps every profile of the chosen domain (all partial preorders
or only the complete ones) and returns either a clean pass or a concrete,
independently replayable counterexample.  Pairwise axioms are checked through
signature buckets: profiles are grouped by who weakly prefers a to b and who
prefers b to a, outcomes are aggregated per bucket, and the axiom becomes a
relation between buckets.  This keeps the sweep linear in the number of
profiles instead of quadratic.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .profiles import PROFILE_ENUMERATION_LIMIT, Profile
from .relations import Preorder, apply_permutation, enumerate_preorders
from .voters import full_mask

__all__ = [
    "AXIOM_KINDS",
    "AxiomReport",
    "PairViolation",
    "TwoProfileViolation",
    "SymmetryViolation",
    "check_axiom",
    "check_axioms",
    "is_arrovian",
    "profile_space",
    "ProfileSpace",
]

AXIOM_KINDS = (
    "unanimity",
    "strict_unanimity",
    "strong_unanimity",
    "monotonicity",
    "iia",
    "neutrality",
    "strong_neutrality",
    "anonymity",
)

DOMAINS = ("partial", "linear")


@dataclass(frozen=True)
class PairViolation:
    """A profile whose outcome breaks a unanimity-style axiom on one pair."""

    kind: str
    profile: Profile
    a: int
    b: int

    def replay(self, rule) -> bool:
        """Re-derive the violation from scratch; True when reproduced."""
        x, y = self.profile.signature(self.a, self.b)
        full = full_mask(self.profile.n)
        out = rule.evaluate(self.profile)
        weak = out.rel(self.a, self.b)
        strict = weak and not out.rel(self.b, self.a)
        if self.kind == "unanimity":
            return x == full and not weak
        if self.kind == "strict_unanimity":
            return x == full and y == 0 and not strict
        if self.kind == "strong_unanimity":
            return x == full and y != full and not strict
        raise ValueError(f"not a unanimity-style kind: {self.kind}")


@dataclass(frozen=True)
class TwoProfileViolation:
    """Two profiles whose signatures force a relation their outcomes break."""

    kind: str
    profile_a: Profile
    pair_a: tuple[int, int]
    profile_b: Profile
    pair_b: tuple[int, int]

    def replay(self, rule) -> bool:
        xa, ya = self.profile_a.signature(*self.pair_a)
        xb, yb = self.profile_b.signature(*self.pair_b)
        wa = rule.evaluate(self.profile_a).rel(*self.pair_a)
        wb = rule.evaluate(self.profile_b).rel(*self.pair_b)
        if self.kind == "iia":
            return self.pair_a == self.pair_b and xa == xb and ya == yb and wa != wb
        if self.kind == "monotonicity":
            improved = xa & ~xb == 0 and yb & ~ya == 0
            return self.pair_a == self.pair_b and improved and wa and not wb
        if self.kind == "strong_neutrality":
            return xa == xb and ya == yb and wa != wb
        raise ValueError(f"not a two-profile kind: {self.kind}")


@dataclass(frozen=True)
class SymmetryViolation:
    """A profile and a permutation under which the rule is not equivariant."""

    kind: str
    profile: Profile
    permutation: tuple[int, ...]

    def replay(self, rule) -> bool:
        if self.kind == "neutrality":
            permuted = Profile(
                tuple(apply_permutation(p, self.permutation) for p in self.profile.orders)
            )
            lhs = rule.evaluate(permuted)
            rhs = apply_permutation(rule.evaluate(self.profile), self.permutation)
            return lhs != rhs
        if self.kind == "anonymity":
            permuted = Profile(tuple(self.profile.orders[i] for i in self.permutation))
            return rule.evaluate(permuted) != rule.evaluate(self.profile)
        raise ValueError(f"not a symmetry kind: {self.kind}")


@dataclass(frozen=True)
class AxiomReport:
    """Result of one exhaustive axiom check."""

    kind: str
    domain: str
    holds: bool
    witness: Optional[object] = None

    def __post_init__(self) -> None:
        if not self.holds and self.witness is None:
            raise ValueError("a failed check must carry a witness")


class ProfileSpace:
    """Precomputed signature arrays for one full profile space.

    Profiles are indexed by the mixed-radix number of their per-voter order
    indices, voter 1 most significant -- the same order that profile
    enumeration yields.  Outcome tables per rule are cached, so repeated
    checks of the same rule cost one sweep in total.
    """

    def __init__(self, m: int, n: int, domain: str = "partial") -> None:
        if domain not in DOMAINS:
            raise ValueError(f"domain must be one of {DOMAINS}")
        self.m = m
        self.n = n
        self.domain = domain
        self.orders = enumerate_preorders(m, linear_only=domain == "linear")
        base = len(self.orders)
        self.total = base ** n
        if self.total > PROFILE_ENUMERATION_LIMIT:
            raise ValueError(
                f"profile space of size {self.total} exceeds the enumeration guard"
            )
        self.pairs = tuple((a, b) for a in range(m) for b in range(a + 1, m))

        place = base ** np.arange(n - 1, -1, -1, dtype=np.int64)
        t = np.arange(self.total, dtype=np.int64)
        self.digits = (t[:, None] // place[None, :]) % base

        self.sig = np.empty((len(self.pairs), 2, self.total), dtype=np.int64)
        for pi, (a, b) in enumerate(self.pairs):
            wab = np.array([int(p.rel(a, b)) for p in self.orders], dtype=np.int64)
            wba = np.array([int(p.rel(b, a)) for p in self.orders], dtype=np.int64)
            x = np.zeros(self.total, dtype=np.int64)
            y = np.zeros(self.total, dtype=np.int64)
            for i in range(n):
                x |= wab[self.digits[:, i]] << i
                y |= wba[self.digits[:, i]] << i
            self.sig[pi, 0] = x
            self.sig[pi, 1] = y

        self._profiles: Optional[tuple[Profile, ...]] = None
        self._outcomes: dict[object, np.ndarray] = {}

    @property
    def profiles(self) -> tuple[Profile, ...]:
        if self._profiles is None:
            self._profiles = tuple(
                Profile(combo) for combo in itertools.product(self.orders, repeat=self.n)
            )
        return self._profiles

    def profile(self, index: int) -> Profile:
        return self.profiles[index]

    def signature_arrays(self, a: int, b: int) -> tuple[np.ndarray, np.ndarray]:
        """Arrays of X and Y masks for the ordered pair (a, b) across all profiles."""
        if a < b:
            pi = self.pairs.index((a, b))
            return self.sig[pi, 0], self.sig[pi, 1]
        pi = self.pairs.index((b, a))
        return self.sig[pi, 1], self.sig[pi, 0]

    def outcomes(self, rule) -> np.ndarray:
        """Weak-preference table of a rule: [pair, direction, profile] booleans.

        Filled by evaluating the rule on every profile through its public
        evaluator.
        """
        cached = self._outcomes.get(rule)
        if cached is not None:
            return cached
        w = np.zeros((len(self.pairs), 2, self.total), dtype=bool)
        for t, profile in enumerate(self.profiles):
            out = rule.evaluate(profile)
            for pi, (a, b) in enumerate(self.pairs):
                w[pi, 0, t] = out.rel(a, b)
                w[pi, 1, t] = out.rel(b, a)
        self._outcomes[rule] = w
        return w

    def weak_array(self, rule, a: int, b: int) -> np.ndarray:
        """Outcome booleans for the ordered pair (a, b) across all profiles."""
        w = self.outcomes(rule)
        if a < b:
            return w[self.pairs.index((a, b)), 0]
        return w[self.pairs.index((b, a)), 1]

    def first_invalid_outcome(self, rule) -> Optional[int]:
        """Index of the first profile whose outcome breaks transitivity."""
        bad = np.zeros(self.total, dtype=bool)
        for x, y, z in itertools.permutations(range(self.m), 3):
            bad |= (
                self.weak_array(rule, x, y)
                & self.weak_array(rule, y, z)
                & ~self.weak_array(rule, x, z)
            )
        idx = np.flatnonzero(bad)
        return int(idx[0]) if idx.size else None


@functools.lru_cache(maxsize=None)
def profile_space(m: int, n: int, domain: str = "partial") -> ProfileSpace:
    return ProfileSpace(m, n, domain)


def _bucket_counts(key: np.ndarray, w: np.ndarray, buckets: int) -> tuple[np.ndarray, np.ndarray]:
    total = np.bincount(key, minlength=buckets)
    true = np.bincount(key, weights=w.astype(np.float64), minlength=buckets)
    return total, true.astype(np.int64)


def _first_in_bucket(key: np.ndarray, bucket: int, cond: np.ndarray) -> int:
    idx = np.flatnonzero((key == bucket) & cond)
    return int(idx[0])


def check_axiom(rule, kind: str, *, m: int = 3, domain: str = "partial") -> AxiomReport:
    """Exhaustively verify one axiom of a rule over a full profile space."""
    if kind not in AXIOM_KINDS:
        raise ValueError(f"unknown axiom kind {kind!r}")
    space = profile_space(m, rule.n, domain)
    checker = _CHECKERS[kind]
    witness = checker(space, rule)
    return AxiomReport(kind, domain, holds=witness is None, witness=witness)


def check_axioms(rule, kinds=AXIOM_KINDS, *, m: int = 3, domain: str = "partial"):
    """Reports for several axioms, in the given order."""
    return tuple(check_axiom(rule, k, m=m, domain=domain) for k in kinds)


def is_arrovian(rule, *, m: int = 3, domain: str = "partial") -> bool:
    """Unanimity plus pairwise independence, checked exhaustively."""
    return (
        check_axiom(rule, "unanimity", m=m, domain=domain).holds
        and check_axiom(rule, "iia", m=m, domain=domain).holds
    )


def _ordered_pairs(m: int):
    return [(a, b) for a in range(m) for b in range(m) if a != b]


def _check_unanimity(space: ProfileSpace, rule) -> Optional[PairViolation]:
    full = full_mask(space.n)
    for a, b in _ordered_pairs(space.m):
        x, _ = space.signature_arrays(a, b)
        w = space.weak_array(rule, a, b)
        viol = (x == full) & ~w
        idx = np.flatnonzero(viol)
        if idx.size:
            return PairViolation("unanimity", space.profile(int(idx[0])), a, b)
    return None


def _check_strict_unanimity(space: ProfileSpace, rule) -> Optional[PairViolation]:
    basic = _check_unanimity(space, rule)
    if basic is not None:
        return PairViolation("strict_unanimity", basic.profile, basic.a, basic.b)
    full = full_mask(space.n)
    for a, b in _ordered_pairs(space.m):
        x, y = space.signature_arrays(a, b)
        strict_out = space.weak_array(rule, a, b) & ~space.weak_array(rule, b, a)
        viol = (x == full) & (y == 0) & ~strict_out
        idx = np.flatnonzero(viol)
        if idx.size:
            return PairViolation("strict_unanimity", space.profile(int(idx[0])), a, b)
    return None


def _check_strong_unanimity(space: ProfileSpace, rule) -> Optional[PairViolation]:
    basic = _check_unanimity(space, rule)
    if basic is not None:
        return PairViolation("strong_unanimity", basic.profile, basic.a, basic.b)
    full = full_mask(space.n)
    for a, b in _ordered_pairs(space.m):
        x, y = space.signature_arrays(a, b)
        strict_out = space.weak_array(rule, a, b) & ~space.weak_array(rule, b, a)
        viol = (x == full) & (y != full) & ~strict_out
        idx = np.flatnonzero(viol)
        if idx.size:
            return PairViolation("strong_unanimity", space.profile(int(idx[0])), a, b)
    return None


def _check_iia(space: ProfileSpace, rule) -> Optional[TwoProfileViolation]:
    buckets = 1 << (2 * space.n)
    for a, b in _ordered_pairs(space.m):
        x, y = space.signature_arrays(a, b)
        key = (x << space.n) | y
        w = space.weak_array(rule, a, b)
        total, true = _bucket_counts(key, w, buckets)
        mixed = np.flatnonzero((true > 0) & (true < total))
        if mixed.size:
            k = int(mixed[0])
            t_true = _first_in_bucket(key, k, w)
            t_false = _first_in_bucket(key, k, ~w)
            return TwoProfileViolation(
                "iia", space.profile(t_true), (a, b), space.profile(t_false), (a, b)
            )
    return None


def _check_monotonicity(space: ProfileSpace, rule) -> Optional[TwoProfileViolation]:
    n = space.n
    buckets = 1 << (2 * n)
    mask = full_mask(n)
    for a, b in _ordered_pairs(space.m):
        x, y = space.signature_arrays(a, b)
        key = (x << n) | y
        w = space.weak_array(rule, a, b)
        total, true = _bucket_counts(key, w, buckets)
        occupied = np.flatnonzero(total > 0)
        can_true = true > 0
        can_false = true < total
        for k1 in occupied:
            if not can_true[k1]:
                continue
            x1, y1 = int(k1) >> n, int(k1) & mask
            for k2 in occupied:
                if not can_false[k2]:
                    continue
                x2, y2 = int(k2) >> n, int(k2) & mask
                if x1 & ~x2 == 0 and y2 & ~y1 == 0:
                    t_true = _first_in_bucket(key, int(k1), w)
                    t_false = _first_in_bucket(key, int(k2), ~w)
                    return TwoProfileViolation(
                        "monotonicity",
                        space.profile(t_true),
                        (a, b),
                        space.profile(t_false),
                        (a, b),
                    )
    return None


def _check_strong_neutrality(space: ProfileSpace, rule) -> Optional[TwoProfileViolation]:
    n = space.n
    buckets = 1 << (2 * n)
    tables = []
    for a, b in _ordered_pairs(space.m):
        x, y = space.signature_arrays(a, b)
        key = (x << n) | y
        w = space.weak_array(rule, a, b)
        total, true = _bucket_counts(key, w, buckets)
        mixed = np.flatnonzero((true > 0) & (true < total))
        if mixed.size:
            k = int(mixed[0])
            return TwoProfileViolation(
                "strong_neutrality",
                space.profile(_first_in_bucket(key, k, w)),
                (a, b),
                space.profile(_first_in_bucket(key, k, ~w)),
                (a, b),
            )
        tables.append(((a, b), key, w, total, true == total))
    (pair0, key0, w0, total0, istrue0) = tables[0]
    for pair, key, w, total, istrue in tables[1:]:
        differ = np.flatnonzero((total0 > 0) & (total > 0) & (istrue0 != istrue))
        if differ.size:
            k = int(differ[0])
            if istrue0[k]:
                t_a = _first_in_bucket(key0, k, w0)
                t_b = _first_in_bucket(key, k, ~w)
                return TwoProfileViolation(
                    "strong_neutrality", space.profile(t_a), pair0, space.profile(t_b), pair
                )
            t_a = _first_in_bucket(key0, k, ~w0)
            t_b = _first_in_bucket(key, k, w)
            return TwoProfileViolation(
                "strong_neutrality", space.profile(t_b), pair, space.profile(t_a), pair0
            )
    return None


def _permuted_profile_index(space: ProfileSpace, order_map: np.ndarray) -> np.ndarray:
    base = len(space.orders)
    place = base ** np.arange(space.n - 1, -1, -1, dtype=np.int64)
    t = np.zeros(space.total, dtype=np.int64)
    for i in range(space.n):
        t += order_map[space.digits[:, i]] * place[i]
    return t


def _check_neutrality(space: ProfileSpace, rule) -> Optional[SymmetryViolation]:
    index_of = {p: i for i, p in enumerate(space.orders)}
    for rho in itertools.permutations(range(space.m)):
        order_map = np.array(
            [index_of[apply_permutation(p, rho)] for p in space.orders], dtype=np.int64
        )
        tprime = _permuted_profile_index(space, order_map)
        for a, b in _ordered_pairs(space.m):
            lhs = space.weak_array(rule, rho[a], rho[b])[tprime]
            rhs = space.weak_array(rule, a, b)
            idx = np.flatnonzero(lhs != rhs)
            if idx.size:
                return SymmetryViolation("neutrality", space.profile(int(idx[0])), rho)
    return None


def _check_anonymity(space: ProfileSpace, rule) -> Optional[SymmetryViolation]:
    base = len(space.orders)
    place = base ** np.arange(space.n - 1, -1, -1, dtype=np.int64)
    for sigma in itertools.permutations(range(space.n)):
        tprime = np.zeros(space.total, dtype=np.int64)
        for i in range(space.n):
            tprime += space.digits[:, sigma[i]] * place[i]
        for pi in range(len(space.pairs)):
            for d in (0, 1):
                w = space.outcomes(rule)[pi, d]
                idx = np.flatnonzero(w[tprime] != w)
                if idx.size:
                    return SymmetryViolation(
                        "anonymity", space.profile(int(idx[0])), sigma
                    )
    return None


_CHECKERS = {
    "unanimity": _check_unanimity,
    "strict_unanimity": _check_strict_unanimity,
    "strong_unanimity": _check_strong_unanimity,
    "iia": _check_iia,
    "monotonicity": _check_monotonicity,
    "neutrality": _check_neutrality,
    "strong_neutrality": _check_strong_neutrality,
    "anonymity": _check_anonymity,
}
