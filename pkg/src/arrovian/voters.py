"""Coalition (voter subset) utilities.

A society of ``n`` voters is the set {1, ..., n}.  Throughout the library a
coalition is represented as an int bitmask: bit ``i - 1`` is set iff voter
``i`` belongs to the coalition.  The empty coalition is ``0`` and the full
society is ``(1 << n) - 1``.

The text form is ``{}`` or ``{1,3}`` (sorted, comma-separated, 1-based).
"""

from __future__ import annotations

from typing import Iterable, Iterator

__all__ = [
    "full_mask",
    "mask_of",
    "members",
    "size",
    "subsets_of",
    "submasks",
    "format_voters",
    "parse_voters",
]


def full_mask(n: int) -> int:
    """Bitmask of the full society {1..n}."""
    if n < 0:
        raise ValueError(f"society size must be >= 0, got {n}")
    return (1 << n) - 1


def mask_of(voters: Iterable[int]) -> int:
    """Bitmask of a collection of 1-based voter indices."""
    mask = 0
    for v in voters:
        if v < 1:
            raise ValueError(f"voter indices are 1-based, got {v}")
        mask |= 1 << (v - 1)
    return mask


def members(mask: int) -> tuple[int, ...]:
    """Sorted 1-based voter indices of a coalition mask."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def size(mask: int) -> int:
    """Number of voters in the coalition."""
    return mask.bit_count()


def subsets_of(universe: int) -> Iterator[int]:
    """All submasks of ``universe`` in ascending numeric order."""
    extra_bits = [1 << b for b in range(universe.bit_length()) if universe >> b & 1]
    for k in range(1 << len(extra_bits)):
        sub = 0
        for i, bit in enumerate(extra_bits):
            if k >> i & 1:
                sub |= bit
        yield sub


def submasks(universe: int) -> Iterator[int]:
    """All submasks of ``universe``, descending from ``universe`` to 0.

    Standard subset-lattice walk: ``s = (s - 1) & universe``.
    """
    s = universe
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & universe


def format_voters(mask: int) -> str:
    """Render a coalition mask as ``{}`` or ``{1,3}``."""
    if mask < 0:
        raise ValueError("coalition mask must be non-negative")
    return "{" + ",".join(str(v) for v in members(mask)) + "}"


def parse_voters(text: str) -> int:
    """Parse ``{}`` or ``{1,3}`` into a coalition mask."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"malformed voter set {text!r}, expected {{...}}")
    body = text[1:-1].strip()
    if not body:
        return 0
    try:
        voters = [int(tok) for tok in body.split(",")]
    except ValueError as exc:
        raise ValueError(f"malformed voter set {text!r}: {exc}") from None
    return mask_of(voters)
