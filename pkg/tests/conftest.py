"""Shared helpers: compact preorder builders and reference rule tables."""

import pytest

from arrovian import CoalitionMap, Preorder
from arrovian.voters import mask_of


def po(*rows: str) -> Preorder:
    """Preorder from row strings, e.g. po('110', '110', '001')."""
    return Preorder.from_rows([[c == "1" for c in row] for row in rows])


def levels(m: int, *groups) -> Preorder:
    """Complete preorder from ranked groups of alternatives, best first."""
    return Preorder.from_levels(m, groups)


@pytest.fixture
def example_map_three_voters() -> CoalitionMap:
    """The reference three-voter coalition structure used across the suite.

    Voters 1 and 2 together decide; with 2 neutral, 1 decides alone; with 1
    neutral, 2 and 3 must agree.  Table: {} -> {1,2}, {1} -> {1,2,3},
    {2} -> {1,2}, everything else -> {1,2,3}.
    """
    full = 0b111
    table = [0] * 8
    table[0b000] = mask_of([1, 2])
    table[0b001] = full
    table[0b010] = mask_of([1, 2])
    table[0b011] = full
    table[0b100] = full
    table[0b101] = full
    table[0b110] = full
    table[0b111] = full
    return CoalitionMap(3, tuple(table))
