"""Partition algebras, filters inside them, measurable maps and round trips."""

import pytest

from arrovian import (
    Algebra,
    CoalitionRule,
    MeasurableMap,
    MeasurableRule,
    ParetoRule,
    Preorder,
    algebra_from_partition,
    enumerate_coalition_maps,
    enumerate_measurable_maps,
    enumerate_measurable_profiles,
    enumerate_profiles,
    eval_measurable,
    extract_coalition_map,
    extract_measurable_map,
    is_filter,
)
from arrovian.decisive import SetFilter
from arrovian.rules import FilterRule, LexSequenceRule
from arrovian.voters import full_mask, mask_of
from conftest import levels


def test_algebra_from_singletons_is_full_powerset():
    alg = algebra_from_partition(3, [0b001, 0b010, 0b100])
    assert alg.members == tuple(range(8))


def test_algebra_single_block():
    alg = algebra_from_partition(3, [0b111])
    assert alg.members == (0, 0b111)


def test_algebra_two_blocks():
    alg = algebra_from_partition(3, [mask_of([1, 2]), mask_of([3])])
    assert alg.members == (0, 0b011, 0b100, 0b111)
    assert alg.contains(0b011) and not alg.contains(0b001)


def test_algebra_rejects_non_partition():
    with pytest.raises(ValueError):
        algebra_from_partition(3, [0b011, 0b010])
    with pytest.raises(ValueError):
        algebra_from_partition(3, [0b011])
    with pytest.raises(ValueError):
        algebra_from_partition(3, [0b011, 0b100, 0])


def test_algebra_closure_properties():
    alg = algebra_from_partition(4, [0b0011, 0b0100, 0b1000])
    members = set(alg.members)
    full = full_mask(4)
    assert full in members
    for s in members:
        assert full & ~s in members
        for t in members:
            assert s | t in members and s & t in members


def test_is_filter_examples():
    alg = algebra_from_partition(2, [0b01, 0b10])
    assert is_filter([0b11], alg)
    assert is_filter(alg.members, alg)  # trivial filter
    assert not is_filter(alg.members, alg, ultra=True)
    assert is_filter([0b01, 0b11], alg, ultra=True)
    assert not is_filter([0b01], alg)  # not upward closed
    with pytest.raises(ValueError):
        is_filter([0b01], algebra_from_partition(2, [0b11]))


def test_measurable_map_over_powerset_matches_coalition_rule():
    alg = algebra_from_partition(2, [0b01, 0b10])
    for cmap in enumerate_coalition_maps(2):
        dmap = MeasurableMap(alg, cmap.table)
        rule = MeasurableRule(dmap)
        base = CoalitionRule(cmap)
        for profile in enumerate_profiles(3, 2):
            assert rule.evaluate(profile) == base.evaluate(profile)


def test_measurable_rule_rejects_non_measurable_profile():
    alg = algebra_from_partition(2, [0b11])
    dmap = MeasurableMap(alg, (0b11, 0b11))
    rule = MeasurableRule(dmap)
    from arrovian import Profile

    split = Profile((levels(3, (0,), (1,), (2,)), levels(3, (1,), (0,), (2,))))
    with pytest.raises(ValueError):
        rule.evaluate(split)


def test_coarse_algebra_map_acts_as_full_pareto():
    # blocks {1,2,3}: the only non-trivial assignment demands the full society
    alg = algebra_from_partition(3, [0b111])
    dmap = MeasurableMap(alg, (0b111, 0b111))
    pareto = ParetoRule(3, 0b111)
    for profile in enumerate_measurable_profiles(alg):
        assert eval_measurable(dmap, profile) == pareto.evaluate(profile)


def test_measurable_profiles_share_block_orders():
    alg = algebra_from_partition(3, [0b011, 0b100])
    count = 0
    for profile in enumerate_measurable_profiles(alg):
        count += 1
        assert profile.orders[0] == profile.orders[1]
    assert count == 29 * 29


def test_extract_measurable_map_powerset_matches_plain_extraction():
    alg = algebra_from_partition(2, [0b01, 0b10])
    for cmap in enumerate_coalition_maps(2):
        rule = CoalitionRule(cmap)
        dmap = extract_measurable_map(rule, alg)
        assert dmap.table == cmap.table


def test_extract_measurable_map_coarse_pareto():
    alg = algebra_from_partition(3, [0b111])
    dmap = extract_measurable_map(ParetoRule(3, 0b111), alg)
    assert dmap.of(0) == 0b111


def test_ultrafilter_rule_has_trivial_or_ultra_relative_filters():
    """A singleton-generated rule over the full powerset: every relative
    filter is principal on a singleton (an ultrafilter of the restricted
    society) or trivial, and complete profiles yield complete outcomes."""
    rule = FilterRule(SetFilter.principal(3, 0b001))
    alg = algebra_from_partition(3, [0b001, 0b010, 0b100])
    dmap = extract_measurable_map(rule, alg)
    for n_set in alg.members:
        core = dmap.core(n_set)
        assert core == 0 or core.bit_count() == 1
        filt = dmap.relative_filter(n_set)
        remaining = full_mask(3) & ~n_set
        # filter axioms inside the restricted powerset, by hand
        assert remaining in filt.sets
        assert all(
            s | extra in filt.sets
            for s in filt.sets
            for extra in range(remaining + 1)
            if (s | extra) & ~remaining == 0
        )
    for profile in enumerate_profiles(3, 3, linear_only=True):
        assert rule.evaluate(profile).is_complete


def test_enumerate_measurable_maps_round_trip_two_blocks():
    alg = algebra_from_partition(3, [mask_of([1, 2]), mask_of([3])])
    maps = enumerate_measurable_maps(alg)
    assert len(maps) >= 2
    for dmap in maps:
        rule = MeasurableRule(dmap)
        assert extract_measurable_map(rule, alg) == dmap
