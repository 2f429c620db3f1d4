"""Decisiveness tests, minimal coalitions, extraction, decisive filters."""

import pytest

from arrovian import (
    CoalitionMap,
    CoalitionRule,
    LexChainRule,
    LexSequenceRule,
    ParetoRule,
    SetFilter,
    StrongLexChainRule,
    TrivialRule,
    decisive_filter,
    extract_coalition_map,
    is_decisive,
    minimal_decisive,
)
from arrovian.voters import full_mask, mask_of


def test_pareto_coalition_is_decisive():
    rule = ParetoRule(3, mask_of([1, 3]))
    assert is_decisive(rule, mask_of([1, 3]))
    assert is_decisive(rule, mask_of([1, 3]), strong=True)


def test_empty_set_decisive_for_trivial_rule():
    rule = TrivialRule(2)
    assert is_decisive(rule, 0, 0)


def test_proper_subset_of_pareto_coalition_not_decisive():
    rule = ParetoRule(2, 0b11)
    assert not is_decisive(rule, 0b01)


def test_is_decisive_rejects_overlap():
    with pytest.raises(ValueError):
        is_decisive(TrivialRule(2), 0b01, 0b01)


def test_minimal_decisive_of_pareto_is_its_coalition():
    for coalition in range(1 << 3):
        rule = ParetoRule(3, coalition)
        assert minimal_decisive(rule) == coalition
        assert minimal_decisive(rule, strong=True) == coalition


def test_minimal_decisive_relative_to_superset_of_chain_top():
    rule = LexChainRule(3, (0b001, 0b011))
    # once the whole top coalition is neutral, nobody else is needed
    assert minimal_decisive(rule, neutral=0b011) == 0
    assert minimal_decisive(rule, neutral=0b111) == 0


def test_minimal_decisive_strong_lex_relative():
    # chain {1} < {1,2,3}: with voter 2 neutral the head still decides alone
    rule = StrongLexChainRule(3, (0b001, 0b111))
    assert minimal_decisive(rule, neutral=0b010) == 0b001
    # with the head neutral, the whole remaining increment is needed
    assert minimal_decisive(rule, neutral=0b001) == 0b110


def test_extract_trivial_rule():
    cmap = extract_coalition_map(TrivialRule(2))
    assert cmap.table == tuple(range(4))


def test_extract_pareto_map_shape():
    coalition = mask_of([1, 3])
    cmap = extract_coalition_map(ParetoRule(3, coalition))
    assert cmap.table == tuple(coalition | n_set for n_set in range(8))


def test_extract_reference_example(example_map_three_voters):
    rule = CoalitionRule(example_map_three_voters)
    assert extract_coalition_map(rule) == example_map_three_voters


def test_decisive_filter_trivial_rule_is_trivial_filter():
    filt = decisive_filter(TrivialRule(2))
    assert filt.is_trivial
    assert filt.sets == tuple(range(4))
    assert filt.is_filter()


def test_decisive_filter_pareto_is_principal():
    for coalition in range(1 << 3):
        filt = decisive_filter(ParetoRule(3, coalition))
        assert filt == SetFilter.principal(3, coalition)
        assert filt.is_filter()
        assert filt.generator() == coalition


def test_decisive_filter_lexseq_head_generates():
    filt = decisive_filter(LexSequenceRule(2, (1, 2)))
    assert filt == SetFilter.principal(2, 0b01)
    assert filt.is_ultrafilter()


def test_set_filter_axioms():
    assert SetFilter.principal(2, 0b11).is_filter()
    trivial = SetFilter.from_sets(2, range(4))
    assert trivial.is_filter() and trivial.is_trivial and not trivial.is_ultrafilter()
    assert SetFilter.principal(3, 0b001).is_ultrafilter()
    assert not SetFilter.principal(3, 0b011).is_ultrafilter()
    # not upward closed: {1} is in, {1,2} is not
    assert not SetFilter.from_sets(2, [0b01]).is_filter()
    # not intersection closed: {1} and {2} are in, {} is not
    assert not SetFilter.from_sets(2, [0b01, 0b10, 0b11]).is_filter()


def test_set_filter_principal_generator_round_trip():
    for n in (1, 2, 3):
        for gen in range(1 << n):
            filt = SetFilter.principal(n, gen)
            assert filt.is_principal()
            assert filt.generator() == gen


def test_paranoid_mode_matches_worst_case_for_reference_rules():
    rules = [
        TrivialRule(2),
        ParetoRule(2, 0b01),
        ParetoRule(2, 0b11),
        LexSequenceRule(2, (1, 2)),
    ]
    for rule in rules:
        for neutral in range(4):
            for coalition in range(4):
                if coalition & neutral:
                    continue
                for strong in (False, True):
                    fast = is_decisive(rule, coalition, neutral, strong)
                    slow = is_decisive(rule, coalition, neutral, strong, paranoid=True)
                    assert fast == slow, (rule, coalition, neutral, strong)
