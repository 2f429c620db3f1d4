"""Voting systems on partial preorders: construction, evaluation, and
exhaustive desk-scale classification.

Alternatives are 0-based indices; voters are 1-based and coalitions are int
bitmasks (bit i-1 for voter i).  The central objects are :class:`Preorder`,
:class:`Profile`, the rule families in :mod:`arrovian.rules`, and the
coalition map that classifies every rule satisfying unanimity and pairwise
independence.
"""

from .relations import (
    PairState,
    Preorder,
    apply_permutation,
    enumerate_preorders,
    intersect,
    is_preorder,
    is_subrelation,
    pair_state,
)
from .profiles import (
    PairSignature,
    Profile,
    drop_voters,
    enumerate_profiles,
    extend_with_indifference,
    signature,
    worst_case_profile,
)
from .decisive import (
    CoalitionMap,
    SetFilter,
    decisive_filter,
    extract_coalition_map,
    is_decisive,
    minimal_decisive,
)
from .measurable import (
    Algebra,
    MeasurableMap,
    algebra_from_partition,
    enumerate_measurable_maps,
    enumerate_measurable_profiles,
    extract_measurable_map,
    is_filter,
)
from .rules import (
    CoalitionRule,
    FilterRule,
    LexChainRule,
    LexSequenceRule,
    MeasurableRule,
    ParetoRule,
    RestrictedRule,
    StrongLexChainRule,
    TrivialRule,
    eval_coalition_rule,
    eval_filter,
    eval_lex,
    eval_lex_seq,
    eval_measurable,
    eval_pareto,
    eval_strong_lex,
    restrict_electorate,
)
from .classify import (
    SandwichReport,
    ValidationReport,
    chain_of,
    classify_linear_range,
    enumerate_coalition_maps,
    extend_from_linear,
    lex_chain_map,
    lex_sequence_of,
    order_compare,
    round_trip,
    sandwich_check,
    strong_lex_chain_map,
    to_dot,
    validate_coalition_map,
)
from .axioms import (
    AXIOM_KINDS,
    AxiomReport,
    check_axiom,
    check_axioms,
    is_arrovian,
    profile_space,
)

__version__ = "0.1.0"
