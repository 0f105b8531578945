"""State and transition complexity of incomplete DFAs."""

from ._core import (
    InputError,
    ParseError,
    PartialDfa,
    brute_min_transitions,
    canonicalize,
    chain_star_witness,
    check_bound,
    complement,
    complete_with_sink,
    complexity,
    distinguishing_word,
    enumerate_dfas,
    epsilon_lang,
    equivalent,
    intersection_product,
    minimize,
    parse_dfa,
    predicted_union_symbol_count,
    render_dfa,
    run_suite,
    trim,
    unary_cycle,
    unary_singleton,
    union_multi_witness,
    union_product,
    union_symbol_witness,
    union_total_witness,
    validate,
    verify_lemma1,
)

__all__ = [name for name in dir() if not name.startswith("_")]
