"""Weighted automata over tropical semirings with exact rational weights.

The package provides linear representations over max-plus/min-plus (plus the
Boolean and doubled-max-plus semirings), exact spectral primitives (maximum
cycle mean, matrix star), decision procedures (nonpositivity, constant
series, equality and inequality of a max-plus and a min-plus series), and the
constructive pipeline that turns an equivalent max-plus/min-plus pair into a
1-valued and then unambiguous automaton.

Weights are exact rationals (``int`` or ``fractions.Fraction``); the semiring
zero is ``None`` and never carries a value.  All operations are pure and all
results deterministic.
"""

from .automaton import (
    BooleanAutomaton,
    WeightedAutomaton,
    boolean_support,
    hadamard,
    negate_series,
)
from .decisions import (
    DEFAULT_MONOID_CAP,
    Decision,
    boolean_monoid_closure,
    decide_equal_const,
    decide_equal_const_on_support,
    decide_nonpositive,
    decide_series_equal,
    decide_series_leq,
    fatou_normalize,
    fatou_potential,
    nfa_equivalence,
    nfa_inclusion,
)
from .disambiguation import (
    DEFAULT_SUBSET_CAP,
    Covering,
    covering,
    determinize,
    disambiguate,
    extract_one_valued,
    pair_product,
    remove_competitions,
    unambiguous_from_pair,
)
from .errors import (
    AlphabetError,
    CapExceededError,
    DimensionError,
    FormatError,
    NotEqualError,
    NotNonpositiveError,
    OracleBoundError,
    PositiveCycleError,
    TagMismatchError,
    TwaError,
)
from .format import load, parse, save, serialize
from .semiring import (
    BOOLEAN,
    MAX_PLUS,
    MAX_PLUS_PAIR,
    MIN_PLUS,
    boolean_projection,
    format_finite,
    format_weight,
    negate_weight,
    oplus,
    otimes,
    parse_finite,
    parse_weight,
    semiring_for,
)
from .spectral import (
    TropicalMatrix,
    mat_add,
    mat_mul,
    mat_star,
    max_mean_cycle,
    star_vector,
)
from . import oracle, zoo

__version__ = "0.1.0"

__all__ = [
    "BOOLEAN",
    "MAX_PLUS",
    "MAX_PLUS_PAIR",
    "MIN_PLUS",
    "AlphabetError",
    "BooleanAutomaton",
    "CapExceededError",
    "Covering",
    "Decision",
    "DEFAULT_MONOID_CAP",
    "DEFAULT_SUBSET_CAP",
    "DimensionError",
    "FormatError",
    "NotEqualError",
    "NotNonpositiveError",
    "OracleBoundError",
    "PositiveCycleError",
    "TagMismatchError",
    "TropicalMatrix",
    "TwaError",
    "WeightedAutomaton",
    "boolean_monoid_closure",
    "boolean_projection",
    "boolean_support",
    "covering",
    "decide_equal_const",
    "decide_equal_const_on_support",
    "decide_nonpositive",
    "decide_series_equal",
    "decide_series_leq",
    "determinize",
    "disambiguate",
    "extract_one_valued",
    "fatou_normalize",
    "fatou_potential",
    "format_finite",
    "format_weight",
    "hadamard",
    "load",
    "mat_add",
    "mat_mul",
    "mat_star",
    "max_mean_cycle",
    "negate_series",
    "negate_weight",
    "nfa_equivalence",
    "nfa_inclusion",
    "oplus",
    "oracle",
    "otimes",
    "pair_product",
    "parse",
    "parse_finite",
    "parse_weight",
    "remove_competitions",
    "save",
    "semiring_for",
    "serialize",
    "star_vector",
    "unambiguous_from_pair",
    "zoo",
]
