"""Groebner-basis detection in exact rational arithmetic."""

__version__ = "0.1.0"

from .detect import (
    DetectionResult,
    PureSplit,
    detect_gbd_bruteforce,
    detect_gbd_zero_dim,
    detect_sgbd,
    split_pure,
)
from .gb import (
    GroebnerReport,
    ReductionStep,
    ReductionTrace,
    ZeroDimReport,
    is_groebner_basis,
    is_zero_dimensional_lt,
    normal_form,
    pairwise_coprime_lt,
    reduce_step,
    replay_trace,
    s_polynomial,
)
from .ordersolve import (
    GammaSystem,
    TargetSelection,
    build_gamma,
    permutation_prunable,
    realize_leading_terms,
    solve_strict_system,
)
from .poly import (
    CapExceededError,
    Monomial,
    ParseError,
    Polynomial,
    PolySystem,
    Term,
    WeightOrder,
    format_monomial,
    format_polynomial,
    format_system,
    is_pure_power,
    leading_term,
    mono_degree,
    mono_divides,
    mono_gcd,
    mono_lcm,
    mono_mul,
    mono_quotient,
    monomials_of_degree,
    parse_monomial,
    parse_system,
)
from .reductions import (
    EncodingMap,
    PackingResult,
    SetPackingInstance,
    decode_selection,
    elevate_to_zero_dim,
    encode_set_packing,
    packing_witness_order,
    parse_set_packing,
    solve_set_packing_bruteforce,
)
