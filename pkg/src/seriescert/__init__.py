"""Exact verification for series of unit fractions with fast-growing terms.

Everything computes with arbitrary-size integers and exact rationals;
floats appear only in advisory log columns. The package checks growth
inequalities, produces rational enclosures of the series value, verifies
the rational-approximation inequality at chosen indices, and confronts
polynomial lower bounds with exhaustive search.
"""

from .convergents import (
    Convergent,
    TailShrink,
    convergent_range,
    denominator_bound_holds,
    effective_start,
    partial_sum,
    shrink_decreases,
    shrink_factor,
    shrink_less_than,
)
from .enclosure import Enclosure, enclose, has_tail_guarantee, refine, tail_bound
from .errors import (
    AlphaTooSmallError,
    DigitBudgetError,
    EnumerationTooLargeError,
    ExactnessError,
    HypothesisFailedError,
    InconclusiveError,
    IndexOutOfRangeError,
    InvalidIndexMapError,
    InvalidParameterError,
    NoTailGuaranteeError,
    NotFoundBelowNMaxError,
    NotFoundInWindowError,
    SeriesCertError,
    SpecMismatchError,
    WitnessFailedError,
)
from .measure import (
    BruteForceResult,
    MeasureBound,
    MeasureEvidence,
    N1Result,
    PolynomialInt,
    abs_bracket,
    abs_lower_bound,
    bound,
    brute_force_min,
    enumerate_brackets,
    find_n1,
    q_growth_holds,
    qn_exponent_bound_holds,
    verify_measure,
)
from .sequences import (
    DEFAULT_DIGIT_BUDGET,
    Affine,
    Explicit,
    ExplicitIndices,
    FactorialExponent,
    GrowthCheck,
    GrowthReport,
    Ordering,
    PowerRecurrence,
    SequenceSpec,
    Subseries,
    check_growth,
    check_sandwich,
    checked_pow,
    compare_power,
    subseries,
    term,
)
from .serialize import (
    canonical_dumps,
    certificate_obj,
    parse_rational,
    rational_from_obj,
    rational_obj,
    spec_fingerprint,
    spec_from_obj,
    spec_obj,
)
from .witness import CAVEAT, CONCLUSION, Certificate, Witness, certify, rational_prefix, witness

__version__ = "0.1.0"

__all__ = [
    "Affine",
    "AlphaTooSmallError",
    "BruteForceResult",
    "CAVEAT",
    "CONCLUSION",
    "Certificate",
    "Convergent",
    "DEFAULT_DIGIT_BUDGET",
    "DigitBudgetError",
    "Enclosure",
    "EnumerationTooLargeError",
    "ExactnessError",
    "Explicit",
    "ExplicitIndices",
    "FactorialExponent",
    "GrowthCheck",
    "GrowthReport",
    "HypothesisFailedError",
    "InconclusiveError",
    "IndexOutOfRangeError",
    "InvalidIndexMapError",
    "InvalidParameterError",
    "MeasureBound",
    "MeasureEvidence",
    "N1Result",
    "NoTailGuaranteeError",
    "NotFoundBelowNMaxError",
    "NotFoundInWindowError",
    "Ordering",
    "PolynomialInt",
    "PowerRecurrence",
    "SequenceSpec",
    "SeriesCertError",
    "SpecMismatchError",
    "Subseries",
    "TailShrink",
    "Witness",
    "WitnessFailedError",
    "abs_bracket",
    "abs_lower_bound",
    "bound",
    "brute_force_min",
    "canonical_dumps",
    "certificate_obj",
    "certify",
    "check_growth",
    "check_sandwich",
    "checked_pow",
    "compare_power",
    "convergent_range",
    "denominator_bound_holds",
    "effective_start",
    "enclose",
    "enumerate_brackets",
    "find_n1",
    "has_tail_guarantee",
    "parse_rational",
    "partial_sum",
    "q_growth_holds",
    "qn_exponent_bound_holds",
    "rational_from_obj",
    "rational_obj",
    "rational_prefix",
    "refine",
    "shrink_decreases",
    "shrink_factor",
    "shrink_less_than",
    "spec_fingerprint",
    "spec_from_obj",
    "spec_obj",
    "subseries",
    "tail_bound",
    "term",
    "verify_measure",
    "witness",
]
