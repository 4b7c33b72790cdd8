"""Exact convergence and smoothness analysis of binary linear subdivision schemes."""

__version__ = "0.1.0"

from .errors import MaskParseError, NotDivisible, PreconditionViolated, SubdivisionError, ZeroArgument
from .laurent import (
    LaurentPolynomial,
    ONE_PLUS_Z,
    Z,
    add,
    coset_abs_sums,
    coset_signed_sums,
    divide_by_one_plus_z,
    evaluate,
    multiply,
    symbol_power,
    upsample,
)
from .scheme import (
    Mask,
    Scheme,
    binary_coset_norm,
    check_necessary_conditions,
    difference_symbol,
    even_odd_sums,
    operator_norm,
    symbol_from_mask,
)
from .analyzer import (
    AnalysisReport,
    ConvergenceVerdict,
    Kind,
    Reason,
    analyze_baseline,
    analyze_improved,
    classify_se_so,
    lower_bound_audit,
)
from .smoothness import SmoothnessReport, certify_smoothness, one_plus_z_multiplicity
from .refine import (
    GridSequence,
    apply,
    basic_limit_samples,
    contraction_trace,
    delta,
    polyline,
    refine_float,
    refine_to_level,
)
from . import corpus
