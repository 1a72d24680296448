"""Complementary sequence sets with spectral nulls.

Construction of complementary sets and mutually orthogonal families
with non-power-of-two lengths and planted null entries, direct
verification of their correlation properties, OFDM PAPR analysis, and
codebook metrics (size, code-rate, minimum Hamming distance).
"""

from ._backend import backend_name
from .codebook import (
    DMIN_CONTEXTS,
    VARIANTS,
    Codebook,
    CodebookSpec,
    code_rate,
    enumerate_codebook,
    floor_log,
    format_fixed,
    iter_codewords,
    min_hamming_distance,
    predicted_dmin,
    render_table,
    size_formula,
)
from .construct import (
    BaseParams,
    ZeroInsertionPlan,
    base_cs,
    base_quadruple,
    concat_cs,
    iterate,
    mocs_pair,
    seed_ccc,
    zero_insert_step,
)
from .fileio import (
    FORMAT_TAG,
    FileFormatError,
    InvariantViolationError,
    MalformedDocumentError,
    TagMismatchError,
    csv_text,
    emit,
    parse,
)
from .gbf import (
    ConstrainedPermutation,
    GeneralizedBooleanFunction,
    Monomial,
    UnsupportedShapeError,
    add,
    add_term,
    enumerate_constrained_permutations,
    evaluate,
    format_anf,
    evaluate_all,
    function_from_terms,
    parse_anf,
    reduce_for_truncation,
    truncated_sequence,
    zero_function,
)
from .papr import (
    GRID_SLACK,
    PaprBoundReport,
    PaprConfig,
    PowerEnvelope,
    UndefinedEnergyError,
    check_papr_bound,
    envelope,
    papr,
    set_papr,
)
from .seqcore import (
    EXACT_MODULI,
    NULL,
    ComplementarySet,
    ComplexSequence,
    CorrelationValue,
    MocsFamily,
    QarySequence,
    VerificationReport,
    auto_correlation,
    correlation_sum,
    cross_correlation,
    hamming_distance,
    is_complementary_set,
    is_mocs,
    to_complex,
)

__version__ = "0.1.0"

__all__ = [
    "BaseParams",
    "Codebook",
    "CodebookSpec",
    "ComplementarySet",
    "ComplexSequence",
    "ConstrainedPermutation",
    "CorrelationValue",
    "DMIN_CONTEXTS",
    "EXACT_MODULI",
    "FORMAT_TAG",
    "FileFormatError",
    "GRID_SLACK",
    "GeneralizedBooleanFunction",
    "InvariantViolationError",
    "MalformedDocumentError",
    "MocsFamily",
    "Monomial",
    "NULL",
    "PaprBoundReport",
    "PaprConfig",
    "PowerEnvelope",
    "QarySequence",
    "TagMismatchError",
    "UndefinedEnergyError",
    "UnsupportedShapeError",
    "VARIANTS",
    "VerificationReport",
    "ZeroInsertionPlan",
    "add",
    "add_term",
    "auto_correlation",
    "backend_name",
    "base_cs",
    "base_quadruple",
    "check_papr_bound",
    "code_rate",
    "concat_cs",
    "correlation_sum",
    "cross_correlation",
    "csv_text",
    "emit",
    "enumerate_codebook",
    "enumerate_constrained_permutations",
    "envelope",
    "evaluate",
    "evaluate_all",
    "floor_log",
    "format_anf",
    "format_fixed",
    "function_from_terms",
    "hamming_distance",
    "is_complementary_set",
    "is_mocs",
    "iter_codewords",
    "iterate",
    "min_hamming_distance",
    "mocs_pair",
    "papr",
    "parse",
    "parse_anf",
    "predicted_dmin",
    "reduce_for_truncation",
    "render_table",
    "seed_ccc",
    "set_papr",
    "size_formula",
    "to_complex",
    "truncated_sequence",
    "zero_function",
    "zero_insert_step",
]
