"""Quasitrivial n-ary semigroups on finite sets: predicates, reductions,
orderings, decision procedures and enumeration."""

from .analysis import (
    AnalysisReport,
    SymmetricClass,
    UniredAssertions,
    analyze,
    is_associative_fast,
    symmetric_classification,
    unired_equivalences,
)
from .enumeration import (
    CountsReport,
    brute_count,
    count_a2_1,
    count_q2,
    count_q2_1,
    count_qn,
    count_qn_0,
    count_qn_1,
    count_qn_2,
    count_qs_family,
    formula_counts,
    generate_quasitrivial_associative_binary,
    generate_quasitrivial_tables,
    stirling2,
    table1_golden,
)
from .errors import *  # noqa: F401,F403
from .formats import format_table, format_tables, parse_table, parse_tables
from .orderings import (
    KimuraSpec,
    WeakOrdering,
    build_kimura,
    kimura_form,
    matches_kimura,
    max_n,
    ordering_from_preimages,
    total_orderings,
    weak_orderings,
)
from .reduction import (
    BinaryClass,
    Reduction,
    ReductionSet,
    all_binary_reductions,
    candidate_reduction,
    classify_binary,
    compose_binary,
    compose_ternary,
    reduction_from_neutral,
    ternary_reduction,
)
from .tables import (
    ContourPartition,
    OperationTable,
    PreimageSequence,
    annihilator,
    contour_components,
    evaluate,
    is_associative_naive,
    is_bisymmetric,
    is_idempotent,
    is_order_preserving,
    is_quasitrivial,
    is_symmetric,
    make_table,
    neutral_elements,
    preimage_sequence,
)

__version__ = "0.1.0"
