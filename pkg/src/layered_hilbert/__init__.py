"""Hilbert series of algebras attached to layered directed graphs, in exact arithmetic."""

from .graph import (
    BottomLevelNotSingleton,
    Edge,
    GraphError,
    GraphSyntaxError,
    LayeredGraph,
    NotPrime,
    Vertex,
    gen_boolean,
    gen_complete,
    gen_subspace,
    geq,
    load_graph,
    parse_graph,
    reachable,
    save_graph,
    serialize_graph,
    validate,
)
from .hilbert import (
    ChainBudgetExceeded,
    DualResult,
    HilbertResult,
    OutOfRange,
    ZetaMatrix,
    closed_complete,
    closed_dual_complete,
    closed_dual_lnq,
    closed_lnq,
    closed_qn,
    denominator_chains,
    denominator_mobius,
    dual_series,
    hilbert_series,
    invert_zeta,
    mobius_table,
    q_binomial,
    qbinomial_theorem_check,
    vertex_series,
    zeta_matrix,
)
from .oracle import Letter, WordCount, count_words, count_words_from, covers, enumerate_words
from .series import (
    IntPoly,
    IntSeries,
    NonUnitConstantTerm,
    NotDivisible,
    RationalFn,
    poly_div_exact,
    poly_mul,
    poly_substitute_neg,
    series_add,
    series_inverse,
    series_mul,
    series_sub,
)

__version__ = "0.1.0"
