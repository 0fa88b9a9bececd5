"""Combinatorial smoothness tests for torus quotients of Richardson varieties.

The library decides, by pure combinatorics on index tuples and Young
diagrams, whether the torus GIT quotient of a Richardson variety X^v_w in
the Grassmannian G(k,n) (k, n coprime) is smooth, and provides the
singular-locus and semistability machinery behind that decision together
with exhaustive cross-validation at small (k, n).
"""

from .core import (
    ContextMismatch,
    EmptyRichardson,
    GrassCtx,
    GrassError,
    GrassIndex,
    NotStrictlyIncreasing,
    OutOfRange,
    RichardsonId,
    WrongLength,
    bruhat_leq,
    enumerate_indices,
    indices_above,
    indices_below,
    length,
    make_index,
    richardson_contains,
    richardson_dim,
    richardson_nonempty,
)
from .criteria import (
    EMPTY_QUOTIENT,
    HYPOTHESIS_NOT_MET,
    SINGULAR,
    SMOOTH,
    AnalysisReport,
    ComponentReport,
    HypothesisNotMet,
    MinimalPair,
    NotCoprime,
    analyze,
    has_semistable,
    minimal_pair,
    smooth_by_components,
    smooth_by_pattern,
)
from .diagrams import (
    BoxedPartition,
    NotAValley,
    RunLength,
    SkewShape,
    complement_index,
    find_valleys,
    from_partition,
    opposite_shape,
    remove_hook,
    render_skew,
    run_length,
    skew_shape,
    to_partition,
)
from .oracle import (
    CensusReport,
    ExampleCheck,
    OracleMismatch,
    PatternMismatch,
    VerifyReport,
    census,
    containment_consistency_failures,
    default_contexts,
    hook_oracle_components,
    oracle_sweep,
    verify,
)
from .singular import (
    OPPOSITE_SIDE,
    SCHUBERT_SIDE,
    SingularComponent,
    opposite_singular_components,
    richardson_singular_components,
    schubert_singular_components,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BoxedPartition",
    "CensusReport",
    "ComponentReport",
    "ContextMismatch",
    "EMPTY_QUOTIENT",
    "EmptyRichardson",
    "ExampleCheck",
    "GrassCtx",
    "GrassError",
    "GrassIndex",
    "HYPOTHESIS_NOT_MET",
    "HypothesisNotMet",
    "MinimalPair",
    "NotAValley",
    "NotCoprime",
    "NotStrictlyIncreasing",
    "OPPOSITE_SIDE",
    "OracleMismatch",
    "OutOfRange",
    "PatternMismatch",
    "RichardsonId",
    "RunLength",
    "SCHUBERT_SIDE",
    "SINGULAR",
    "SMOOTH",
    "SingularComponent",
    "SkewShape",
    "VerifyReport",
    "WrongLength",
    "analyze",
    "bruhat_leq",
    "census",
    "complement_index",
    "containment_consistency_failures",
    "default_contexts",
    "enumerate_indices",
    "find_valleys",
    "from_partition",
    "has_semistable",
    "hook_oracle_components",
    "indices_above",
    "indices_below",
    "length",
    "make_index",
    "minimal_pair",
    "opposite_shape",
    "opposite_singular_components",
    "oracle_sweep",
    "remove_hook",
    "render_skew",
    "richardson_contains",
    "richardson_dim",
    "richardson_nonempty",
    "richardson_singular_components",
    "run_length",
    "schubert_singular_components",
    "skew_shape",
    "smooth_by_components",
    "smooth_by_pattern",
    "to_partition",
    "verify",
]
