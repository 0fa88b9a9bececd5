"""Semistability and quotient-smoothness criteria (coprime k, n only).

For coprime k < n there is a unique Bruhat-minimal pair (v_min, w_min)
whose Richardson variety admits semistable points: w_min = (a_1, ..., a_k)
with a_i the smallest integer satisfying a_i * k >= i * n, and
v_min = (1, a_1, ..., a_{k-1}).  X^v_w admits semistable points exactly
when v <= v_min and w >= w_min.

The torus quotient of X^v_w is smooth exactly when its semistable locus
avoids the singular locus, i.e. when no singular component admits
semistable points: that is smooth_by_components, the verdict's source of
truth.  smooth_by_pattern is an entry-pattern shortcut evaluated directly
on (v, w) and the a-sequence; the two are cross-checked by the census and
any disagreement is recorded, never silently resolved.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .core import (
    ContextMismatch,
    GrassCtx,
    GrassError,
    GrassIndex,
    RichardsonId,
    make_index,
    richardson_dim,
)
from .singular import richardson_singular_components

EMPTY_QUOTIENT = "EMPTY_QUOTIENT"
SMOOTH = "SMOOTH"
SINGULAR = "SINGULAR"
HYPOTHESIS_NOT_MET = "HYPOTHESIS_NOT_MET"


class NotCoprime(GrassError):
    """Operation requires gcd(k, n) = 1."""


class HypothesisNotMet(GrassError):
    """Pair does not satisfy v <= v_min and w >= w_min."""


@dataclass(frozen=True)
class MinimalPair:
    """The minimal semistable-admitting pair of a coprime context.

    a holds (a_1, ..., a_k); the convention a_0 = 1 is supplied by a_at.
    """

    ctx: GrassCtx
    w_min: GrassIndex
    v_min: GrassIndex
    a: tuple[int, ...]

    def a_at(self, i: int) -> int:
        return 1 if i == 0 else self.a[i - 1]


@lru_cache(maxsize=None)
def minimal_pair(ctx: GrassCtx) -> MinimalPair:
    """Compute (w_min, v_min) for a coprime context; raises NotCoprime otherwise."""
    if not ctx.coprime():
        raise NotCoprime(f"k={ctx.k} and n={ctx.n} are not coprime")
    k, n = ctx.k, ctx.n
    a = tuple((i * n + k - 1) // k for i in range(1, k + 1))
    w_min = make_index(a, ctx)
    v_min = make_index((1,) + a[:-1], ctx)
    if not v_min <= w_min:
        raise GrassError(f"internal: v_min={v_min} not below w_min={w_min}")
    return MinimalPair(ctx=ctx, w_min=w_min, v_min=v_min, a=a)


def has_semistable(rid: RichardsonId, mp: MinimalPair) -> bool:
    """True iff X^v_w admits semistable points: v <= v_min and w >= w_min."""
    if rid.ctx != mp.ctx:
        raise ContextMismatch(f"pair is from {rid.ctx}, minimal pair from {mp.ctx}")
    return rid.v <= mp.v_min and rid.w >= mp.w_min


def _check_hypothesis(rid: RichardsonId, mp: MinimalPair) -> None:
    if not has_semistable(rid, mp):
        raise HypothesisNotMet(
            f"need v <= {mp.v_min} and w >= {mp.w_min}, got v={rid.v} w={rid.w}"
        )


def smooth_by_components(rid: RichardsonId, mp: MinimalPair) -> bool:
    """True iff no singular-locus component of X^v_w admits semistable points."""
    _check_hypothesis(rid, mp)
    return all(
        not has_semistable(comp.pair, mp)
        for comp in richardson_singular_components(rid)
    )


def smooth_by_pattern(rid: RichardsonId, mp: MinimalPair) -> bool:
    """Entry-pattern test on w = (b_1..b_k), v = (c_1..c_k) and a = (a_1..a_k).

    For every j in [2, k]: whenever b_j >= b_{j-1} + 2 require
    a_j >= b_{j-1} + 1, and whenever c_j >= c_{j-1} + 2 require
    a_{j-1} <= c_j + 1.
    """
    _check_hypothesis(rid, mp)
    b, c, a = rid.w.entries, rid.v.entries, mp.a
    for j in range(1, mp.ctx.k):  # 0-based j stands for 1-based j+1
        if b[j] >= b[j - 1] + 2 and not a[j] >= b[j - 1] + 1:
            return False
        if c[j] >= c[j - 1] + 2 and not a[j - 1] <= c[j] + 1:
            return False
    return True


@dataclass(frozen=True)
class ComponentReport:
    """A singular-locus component together with its semistability flag."""

    pair: RichardsonId
    source: str
    has_semistable: bool

    def to_dict(self) -> dict:
        return {
            "v": list(self.pair.v.entries),
            "w": list(self.pair.w.entries),
            "source": self.source,
            "has_semistable": self.has_semistable,
        }


@dataclass(frozen=True)
class AnalysisReport:
    """Full verdict record for one pair (v, w).

    smooth_by_components and smooth_by_pattern are None when the quotient
    is empty (the hypothesis is the semistability criterion itself, so
    HYPOTHESIS_NOT_MET cannot occur for a pair that admits semistable
    points).  The verdict follows smooth_by_components; a disagreement
    with smooth_by_pattern stays visible through the mismatch property.
    """

    pair: RichardsonId
    nonempty: bool
    has_semistable: bool
    components: tuple[ComponentReport, ...]
    smooth_by_components: bool | None
    smooth_by_pattern: bool | None
    verdict: str
    dimension: int

    @property
    def mismatch(self) -> bool:
        return (
            self.smooth_by_components is not None
            and self.smooth_by_pattern is not None
            and self.smooth_by_components != self.smooth_by_pattern
        )

    def to_dict(self) -> dict:
        return {
            "k": self.pair.ctx.k,
            "n": self.pair.ctx.n,
            "v": list(self.pair.v.entries),
            "w": list(self.pair.w.entries),
            "nonempty": self.nonempty,
            "has_semistable": self.has_semistable,
            "dimension": self.dimension,
            "components": [c.to_dict() for c in self.components],
            "smooth_by_components": self.smooth_by_components,
            "smooth_by_pattern": self.smooth_by_pattern,
            "verdict": self.verdict,
        }


def analyze(
    v: Sequence[int] | GrassIndex,
    w: Sequence[int] | GrassIndex,
    ctx: GrassCtx,
) -> AnalysisReport:
    """Analyze the pair (v, w): semistability, singular components, verdict.

    Raises NotCoprime for gcd(k, n) > 1, the make_index errors for invalid
    tuples, and EmptyRichardson when v is not below w.
    """
    mp = minimal_pair(ctx)
    vi = v if isinstance(v, GrassIndex) else make_index(v, ctx)
    wi = w if isinstance(w, GrassIndex) else make_index(w, ctx)
    rid = RichardsonId(vi, wi)

    ss = has_semistable(rid, mp)
    components = tuple(
        ComponentReport(
            pair=comp.pair,
            source=comp.source,
            has_semistable=has_semistable(comp.pair, mp),
        )
        for comp in richardson_singular_components(rid)
    )
    if not ss:
        by_components: bool | None = None
        by_pattern: bool | None = None
        verdict = EMPTY_QUOTIENT
    else:
        by_components = all(not c.has_semistable for c in components)
        by_pattern = smooth_by_pattern(rid, mp)
        verdict = SMOOTH if by_components else SINGULAR

    return AnalysisReport(
        pair=rid,
        nonempty=True,
        has_semistable=ss,
        components=components,
        smooth_by_components=by_components,
        smooth_by_pattern=by_pattern,
        verdict=verdict,
        dimension=richardson_dim(rid),
    )
