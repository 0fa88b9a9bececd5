"""Young diagrams inside the k x (n-k) rectangle, and their local features.

An index w in I(k,n) corresponds to the weakly increasing part sequence
(w_1 - 1, ..., w_k - k); row i (counted from the bottom, 1-based) of the
Young diagram holds parts[i] left-justified boxes.  That single internal
convention is used everywhere; rendering flips rows only at output time.

Opposite diagrams (the right-anchored complements of ordinary diagrams)
are never manipulated directly: every opposite-side computation routes
through complement_index and the ordinary machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby

from .core import GrassCtx, GrassError, GrassIndex, RichardsonId


class NotAValley(GrassError):
    """Hook removal was requested at a row that is not a valley."""


@dataclass(frozen=True)
class BoxedPartition:
    """Row lengths of a Young diagram, bottom row first, weakly increasing."""

    parts: tuple[int, ...]
    ctx: GrassCtx

    def __post_init__(self) -> None:
        k, width = self.ctx.k, self.ctx.n - self.ctx.k
        if len(self.parts) != k:
            raise GrassError(f"expected {k} rows for {self.ctx}, got {len(self.parts)}")
        prev = 0
        for i, p in enumerate(self.parts, start=1):
            if not 0 <= p <= width:
                raise GrassError(f"row {i} has {p} boxes, outside [0, {width}]")
            if p < prev:
                raise GrassError(f"row {i} has {p} boxes, fewer than row {i - 1}")
            prev = p

    def boxes(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class RunLength:
    """Run-length view of a partition: zero rows, then (value, multiplicity) runs."""

    zeros: int
    runs: tuple[tuple[int, int], ...]

    def expand(self) -> tuple[int, ...]:
        parts = [0] * self.zeros
        for value, mult in self.runs:
            parts.extend([value] * mult)
        return tuple(parts)


def to_partition(w: GrassIndex) -> BoxedPartition:
    """Part sequence of the diagram of X(w): row i holds w_i - i boxes."""
    return BoxedPartition(
        tuple(e - i for i, e in enumerate(w.entries, start=1)), w.ctx
    )


def from_partition(p: BoxedPartition) -> GrassIndex:
    """Inverse of to_partition: entry i is parts[i] + i."""
    return GrassIndex(
        tuple(part + i for i, part in enumerate(p.parts, start=1)), p.ctx
    )


def complement_index(v: GrassIndex) -> GrassIndex:
    """The involution v'_i = n + 1 - v_{k+1-i}.

    It reverses the Bruhat order and flips the Young diagram: the diagram
    of v' is the 180-degree rotation of the complement of the diagram of v
    inside the rectangle.  The opposite Schubert variety X^v is isomorphic
    to the Schubert variety X(v'), which is how everything opposite-side
    is computed here.
    """
    n = v.ctx.n
    return GrassIndex(tuple(n + 1 - e for e in reversed(v.entries)), v.ctx)


def opposite_shape(v: GrassIndex) -> tuple[int, ...]:
    """Box counts of the right-anchored opposite diagram of v, bottom row first.

    Row i holds n - k - v_i + i boxes; the sequence is weakly decreasing,
    so it is returned as a plain tuple rather than a BoxedPartition.
    """
    width = v.ctx.n - v.ctx.k
    return tuple(width - (e - i) for i, e in enumerate(v.entries, start=1))


def run_length(p: BoxedPartition) -> RunLength:
    """Zero-row count plus the nonzero runs (value, multiplicity), values increasing."""
    zeros = sum(1 for part in p.parts if part == 0)
    runs = tuple(
        (value, len(list(group)))
        for value, group in groupby(part for part in p.parts if part > 0)
    )
    return RunLength(zeros=zeros, runs=runs)


def find_valleys(p: BoxedPartition) -> tuple[int, ...]:
    """Rows j (1-based, from the bottom) holding a valley of the diagram.

    A valley is a box with boxes to its south and east but none to its
    southeast; row j carries one exactly when parts[j] > parts[j-1] >= 1,
    i.e. at each boundary between two nonzero runs.
    """
    return tuple(
        j
        for j in range(2, len(p.parts) + 1)
        if p.parts[j - 1] > p.parts[j - 2] >= 1
    )


def remove_hook(p: BoxedPartition, valley_row: int) -> BoxedPartition:
    """Remove the hook through the valley at valley_row (two peaks + valley).

    The run of rows ending just below the valley drops by one box each,
    the valley row drops to that same shorter value, and every other row
    is unchanged.  In run-length terms (p_i^{q_i}, p_{i+1}^{q_{i+1}}, ...)
    around the valley becomes ((p_i - 1)^{q_i + 1}, p_{i+1}^{q_{i+1}-1}, ...).
    """
    if valley_row not in find_valleys(p):
        raise NotAValley(f"row {valley_row} of {p} is not a valley")
    j0 = valley_row - 1
    below = p.parts[j0 - 1]
    start = j0 - 1
    while start > 0 and p.parts[start - 1] == below:
        start -= 1
    parts = (
        p.parts[:start]
        + (below - 1,) * (j0 - start + 1)
        + p.parts[j0 + 1 :]
    )
    return BoxedPartition(parts, p.ctx)


@dataclass(frozen=True)
class SkewShape:
    """Outer and inner diagrams of a Richardson pair; the skew region is their difference."""

    outer: BoxedPartition
    inner: BoxedPartition

    def __post_init__(self) -> None:
        if self.outer.ctx != self.inner.ctx:
            raise GrassError("outer and inner partitions have different contexts")
        for i, (o, inn) in enumerate(zip(self.outer.parts, self.inner.parts), start=1):
            if inn > o:
                raise GrassError(f"inner row {i} ({inn}) exceeds outer row {i} ({o})")

    @property
    def ctx(self) -> GrassCtx:
        return self.outer.ctx

    def render(self) -> str:
        """ASCII grid, top row of the rectangle first.

        Cell (row i from the bottom, column c) prints 'v' inside the inner
        diagram, '#' in the skew region, '.' outside the outer diagram.
        No trailing whitespace; rows joined by newlines.
        """
        width = self.ctx.n - self.ctx.k
        lines = []
        for i in range(self.ctx.k, 0, -1):
            inn, out = self.inner.parts[i - 1], self.outer.parts[i - 1]
            lines.append("v" * inn + "#" * (out - inn) + "." * (width - out))
        return "\n".join(lines)


def skew_shape(rid: RichardsonId) -> SkewShape:
    return SkewShape(outer=to_partition(rid.w), inner=to_partition(rid.v))


def render_skew(rid: RichardsonId) -> str:
    """Text grid of the skew diagram of X^v_w; see SkewShape.render.

    Emits exactly length(v) 'v' cells and dim X^v_w '#' cells.
    """
    return skew_shape(rid).render()
