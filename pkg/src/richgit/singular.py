"""Irreducible components of singular loci.

Schubert side: the classical run-length substitution.  If the part
sequence of X(w) is (p_1^{q_1}, ..., p_r^{q_r}) then the singular locus
has r - 1 components, the i-th obtained by replacing the adjacent runs
p_i^{q_i}, p_{i+1}^{q_{i+1}} with (p_i - 1)^{q_i + 1}, p_{i+1}^{q_{i+1}-1}.
Note that p_1 - 1 = 0 legitimately creates zero rows and q_{i+1} - 1 = 0
legitimately deletes a run; both are handled by rebuilding the full
length-k part sequence.

Opposite side: X^v is isomorphic to X(v') for the complemented index, so
its components are the complements of the Schubert-side components of v'.

Richardson: the singular locus of X^v_w is the union of the Schubert-side
components intersected with X^v and the opposite-side components
intersected with X(w); empty intersections are dropped via the v <= w
nonemptiness test.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import GrassIndex, RichardsonId, bruhat_leq
from .diagrams import (
    BoxedPartition,
    complement_index,
    from_partition,
    run_length,
    to_partition,
)

SCHUBERT_SIDE = "SCHUBERT_SIDE"
OPPOSITE_SIDE = "OPPOSITE_SIDE"


@dataclass(frozen=True)
class SingularComponent:
    """One irreducible component of a Richardson singular locus, with its origin."""

    pair: RichardsonId
    source: str


@lru_cache(maxsize=None)
def schubert_singular_components(w: GrassIndex) -> tuple[GrassIndex, ...]:
    """Indices of the r - 1 singular-locus components of X(w).

    Empty when the part sequence has at most one nonzero run (X(w) smooth).
    Components are ordered by the run boundary they remove, bottom first.
    """
    p = to_partition(w)
    rl = run_length(p)
    out = []
    for i in range(len(rl.runs) - 1):
        pi, qi = rl.runs[i]
        pnext, qnext = rl.runs[i + 1]
        zeros = rl.zeros
        runs = list(rl.runs[:i])
        if pi - 1 == 0:
            zeros += qi + 1
        else:
            runs.append((pi - 1, qi + 1))
        if qnext - 1 > 0:
            runs.append((pnext, qnext - 1))
        runs.extend(rl.runs[i + 2 :])
        parts = [0] * zeros
        for value, mult in runs:
            parts.extend([value] * mult)
        out.append(from_partition(BoxedPartition(tuple(parts), w.ctx)))
    return tuple(out)


@lru_cache(maxsize=None)
def opposite_singular_components(v: GrassIndex) -> tuple[GrassIndex, ...]:
    """Indices v' of the singular-locus components X^{v'} of X^v."""
    return tuple(
        complement_index(u)
        for u in schubert_singular_components(complement_index(v))
    )


def richardson_singular_components(
    rid: RichardsonId,
) -> tuple[SingularComponent, ...]:
    """Nonempty components of the singular locus of X^v_w, tagged by side.

    Returns the pairs (v, w') for Schubert-side components w' of w with
    v <= w', then the pairs (v', w) for opposite-side components v' of v
    with v' <= w.  Empty for smooth Richardson varieties.
    """
    comps: list[SingularComponent] = []
    seen = set()
    for w2 in schubert_singular_components(rid.w):
        if bruhat_leq(rid.v, w2):
            pair = RichardsonId(rid.v, w2)
            if pair not in seen:
                seen.add(pair)
                comps.append(SingularComponent(pair, SCHUBERT_SIDE))
    for v2 in opposite_singular_components(rid.v):
        if bruhat_leq(v2, rid.w):
            pair = RichardsonId(v2, rid.w)
            if pair not in seen:
                seen.add(pair)
                comps.append(SingularComponent(pair, OPPOSITE_SIDE))
    return tuple(comps)
