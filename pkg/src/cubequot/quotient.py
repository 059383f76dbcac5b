"""Orbit partitions of the n-cube under a subgroup and the quotient graph.

Vertices of Q_n are the integers 0..2^n-1. Orbits are computed by sweeping
vertices in ascending order and marking whole orbits, so the representative
of an orbit is its numerically smallest vertex and orbit ids are sorted by
representative; vertex labels of the quotient graph are the representative
bit strings (coordinate 1 leftmost). Distinct orbits are adjacent whenever
some member of one is cube-adjacent to a member of the other; loops are
discarded. Semiregularity is not required, so degenerate quotients can be
built and inspected.
"""

from __future__ import annotations

from typing import Sequence

from .cube_symmetry import BitVector, CubeGroup
from .errors import DimensionMismatch, DimensionTooLarge, Unsupported
from .graph_core import SimpleGraph

MAX_QUOTIENT_DIMENSION = 20


class QuotientGraph:
    """The quotient of Q_n by the orbit partition of a subgroup."""

    __slots__ = ("n", "group", "reps", "orbit_index", "graph")

    def __init__(
        self,
        n: int,
        group: CubeGroup,
        reps: Sequence[int],
        orbit_index: Sequence[int],
        graph: SimpleGraph,
    ):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "reps", tuple(reps))
        object.__setattr__(self, "orbit_index", tuple(orbit_index))
        object.__setattr__(self, "graph", graph)

    def __setattr__(self, *_):
        raise AttributeError("QuotientGraph is immutable")

    @property
    def vertex_count(self) -> int:
        return len(self.reps)

    def orbit_of_zero(self) -> int:
        return self.orbit_index[0]

    def __repr__(self) -> str:
        return f"QuotientGraph(n={self.n}, |K|={self.group.order}, vertices={len(self.reps)})"


def build_quotient(K: CubeGroup) -> QuotientGraph:
    """Quotient graph of Q_n by K, deterministic orbit ids."""
    n = K.n
    if n > MAX_QUOTIENT_DIMENSION:
        raise DimensionTooLarge(
            f"quotient construction enumerates 2^n vertices; n={n} exceeds {MAX_QUOTIENT_DIMENSION}"
        )
    if K.elements is None:
        raise Unsupported("quotient construction needs the group element list")
    size = 1 << n
    actions = [(g.translation.bits, g.perm.images) for g in K.elements]
    orbit_index = [-1] * size
    reps: list[int] = []
    for v in range(size):
        if orbit_index[v] != -1:
            continue
        oid = len(reps)
        reps.append(v)
        for ybits, images in actions:
            w = ybits
            m = v
            while m:
                lsb = m & -m
                w ^= 1 << images[lsb.bit_length() - 1]
                m ^= lsb
            orbit_index[w] = oid
    adj = [0] * len(reps)
    for v in range(size):
        a = orbit_index[v]
        for i in range(n):
            b = orbit_index[v ^ (1 << i)]
            if a != b:
                adj[a] |= 1 << b
    labels = [BitVector(n, r).to_string() for r in reps]
    graph = SimpleGraph(len(reps), adj, labels)
    return QuotientGraph(n, K, reps, orbit_index, graph)


def natural_map(Q: QuotientGraph, v: BitVector) -> int:
    """Orbit id of a cube vertex; constant on K-orbits."""
    if v.n != Q.n:
        raise DimensionMismatch(f"vertex has n={v.n}, quotient has n={Q.n}")
    return Q.orbit_index[v.bits]


def sphere(Q: QuotientGraph, base: int, level: int) -> tuple[int, ...]:
    """Orbit ids at graph distance `level` from orbit `base`, ascending."""
    if level < 0:
        raise ValueError("level must be non-negative")
    masks = Q.graph.bfs_level_masks(base)
    if level >= len(masks):
        return ()
    out = []
    m = masks[level]
    while m:
        lsb = m & -m
        out.append(lsb.bit_length() - 1)
        m ^= lsb
    return tuple(out)


def natural_covering(Q: QuotientGraph):
    """The natural projection packaged as a covering-map candidate."""
    from .covering import CoveringMap

    return CoveringMap(Q.n, Q.graph, Q.orbit_index)
