"""Counts of the elementary substructures the walk formulas consume.

Everything here is exact integer counting over the proper-edge skeleton:
degree statistics, edges on the loop-set boundary, triangles partitioned by
how many of their vertices carry loops, 4-cycles, and 4-cliques.  A 4-cycle
whose vertex set induces a full 4-clique is booked under the clique count
only; a 4-cycle on a 4-set inducing five edges (a diamond) still counts as
a 4-cycle.  Total 4-cycles therefore decompose as c4_not_k4 + 3 * k4_count.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph_core import SelfLoopGraph

# The three distinct cyclic arrangements of four vertices (a, b, c, d),
# each given by its four edge slots among the six pairs of the 4-set.
_PAIR_INDEX = {(0, 1): 0, (0, 2): 1, (0, 3): 2, (1, 2): 3, (1, 3): 4, (2, 3): 5}
_CYCLE_ARRANGEMENTS = (
    ((0, 1), (1, 2), (2, 3), (0, 3)),   # a-b-c-d-a
    ((0, 1), (1, 3), (2, 3), (0, 2)),   # a-b-d-c-a
    ((0, 2), (1, 2), (1, 3), (0, 3)),   # a-c-b-d-a
)
_CYCLE_SLOTS = tuple(tuple(_PAIR_INDEX[p] for p in arr) for arr in _CYCLE_ARRANGEMENTS)


@dataclass(frozen=True)
class SubgraphCensus:
    """All substructure counts of one graph, per-vertex and aggregate."""

    zagreb1: int
    degree_sum_S: int
    n1_per_vertex: tuple[int, ...]
    n2_per_vertex: tuple[int, ...]
    n1_sum_S: int
    triangles_total: int
    tri_loops: tuple[int, int, int]
    c4_not_k4: int
    k4_count: int

    def as_dict(self) -> dict:
        return {
            "zagreb1": self.zagreb1,
            "degree_sum_S": self.degree_sum_S,
            "n1_per_vertex": list(self.n1_per_vertex),
            "n2_per_vertex": list(self.n2_per_vertex),
            "n1_sum_S": self.n1_sum_S,
            "triangles_total": self.triangles_total,
            "tri_loops": list(self.tri_loops),
            "c4_not_k4": self.c4_not_k4,
            "k4_count": self.k4_count,
        }


def first_zagreb(graph: SelfLoopGraph) -> int:
    """Sum of squared proper degrees."""
    return sum(d * d for d in graph.degrees)


def loop_boundary(graph: SelfLoopGraph) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    """Per-vertex counts of neighbors across the loop-set boundary.

    For a looped vertex, n1 counts its unlooped neighbors and n2 its looped
    neighbors (so n1 + n2 is its degree).  For an unlooped vertex, n1 counts
    its looped neighbors and n2 is zero.  Returns (n1, n2, sum of n1 over
    looped vertices).
    """
    loop_set = graph.loop_set
    n1 = [0] * graph.order
    n2 = [0] * graph.order
    for u, v in graph.edges:
        u_looped = u in loop_set
        v_looped = v in loop_set
        if u_looped and v_looped:
            n2[u] += 1
            n2[v] += 1
        elif u_looped or v_looped:
            n1[u] += 1
            n1[v] += 1
    n1_sum_s = sum(n1[v] for v in graph.loops)
    return tuple(n1), tuple(n2), n1_sum_s


def triangle_census(graph: SelfLoopGraph) -> tuple[int, int, int, int]:
    """(total triangles, and those with exactly 1, 2, 3 looped vertices)."""
    by_loops = _triangles_by_loops(graph)
    return sum(by_loops), by_loops[1], by_loops[2], by_loops[3]


def triangle_census_per_vertex(graph: SelfLoopGraph) -> tuple[tuple[int, int, int, int], ...]:
    """Per vertex: triangles through it with 0, 1, 2, 3 looped vertices."""
    n = graph.order
    per_vertex = [[0, 0, 0, 0] for _ in range(n)]
    masks = graph.neighbor_masks
    loop_mask = graph.loop_mask
    for u, v in graph.edges:
        common = (masks[u] & masks[v]) >> (v + 1)
        w = v + 1
        while common:
            if common & 1:
                r = ((loop_mask >> u) & 1) + ((loop_mask >> v) & 1) + ((loop_mask >> w) & 1)
                per_vertex[u][r] += 1
                per_vertex[v][r] += 1
                per_vertex[w][r] += 1
            common >>= 1
            w += 1
    return tuple(tuple(row) for row in per_vertex)


def _triangles_by_loops(graph: SelfLoopGraph) -> list[int]:
    by_loops = [0, 0, 0, 0]
    masks = graph.neighbor_masks
    loop_mask = graph.loop_mask
    for u, v in graph.edges:
        common = (masks[u] & masks[v]) >> (v + 1)
        w = v + 1
        while common:
            if common & 1:
                r = ((loop_mask >> u) & 1) + ((loop_mask >> v) & 1) + ((loop_mask >> w) & 1)
                by_loops[r] += 1
            common >>= 1
            w += 1
    return by_loops


def four_cycle_census(graph: SelfLoopGraph) -> tuple[int, int]:
    """(4-cycles whose vertex set does not induce a 4-clique, 4-cliques)."""
    c4_at, k4_at, c4, k4 = _four_cycles(graph)
    return c4, k4


def four_cycle_census_per_vertex(graph: SelfLoopGraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Per-vertex counts of non-clique 4-cycles and 4-cliques through it."""
    c4_at, k4_at, _, _ = _four_cycles(graph)
    return tuple(c4_at), tuple(k4_at)


def _four_cycles(graph: SelfLoopGraph) -> tuple[list[int], list[int], int, int]:
    n = graph.order
    masks = graph.neighbor_masks
    c4_at = [0] * n
    k4_at = [0] * n
    c4_total = 0
    k4_total = 0
    for quad in combinations(range(n), 4):
        present = tuple(
            (masks[quad[i]] >> quad[j]) & 1
            for i, j in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
        )
        edge_count = sum(present)
        if edge_count < 4:
            continue
        if edge_count == 6:
            k4_total += 1
            for v in quad:
                k4_at[v] += 1
            continue
        cycles = 0
        for slots in _CYCLE_SLOTS:
            if present[slots[0]] and present[slots[1]] and present[slots[2]] and present[slots[3]]:
                cycles += 1
        if cycles:
            c4_total += cycles
            for v in quad:
                c4_at[v] += cycles
    return c4_at, k4_at, c4_total, k4_total


def subgraph_census(graph: SelfLoopGraph) -> SubgraphCensus:
    """Compute every count the closed-walk formulas need, in one pass."""
    degrees = graph.degrees
    n1, n2, n1_sum_s = loop_boundary(graph)
    tri_total, t1, t2, t3 = triangle_census(graph)
    c4, k4 = four_cycle_census(graph)
    return SubgraphCensus(
        zagreb1=sum(d * d for d in degrees),
        degree_sum_S=sum(degrees[v] for v in graph.loops),
        n1_per_vertex=n1,
        n2_per_vertex=n2,
        n1_sum_S=n1_sum_s,
        triangles_total=tri_total,
        tri_loops=(t1, t2, t3),
        c4_not_k4=c4,
        k4_count=k4,
    )
