"""Self-loop graph values and their basic derived quantities.

A graph here is a simple undirected graph together with a subset of vertices
carrying one loop each.  Loops are stored as a vertex subset, never as matrix
entries or edge pairs, so vertex degrees count proper edges only; the
adjacency matrix (with unit diagonal entries on looped vertices) is derived
on demand.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DuplicateEdge, IndexOutOfRange, SelfPairInEdgeList

# Dense symmetric 0/1 matrix; entry (i, i) is 1 exactly for looped vertices.
AdjacencyMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SelfLoopGraph:
    """Immutable graph with loops attached at a vertex subset.

    Vertices are the dense integers 0..order-1.  ``edges`` holds proper
    edges as sorted (u, v) pairs with u < v; ``loops`` is the sorted tuple
    of looped vertices.  The degree of a vertex counts proper edges only.
    """

    order: int
    edges: tuple[tuple[int, int], ...]
    loops: tuple[int, ...]

    @property
    def size(self) -> int:
        """Number of proper edges (loops excluded)."""
        return len(self.edges)

    @property
    def sigma(self) -> int:
        """Number of looped vertices."""
        return len(self.loops)

    @cached_property
    def loop_set(self) -> frozenset[int]:
        return frozenset(self.loops)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Sorted proper-edge neighbor lists, one per vertex."""
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.neighbors)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Neighborhoods as bitmasks, bit v set iff v is adjacent."""
        masks = [0] * self.order
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def loop_mask(self) -> int:
        mask = 0
        for v in self.loops:
            mask |= 1 << v
        return mask

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.neighbors)


def build(order: int,
          edge_list: Iterable[Sequence[int]],
          loop_list: Iterable[int] = ()) -> SelfLoopGraph:
    """Validate and canonicalize a graph description.

    Edge pairs may come in either orientation; they are normalized to
    (min, max).  Rejects out-of-range indices, pairs {v, v} in the edge
    list, and duplicate edges or loops.
    """
    if order < 1:
        raise IndexOutOfRange(f"order must be a positive integer, got {order}")

    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for pair in edge_list:
        u, v = pair
        if not (0 <= u < order and 0 <= v < order):
            raise IndexOutOfRange(f"edge ({u}, {v}) out of range for order {order}")
        if u == v:
            raise SelfPairInEdgeList(
                f"pair ({u}, {v}) in the edge list; put loops in the loop list")
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise DuplicateEdge(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))

    loop_seen: set[int] = set()
    loops: list[int] = []
    for v in loop_list:
        if not 0 <= v < order:
            raise IndexOutOfRange(f"loop at {v} out of range for order {order}")
        if v in loop_seen:
            raise DuplicateEdge(f"duplicate loop at {v}")
        loop_seen.add(v)
        loops.append(v)

    return SelfLoopGraph(order=order, edges=tuple(sorted(edges)),
                         loops=tuple(sorted(loops)))


def adjacency(graph: SelfLoopGraph) -> AdjacencyMatrix:
    """Dense symmetric adjacency matrix; trace equals the loop count."""
    n = graph.order
    loop_set = graph.loop_set
    rows = [[0] * n for _ in range(n)]
    for u, v in graph.edges:
        rows[u][v] = 1
        rows[v][u] = 1
    for v in loop_set:
        rows[v][v] = 1
    return tuple(tuple(row) for row in rows)


def is_connected(graph: SelfLoopGraph) -> bool:
    """Breadth-first reachability over proper edges; loops never matter."""
    n = graph.order
    if n == 1:
        return True
    nbrs = graph.neighbors
    seen = bytearray(n)
    seen[0] = 1
    queue = deque((0,))
    count = 1
    while queue:
        u = queue.popleft()
        for w in nbrs[u]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                queue.append(w)
    return count == n
