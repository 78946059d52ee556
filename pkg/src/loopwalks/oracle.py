"""Independent ground truth for closed-walk counts.

Two routes that share no logic with the census-based formulas: a naive
depth-first enumeration of walk sequences, and exact integer traces of
adjacency-matrix powers.  The enumeration is deliberately memoization-free
so that it cannot inherit a bug from the formula path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeLimitExceeded
from .graph_core import SelfLoopGraph, adjacency

_MAX_ENUM_K = 8
_MAX_ENUM_ORDER = 12


@dataclass(frozen=True)
class WalkEnumeration:
    """Closed k-walk counts found by explicit sequence enumeration."""

    k: int
    per_vertex: tuple[int, ...]
    total: int


def enumerate_closed_walks(graph: SelfLoopGraph, k: int) -> WalkEnumeration:
    """Count all vertex sequences v0,...,vk with vk = v0 where each step
    follows a proper edge or, on a looped vertex, stays in place.

    Guarded to k <= 8 and order <= 12; the cost is exponential in k.
    """
    if k < 0:
        raise ValueError(f"walk length must be nonnegative, got {k}")
    if k > _MAX_ENUM_K or graph.order > _MAX_ENUM_ORDER:
        raise SizeLimitExceeded(
            f"enumeration guarded to k <= {_MAX_ENUM_K} and order <= {_MAX_ENUM_ORDER}; "
            f"got k={k}, order={graph.order}")

    loop_set = graph.loop_set
    moves: list[tuple[int, ...]] = []
    for v in range(graph.order):
        step = list(graph.neighbors[v])
        if v in loop_set:
            step.append(v)
        moves.append(tuple(step))
    move_masks = [0] * graph.order
    for v, step in enumerate(moves):
        for w in step:
            move_masks[v] |= 1 << w

    per_vertex = tuple(_count_closed_from(moves, move_masks, v0, k)
                       for v0 in range(graph.order))
    return WalkEnumeration(k=k, per_vertex=per_vertex, total=sum(per_vertex))


def _count_closed_from(moves: list[tuple[int, ...]], move_masks: list[int],
                       v0: int, k: int) -> int:
    if k == 0:
        return 1
    count = 0
    bit = 1 << v0

    def descend(v: int, remaining: int) -> None:
        nonlocal count
        if remaining == 1:
            if move_masks[v] & bit:
                count += 1
            return
        nxt = remaining - 1
        for w in moves[v]:
            descend(w, nxt)

    descend(v0, k)
    return count


def trace_power(graph: SelfLoopGraph, k: int) -> int:
    """Exact integer trace of the k-th power of the adjacency matrix."""
    if k < 0:
        raise ValueError(f"power must be nonnegative, got {k}")
    if k == 0:
        return graph.order
    return sum(matrix_power_diagonal(graph, k))


def matrix_power_diagonal(graph: SelfLoopGraph, k: int) -> tuple[int, ...]:
    """Diagonal of the k-th adjacency power, as exact integers (k >= 1)."""
    if k < 1:
        raise ValueError(f"power must be at least 1, got {k}")
    base = [list(row) for row in adjacency(graph)]
    power = base
    for _ in range(k - 1):
        power = _int_matmul(power, base)
    return tuple(power[i][i] for i in range(graph.order))


def _int_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]
