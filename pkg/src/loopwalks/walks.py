"""Exact closed-walk counters and per-family closed forms.

The general counters express the number of closed 1..4-walks through degree
statistics and the subgraph census; the per-family closed forms are pure
arithmetic on a family description and never touch a graph, so the two
routes cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .census import SubgraphCensus, subgraph_census, triangle_census
from .errors import InvalidLoopPlacement, NotAPathOrCycle, UnsupportedFamily
from .families import FamilySpec
from .graph_core import SelfLoopGraph, is_connected


@dataclass(frozen=True)
class WalkCounts:
    """Closed walk totals for lengths 1 through 4."""

    w1: int
    w2: int
    w3: int
    w4: int


@dataclass(frozen=True)
class PathLoopProfile:
    """Loop-placement statistics along a path or cycle.

    ``run_count`` is the number of maximal blocks of two or more
    consecutive looped vertices; ``sigma_na`` counts looped vertices with
    no looped neighbor.  On a path, ``sigma_e``/``sigma_ne`` split the
    loops by endpoint status; cycles have no endpoints so sigma_e is 0.
    """

    sigma_e: int
    sigma_ne: int
    run_count: int
    sigma_na: int


def w2_formula(graph: SelfLoopGraph) -> int:
    """Closed 2-walks: twice the size plus the loop count."""
    return 2 * graph.size + graph.sigma


def w3_formula(graph: SelfLoopGraph) -> int:
    """Closed 3-walks from looped degrees and the triangle count."""
    degrees = graph.degrees
    triangles_total = triangle_census(graph)[0]
    return (3 * sum(degrees[v] for v in graph.loops)
            + 6 * triangles_total + graph.sigma)


def w4_formula(graph: SelfLoopGraph, census: SubgraphCensus | None = None) -> int:
    """Closed 4-walks from the full subgraph census."""
    c = census if census is not None else subgraph_census(graph)
    t1, t2, t3 = c.tri_loops
    return (graph.sigma
            + 2 * (c.zagreb1 - graph.size)
            + 6 * c.degree_sum_S
            - 2 * c.n1_sum_S
            + 8 * (t1 + 2 * t2 + 3 * t3 + c.c4_not_k4 + 3 * c.k4_count))


def walk_counts(graph: SelfLoopGraph) -> WalkCounts:
    """All four closed-walk totals, sharing a single census pass."""
    c = subgraph_census(graph)
    w3 = 3 * c.degree_sum_S + 6 * c.triangles_total + graph.sigma
    return WalkCounts(w1=graph.sigma,
                      w2=2 * graph.size + graph.sigma,
                      w3=w3,
                      w4=w4_formula(graph, census=c))


# -- per-family closed forms ------------------------------------------


def closed_form_w3(spec: FamilySpec) -> int:
    """Closed 3-walk count of a family, by arithmetic on the description alone."""
    family = spec.family
    sigma = spec.sigma
    if family == "complete":
        n = spec.n
        return sigma * (3 * n - 2) + n * (n - 1) * (n - 2)
    if family == "complete_bipartite":
        sigma_a, sigma_b = spec.part_loop_counts()
        return 3 * (spec.b * sigma_a + spec.a * sigma_b) + sigma
    if family in ("kneser", "petersen"):
        k = spec.k if family == "kneser" else 2
        return sigma * (3 * k + 4)
    if family == "cycle":
        return 7 * sigma + 6 if spec.n == 3 else 7 * sigma
    if family == "wheel":
        if spec.n < 5:
            raise UnsupportedFamily(
                "wheel closed form needs n >= 5; the order-4 wheel is a "
                "4-clique with four triangles, not n - 1")
        if spec.center_looped:
            return 10 * sigma + 9 * (spec.n - 2)
        return 10 * sigma + 6 * (spec.n - 1)
    raise UnsupportedFamily(f"no closed 3-walk form for family {family!r}")


def closed_form_w4(spec: FamilySpec) -> int:
    """Closed 4-walk count of a family, by arithmetic on the description alone."""
    family = spec.family
    if family == "complete":
        if spec.n < 4:
            raise UnsupportedFamily("complete-graph closed form needs n >= 4")
        if spec.sigma != 0:
            raise InvalidLoopPlacement(
                "complete-graph closed form covers the loopless case only")
        n = spec.n
        return n * (n - 1) * (2 * n - 3) + n * (n - 1) * (n - 2) * (n - 3)
    if family == "complete_bipartite":
        sigma_a, sigma_b = spec.part_loop_counts()
        return (sigma_a * (4 * spec.b + 1) + sigma_b * (4 * spec.a + 1)
                + 4 * sigma_a * sigma_b + 2 * spec.a ** 2 * spec.b ** 2)
    if family == "star":
        center_loops, leaf_loops = spec.part_loop_counts()
        n = spec.n
        if center_loops == 0:
            return 2 * (n - 1) ** 2 + 5 * leaf_loops
        return 2 * (n - 1) ** 2 + 9 * leaf_loops + 4 * n - 3
    if family == "path":
        return _path_w4(spec)
    if family == "cycle":
        return _cycle_w4(spec)
    raise UnsupportedFamily(f"no closed 4-walk form for family {family!r}")


def _path_w4(spec: FamilySpec) -> int:
    n = spec.n
    if n < 2:
        raise UnsupportedFamily("path closed form needs n >= 2")
    sigma = spec.sigma
    flags = _loop_flags(n, spec.loops)
    sigma_e = int(flags[0]) + int(flags[-1])
    sigma_ne = sigma - sigma_e
    runs, isolated = _loop_blocks(flags, cyclic=False)
    if sigma_e == 0 and runs > 0:
        return 2 * (3 * n - 5) + 13 * sigma - 4 * (runs + isolated)
    if runs == 0:
        return 2 * (3 * n - 5) + sigma + 4 * (2 * sigma_ne + sigma_e)
    raise InvalidLoopPlacement(
        "no closed form when a looped endpoint meets adjacent loops; "
        "use the general counter")


def _cycle_w4(spec: FamilySpec) -> int:
    n = spec.n
    sigma = spec.sigma
    flags = _loop_flags(n, spec.loops)
    runs, isolated = _loop_blocks(flags, cyclic=True)
    # A block covering the whole cycle has no unlooped ends, so it drops
    # out of the boundary correction entirely.
    boundary_runs = 0 if sigma == n else runs
    correction = 4 * (boundary_runs + isolated)
    if n == 3:
        return 18 + 21 * sigma - correction
    if n == 4:
        return 32 + 13 * sigma - correction
    return 6 * n + 13 * sigma - correction


def _loop_flags(n: int, loops: tuple[int, ...]) -> list[bool]:
    flags = [False] * n
    for v in loops:
        flags[v] = True
    return flags


def _loop_blocks(flags: list[bool], cyclic: bool) -> tuple[int, int]:
    """(maximal blocks of >= 2 consecutive loops, isolated loops)."""
    n = len(flags)
    total = sum(flags)
    if total == 0:
        return 0, 0
    if total == n:
        if cyclic:
            return 1, 0
        return (1, 0) if n >= 2 else (0, 1)
    seq = flags
    if cyclic:
        pivot = flags.index(False)
        seq = flags[pivot:] + flags[:pivot]
    runs = 0
    isolated = 0
    length = 0
    for flag in seq + [False]:
        if flag:
            length += 1
        else:
            if length == 1:
                isolated += 1
            elif length >= 2:
                runs += 1
            length = 0
    return runs, isolated


def path_loop_profile(graph: SelfLoopGraph) -> PathLoopProfile:
    """Loop-run statistics of a graph that is a path or a cycle."""
    layout, cyclic = _linear_layout(graph)
    loop_set = graph.loop_set
    flags = [v in loop_set for v in layout]
    if cyclic:
        sigma_e = 0
    elif len(layout) == 1:
        sigma_e = int(flags[0])
    else:
        sigma_e = int(flags[0]) + int(flags[-1])
    runs, isolated = _loop_blocks(flags, cyclic=cyclic)
    return PathLoopProfile(sigma_e=sigma_e,
                           sigma_ne=graph.sigma - sigma_e,
                           run_count=runs,
                           sigma_na=isolated)


def _linear_layout(graph: SelfLoopGraph) -> tuple[list[int], bool]:
    n = graph.order
    degrees = graph.degrees
    if graph.size == n - 1 and all(d <= 2 for d in degrees) and is_connected(graph):
        if n == 1:
            return [0], False
        start = min(v for v in range(n) if degrees[v] == 1)
        return _walk_layout(graph, start), False
    if n >= 3 and graph.size == n and all(d == 2 for d in degrees) and is_connected(graph):
        return _walk_layout(graph, 0), True
    raise NotAPathOrCycle(
        f"graph with order {n}, size {graph.size} is neither a path nor a cycle")


def _walk_layout(graph: SelfLoopGraph, start: int) -> list[int]:
    layout = [start]
    previous = -1
    current = start
    for _ in range(graph.order - 1):
        step = next(w for w in graph.neighbors[current] if w != previous)
        layout.append(step)
        previous, current = current, step
    return layout
