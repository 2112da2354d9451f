"""Triangle enumeration and node-disjoint triangle packing.

A packing is a set of pairwise node-disjoint triangles. Two greedy
strategies are provided (by score, by raw weight) along with an exhaustive
exact solver for small instances that serves as a reference optimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import WeightedGraph


class PackingBudgetError(RuntimeError):
    """Raised when an instance is too large for the exact solver's budget."""


@dataclass(frozen=True, order=True)
class Triangle:
    """A 3-clique (a < b < c) with the sum of its three edge weights."""

    a: int
    b: int
    c: int
    weight: float

    @property
    def nodes(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class PackingResult:
    """A node-disjoint triangle selection.

    ``node_assignment[n]`` is the index into ``selected`` covering node n,
    or None when n is uncovered.
    """

    selected: tuple[Triangle, ...]
    value: float
    node_assignment: tuple[int | None, ...]

    def to_json_dict(self) -> dict:
        return {
            "triangles": [{"nodes": list(t.nodes), "weight": t.weight} for t in self.selected],
            "value": self.value,
        }


def enumerate_triangles(g: WeightedGraph) -> list[Triangle]:
    """All 3-cliques exactly once, canonically ordered a < b < c, sorted."""
    adj_sets = [set(g.neighbors(u)) for u in range(g.node_count)]
    out: list[Triangle] = []
    for u in range(g.node_count):
        higher = [v for v in adj_sets[u] if v > u]
        for v in higher:
            common = adj_sets[u] & adj_sets[v]
            for w in common:
                if w > v:
                    t_w = g.weight(u, v) + g.weight(u, w) + g.weight(v, w)
                    out.append(Triangle(u, v, w, t_w))
    out.sort(key=lambda t: t.nodes)
    return out


def overlap_degrees(triangles: Sequence[Triangle]) -> list[int]:
    """For each triangle, how many other triangles share at least one node."""
    at_node: dict[int, set[int]] = {}
    for idx, t in enumerate(triangles):
        for n in t.nodes:
            at_node.setdefault(n, set()).add(idx)
    return [len(at_node[t.a] | at_node[t.b] | at_node[t.c]) - 1 for t in triangles]


def overlap_degree(triangles: Sequence[Triangle], l: int) -> int:
    """Number of triangles sharing at least one node with triangle ``l``."""
    if not (0 <= l < len(triangles)):
        raise IndexError(f"triangle index {l} out of range")
    return overlap_degrees(triangles)[l]


def eval_score(t_w: float, lam: int) -> float:
    """Selection score of a triangle: weight divided by its overlap count,
    or the bare weight when nothing overlaps it."""
    return t_w / lam if lam != 0 else t_w


def _greedy(g: WeightedGraph, order: list[int], triangles: list[Triangle]) -> PackingResult:
    assignment: list[int | None] = [None] * g.node_count
    selected: list[Triangle] = []
    value = 0.0
    for idx in order:
        t = triangles[idx]
        if assignment[t.a] is None and assignment[t.b] is None and assignment[t.c] is None:
            slot = len(selected)
            selected.append(t)
            value += t.weight
            for n in t.nodes:
                assignment[n] = slot
    return PackingResult(tuple(selected), value, tuple(assignment))


def pack_greedy_eval(g: WeightedGraph) -> PackingResult:
    """Greedy packing in decreasing score order.

    Overlap counts are computed once against the full enumeration; they are
    not refreshed as triangles leave the pool. Ties break on higher weight,
    then on the (a, b, c) triple.
    """
    triangles = enumerate_triangles(g)
    lams = overlap_degrees(triangles)
    order = sorted(
        range(len(triangles)),
        key=lambda i: (-eval_score(triangles[i].weight, lams[i]), -triangles[i].weight, triangles[i].nodes),
    )
    return _greedy(g, order, triangles)


def pack_greedy_weight(g: WeightedGraph) -> PackingResult:
    """Greedy packing in decreasing raw-weight order (baseline strategy)."""
    triangles = enumerate_triangles(g)
    order = sorted(range(len(triangles)), key=lambda i: (-triangles[i].weight, triangles[i].nodes))
    return _greedy(g, order, triangles)


def pack_exact(g: WeightedGraph, *, max_triangles: int = 40, max_nodes: int = 30) -> PackingResult:
    """Maximum-total-weight packing by exhaustive search with pruning.

    Refuses instances beyond the budget so callers can skip exact
    verification instead of hanging. With strictly positive weights the
    optimum is automatically maximal.
    """
    triangles = enumerate_triangles(g)
    if g.node_count > max_nodes:
        raise PackingBudgetError(f"{g.node_count} nodes exceeds exact-solver budget {max_nodes}")
    if len(triangles) > max_triangles:
        raise PackingBudgetError(f"{len(triangles)} triangles exceeds exact-solver budget {max_triangles}")

    order = sorted(range(len(triangles)), key=lambda i: (-triangles[i].weight, triangles[i].nodes))
    tris = [triangles[i] for i in order]
    masks = [(1 << t.a) | (1 << t.b) | (1 << t.c) for t in tris]
    suffix = [0.0] * (len(tris) + 1)
    for i in range(len(tris) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + tris[i].weight

    best_value = -1.0
    best_chosen: list[int] = []
    chosen: list[int] = []

    def dfs(i: int, used: int, value: float) -> None:
        nonlocal best_value, best_chosen
        if value + suffix[i] <= best_value:
            return
        if i == len(tris):
            if value > best_value:
                best_value = value
                best_chosen = chosen.copy()
            return
        if not (masks[i] & used):
            chosen.append(i)
            dfs(i + 1, used | masks[i], value + tris[i].weight)
            chosen.pop()
        dfs(i + 1, used, value)

    dfs(0, 0, 0.0)

    selected = sorted((tris[i] for i in best_chosen), key=lambda t: t.nodes)
    assignment: list[int | None] = [None] * g.node_count
    for slot, t in enumerate(selected):
        for n in t.nodes:
            assignment[n] = slot
    return PackingResult(tuple(selected), max(best_value, 0.0), tuple(assignment))


def validate_packing(g: WeightedGraph, result: PackingResult) -> None:
    """Check a packing from scratch against its host graph.

    Verifies that every selected triple is a triangle of g with the recorded
    weight, that triangles are pairwise node-disjoint, that the value and
    node assignment are consistent, and that no enumerated triangle outside
    the selection could still be added. Raises ValueError on any violation.
    """
    used: dict[int, int] = {}
    value = 0.0
    for slot, t in enumerate(result.selected):
        if not (t.a < t.b < t.c):
            raise ValueError(f"triangle {t.nodes} is not canonically ordered")
        for u, v in ((t.a, t.b), (t.a, t.c), (t.b, t.c)):
            if not g.has_edge(u, v):
                raise ValueError(f"selected triple {t.nodes} misses edge ({u}, {v})")
        recomputed = g.weight(t.a, t.b) + g.weight(t.a, t.c) + g.weight(t.b, t.c)
        if abs(recomputed - t.weight) > 1e-9 * max(1.0, abs(recomputed)):
            raise ValueError(f"triangle {t.nodes} weight {t.weight} != recomputed {recomputed}")
        for n in t.nodes:
            if n in used:
                raise ValueError(f"node {n} covered by two selected triangles")
            used[n] = slot
        value += t.weight
    if abs(value - result.value) > 1e-9 * max(1.0, abs(value)):
        raise ValueError(f"packing value {result.value} != sum of selected weights {value}")
    if len(result.node_assignment) != g.node_count:
        raise ValueError("node_assignment length does not match the graph")
    for n, slot in enumerate(result.node_assignment):
        if slot != used.get(n):
            raise ValueError(f"node_assignment[{n}] = {slot} inconsistent with selection")
    for t in enumerate_triangles(g):
        if all(n not in used for n in t.nodes):
            raise ValueError(f"packing is not maximal: {t.nodes} is still free")
