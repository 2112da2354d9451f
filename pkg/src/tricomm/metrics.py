"""Partition quality and agreement scores: modularity and Rand Index."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, sqrt
from typing import NamedTuple, Sequence

from .graph import WeightedGraph
from .partition import Partition


def modularity(g: WeightedGraph, p: Partition, *, ordered_pair_normalization: bool = False) -> float:
    """Weighted modularity of a partition, in [-1, 1).

    Normalizes by 2m where m counts each unordered edge once, which makes
    the one-community partition score exactly 0. Setting
    ``ordered_pair_normalization`` instead treats the total as the
    double-counted ordered-pair sum (so every term is halved); it exists
    only for comparison output.
    """
    if p.node_count != g.node_count:
        raise ValueError("partition does not cover the graph")
    m = g.total_weight()
    if m == 0:
        raise ValueError("modularity is undefined for a graph with no edge weight")
    norm = 4.0 * m if ordered_pair_normalization else 2.0 * m

    internal = [0.0] * p.k
    strength = [0.0] * p.k
    for u, v, w in g.edges():
        if p.assignment[u] == p.assignment[v]:
            internal[p.assignment[u]] += w
    for n in range(g.node_count):
        strength[p.assignment[n]] += g.weighted_degree(n)
    return sum(2.0 * internal[c] / norm - (strength[c] / norm) ** 2 for c in range(p.k))


@dataclass(frozen=True)
class PairCounts:
    """Co-membership counts over all unordered node pairs of two partitions."""

    m11: int
    m00: int
    m10: int
    m01: int

    @property
    def total(self) -> int:
        return self.m11 + self.m00 + self.m10 + self.m01


def pair_counts(p1: Partition, p2: Partition) -> PairCounts:
    """Count pairs together in both / neither / only the first / only the second."""
    if p1.node_count != p2.node_count:
        raise ValueError("partitions must cover the same nodes")
    v = p1.node_count
    contingency: dict[tuple[int, int], int] = {}
    for c1, c2 in zip(p1.assignment, p2.assignment):
        key = (c1, c2)
        contingency[key] = contingency.get(key, 0) + 1
    m11 = sum(comb(n, 2) for n in contingency.values())
    size1: dict[int, int] = {}
    size2: dict[int, int] = {}
    for c1, c2 in zip(p1.assignment, p2.assignment):
        size1[c1] = size1.get(c1, 0) + 1
        size2[c2] = size2.get(c2, 0) + 1
    same1 = sum(comb(n, 2) for n in size1.values())
    same2 = sum(comb(n, 2) for n in size2.values())
    m10 = same1 - m11
    m01 = same2 - m11
    m00 = comb(v, 2) - m11 - m10 - m01
    return PairCounts(m11=m11, m00=m00, m10=m10, m01=m01)


def rand_index(p1: Partition, p2: Partition) -> float:
    """Fraction of node pairs on which the two partitions agree."""
    if p1.node_count < 2:
        raise ValueError("rand index needs at least two nodes")
    counts = pair_counts(p1, p2)
    return (counts.m11 + counts.m00) / counts.total


class CountSummary(NamedTuple):
    mean: float
    sd: float


def community_count_summary(runs: Sequence[Partition]) -> CountSummary:
    """Mean and population standard deviation of k across runs."""
    if not runs:
        raise ValueError("need at least one partition")
    ks = [p.k for p in runs]
    mean = sum(ks) / len(ks)
    sd = sqrt(sum((k - mean) ** 2 for k in ks) / len(ks))
    return CountSummary(mean=mean, sd=sd)
