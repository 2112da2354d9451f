"""Shared fixtures, random-instance helpers, and the acceptance summary hook."""

from __future__ import annotations

import random

import pytest

from tricomm import WeightedGraph

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def record_criterion(name: str, passed: bool, detail: str = "") -> None:
    ACCEPTANCE_RESULTS.append((name, passed, detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE_RESULTS:
        status = "PASS" if passed else "FAIL"
        line = f"[{status}] {name}"
        if detail:
            line += f" :: {detail}"
        terminalreporter.write_line(line)


def random_graph(seed: int, v: int, p: float, weight_range=(1, 5), integer_weights=True) -> WeightedGraph:
    """Erdos-Renyi style weighted graph, deterministic per seed."""
    rng = random.Random(seed)
    edges = []
    for u in range(v):
        for w in range(u + 1, v):
            if rng.random() < p:
                if integer_weights:
                    weight = float(rng.randint(weight_range[0], weight_range[1]))
                else:
                    weight = rng.uniform(weight_range[0], weight_range[1])
                edges.append((u, w, weight))
    return WeightedGraph(v, edges)


def random_partition(seed: int, v: int, k: int):
    from tricomm import Partition

    rng = random.Random(seed)
    labels = [rng.randrange(k) for _ in range(v)]
    return Partition.from_labels(labels)


@pytest.fixture
def unit_triangle() -> WeightedGraph:
    return WeightedGraph(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)])


@pytest.fixture
def two_unit_triangles() -> WeightedGraph:
    return WeightedGraph(
        6,
        [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0), (3, 4, 1.0), (4, 5, 1.0), (3, 5, 1.0)],
    )
