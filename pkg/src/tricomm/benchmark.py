"""Synthetic weighted benchmark instances with planted communities.

Instances are built by stub matching: every node draws internal and external
edge stubs whose expected counts follow the topology mixing fraction, and
edge weights are scaled so the expected external share of a node's strength
follows the weight mixing fraction. A reader for externally produced
benchmark files (1-indexed "u v w" plus "node community") is included.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass
from typing import TextIO

import numpy as np

from .graph import GraphFormatError, WeightedGraph
from .partition import Partition


class GenSpecError(ValueError):
    """Raised for structurally infeasible generator specs."""


@dataclass(frozen=True)
class GenSpec:
    n: int
    community_sizes: tuple[int, ...]
    avg_degree: float
    mu_t: float
    mu_w: float
    weight_scale: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if sum(self.community_sizes) != self.n:
            raise GenSpecError("community sizes must sum to n")
        if len(self.community_sizes) < 2:
            raise GenSpecError("need at least two communities for external edges")
        if any(s < 3 for s in self.community_sizes):
            raise GenSpecError("every community must have at least 3 nodes")
        if not (0.0 < self.mu_t < 1.0) or not (0.0 < self.mu_w < 1.0):
            raise GenSpecError("mixing fractions must lie strictly inside (0, 1)")
        if not self.avg_degree > 0:
            raise GenSpecError("avg_degree must be positive")
        if not self.weight_scale > 0:
            raise GenSpecError("weight_scale must be positive")

    @classmethod
    def equal_communities(
        cls,
        n: int,
        k: int,
        avg_degree: float,
        mu_t: float,
        mu_w: float,
        weight_scale: float = 1.0,
        seed: int = 0,
    ) -> "GenSpec":
        if k <= 0 or n % k != 0:
            raise GenSpecError(f"cannot split {n} nodes into {k} equal communities")
        return cls(n, (n // k,) * k, avg_degree, mu_t, mu_w, weight_scale, seed)

    @classmethod
    def from_json(cls, source: str | TextIO | dict) -> "GenSpec":
        if isinstance(source, dict):
            data = source
        elif isinstance(source, str):
            data = json.loads(source)
        else:
            data = json.load(source)
        common = dict(
            avg_degree=float(data["avg_degree"]),
            mu_t=float(data["mu_t"]),
            mu_w=float(data["mu_w"]),
            weight_scale=float(data.get("weight_scale", 1.0)),
            seed=int(data.get("seed", 0)),
        )
        n = int(data["n"])
        if "community_sizes" in data:
            return cls(n, tuple(int(s) for s in data["community_sizes"]), **common)
        if "k" in data:
            return cls.equal_communities(n, int(data["k"]), **common)
        raise GenSpecError("spec needs either 'community_sizes' or 'k'")


# Instance scales used for the large acceptance runs; densities match the
# reference workloads (n * avg_degree / 2 edges).
PRESETS: dict[str, GenSpec] = {
    "scale-1000": GenSpec.equal_communities(1000, 25, avg_degree=19.55, mu_t=0.1, mu_w=0.1),
    "scale-5000": GenSpec.equal_communities(5000, 25, avg_degree=19.04, mu_t=0.1, mu_w=0.1),
}


def _even_stubs(rng: np.random.Generator, stubs: np.ndarray, cap: np.ndarray) -> np.ndarray:
    """Make the stub total even by nudging a random adjustable node."""
    if int(stubs.sum()) % 2 == 0:
        return stubs
    can_up = np.flatnonzero(stubs < cap)
    if len(can_up):
        stubs[rng.choice(can_up)] += 1
        return stubs
    can_down = np.flatnonzero(stubs > 0)
    if not len(can_down):
        raise GenSpecError("odd stub count cannot be fixed")
    stubs[rng.choice(can_down)] -= 1
    return stubs


def _match_stubs(
    rng: np.random.Generator,
    pool: list[int],
    community_of: np.ndarray | None,
    existing: set[tuple[int, int]],
    max_rounds: int = 80,
) -> list[tuple[int, int]]:
    """Randomly pair stubs into new simple edges; when ``community_of`` is
    given, endpoints must lie in different communities. Unmatchable leftovers
    are dropped, which only shaves realized degrees slightly."""
    edges: list[tuple[int, int]] = []
    pool = list(pool)
    for _ in range(max_rounds):
        if len(pool) < 2:
            break
        rng.shuffle(pool)
        leftover: list[int] = []
        for i in range(0, len(pool) - 1, 2):
            u, v = pool[i], pool[i + 1]
            if u == v or (community_of is not None and community_of[u] == community_of[v]):
                leftover += [u, v]
                continue
            key = (u, v) if u < v else (v, u)
            if key in existing:
                leftover += [u, v]
                continue
            existing.add(key)
            edges.append(key)
        if len(pool) % 2:
            leftover.append(pool[-1])
        if len(leftover) == len(pool):
            break
        pool = leftover
    return edges


def generate_planted(spec: GenSpec) -> tuple[WeightedGraph, Partition]:
    """Generate a weighted instance and its planted ground truth.

    Per node, roughly ``avg_degree * (1 - mu_t)`` internal and
    ``avg_degree * mu_t`` external edges are drawn. Internal weights are
    uniform in [0.5, 1.5] * weight_scale * (1 - mu_w) / (1 - mu_t) and
    external ones in [0.5, 1.5] * weight_scale * mu_w / mu_t, so the expected
    external share of a node's strength is mu_w.
    """
    rng = np.random.default_rng(spec.seed)
    community_of = np.repeat(np.arange(len(spec.community_sizes)), spec.community_sizes)
    # Poisson-like total degrees; the internal/external split is a per-node
    # proportion so each node's mixing tracks mu_t tightly.
    total_stubs = rng.poisson(spec.avg_degree, spec.n)
    internal_stubs = np.rint(total_stubs * (1.0 - spec.mu_t)).astype(int)
    existing: set[tuple[int, int]] = set()
    internal_edges: list[tuple[int, int]] = []
    start = 0
    for size in spec.community_sizes:
        nodes = np.arange(start, start + size)
        cap = np.full(size, size - 1)
        stubs = np.minimum(internal_stubs[nodes], cap)
        internal_stubs[nodes] = stubs
        stubs = _even_stubs(rng, stubs, cap)
        pool = np.repeat(nodes, stubs).tolist()
        internal_edges += _match_stubs(rng, pool, None, existing)
        start += size

    ext_stubs = np.maximum(total_stubs - internal_stubs, 0)
    ext_stubs = _even_stubs(rng, ext_stubs, np.full(spec.n, spec.n))
    pool = np.repeat(np.arange(spec.n), ext_stubs).tolist()
    external_edges = _match_stubs(rng, pool, community_of, existing)

    w_int = spec.weight_scale * (1.0 - spec.mu_w) / (1.0 - spec.mu_t)
    w_ext = spec.weight_scale * spec.mu_w / spec.mu_t
    edges = [
        (u, v, float(w))
        for (u, v), w in zip(internal_edges, rng.uniform(0.5, 1.5, len(internal_edges)) * w_int)
    ]
    edges += [
        (u, v, float(w))
        for (u, v), w in zip(external_edges, rng.uniform(0.5, 1.5, len(external_edges)) * w_ext)
    ]
    graph = WeightedGraph(spec.n, edges)
    truth = Partition.from_labels(int(c) for c in community_of)
    return graph, truth


def read_lfr(network: str | TextIO, community: str | TextIO) -> tuple[WeightedGraph, Partition]:
    """Read externally generated benchmark files.

    The network file holds "u v w" rows (1-indexed; an undirected edge may
    appear in both directions, with equal weights). The community file holds
    "node community" rows and defines the node set; an edge endpoint missing
    from it is an error. Ids are densified to 0..v-1 in sorted order.
    """
    community_stream = io.StringIO(community) if isinstance(community, str) else community
    membership: dict[int, int] = {}
    for lineno, raw in enumerate(community_stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError("expected 'node community'", line=lineno)
        node, label = int(parts[0]), int(parts[1])
        if node in membership:
            raise GraphFormatError(f"node {node} listed twice in community file", line=lineno)
        membership[node] = label

    order = sorted(membership)
    index = {node: i for i, node in enumerate(order)}

    network_stream = io.StringIO(network) if isinstance(network, str) else network
    weights: dict[tuple[int, int], float] = {}
    for lineno, raw in enumerate(network_stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise GraphFormatError("expected 'u v w'", line=lineno)
        u_raw, v_raw, w = int(parts[0]), int(parts[1]), float(parts[2])
        if u_raw not in index or v_raw not in index:
            raise GraphFormatError(
                f"edge ({u_raw}, {v_raw}) references a node missing from the community file",
                line=lineno,
            )
        if u_raw == v_raw:
            raise GraphFormatError(f"self-loop on node {u_raw}", line=lineno)
        if not w > 0:
            raise GraphFormatError(f"weight must be positive, got {w}", line=lineno)
        u, v = index[u_raw], index[v_raw]
        key = (u, v) if u < v else (v, u)
        if key in weights:
            if weights[key] != w:
                raise GraphFormatError(
                    f"edge ({u_raw}, {v_raw}) repeated with conflicting weight", line=lineno
                )
        else:
            weights[key] = w

    graph = WeightedGraph(
        len(order),
        [(u, v, w) for (u, v), w in weights.items()],
        labels=[str(n) for n in order],
    )
    truth = Partition.from_labels(membership[n] for n in order)
    return graph, truth
