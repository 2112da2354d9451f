"""Weighted undirected graph: construction, queries, and structural filters."""

from __future__ import annotations

import io
from collections import deque
from typing import Iterable, Iterator, Mapping, Sequence, TextIO


class GraphFormatError(ValueError):
    """Raised when graph input text is malformed or violates graph invariants."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class WeightedGraph:
    """Undirected simple graph with strictly positive edge weights.

    Nodes are dense integers ``0..v-1``; an optional label per node keeps the
    external name it was loaded under. A missing edge means weight zero, so
    stored weights are always ``> 0``. Instances are immutable once built and
    safe to read from multiple threads.
    """

    __slots__ = ("_adj", "_labels", "_edge_count", "_total_weight")

    def __init__(
        self,
        node_count: int,
        edges: Iterable[tuple[int, int, float]] = (),
        labels: Sequence[str] | None = None,
    ):
        if node_count < 0:
            raise ValueError("node_count must be non-negative")
        if labels is not None and len(labels) != node_count:
            raise ValueError("labels must have one entry per node")
        adj: list[dict[int, float]] = [{} for _ in range(node_count)]
        edge_count = 0
        total = 0.0
        for u, v, w in edges:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise GraphFormatError(f"edge ({u}, {v}) references a node out of range")
            if u == v:
                raise GraphFormatError(f"self-loop on node {u}")
            if not w > 0:
                raise GraphFormatError(f"edge ({u}, {v}) has non-positive weight {w}")
            if v in adj[u]:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            adj[u][v] = w
            adj[v][u] = w
            edge_count += 1
            total += w
        self._adj = adj
        self._labels = list(labels) if labels is not None else None
        self._edge_count = edge_count
        self._total_weight = total

    @property
    def node_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def labels(self) -> list[str] | None:
        return self._labels

    def label(self, n: int) -> str:
        """External name of node ``n``; falls back to the dense id."""
        if self._labels is not None:
            return self._labels[n]
        return str(n)

    def edges(self) -> Iterator[tuple[int, int, float]]:
        """Yield each undirected edge once as (u, v, w) with u < v, sorted."""
        for u, nbrs in enumerate(self._adj):
            for v in sorted(nbrs):
                if v > u:
                    yield u, v, nbrs[v]

    def neighbors(self, n: int) -> Mapping[int, float]:
        """Neighbor-to-weight mapping of node ``n``. Treat as read-only."""
        self._check_node(n)
        return self._adj[n]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_node(u)
        self._check_node(v)
        return v in self._adj[u]

    def weight(self, u: int, v: int) -> float:
        """Weight of edge (u, v), or 0.0 when the edge is absent."""
        self._check_node(u)
        self._check_node(v)
        return self._adj[u].get(v, 0.0)

    def degree(self, n: int) -> int:
        """Number of incident edges (unweighted)."""
        self._check_node(n)
        return len(self._adj[n])

    def weighted_degree(self, n: int) -> float:
        """Sum of the weights of edges incident to ``n``; 0 for an isolated node."""
        self._check_node(n)
        return sum(self._adj[n].values())

    def total_weight(self) -> float:
        """Sum of all edge weights, each unordered edge counted once."""
        return self._total_weight

    def _check_node(self, n: int) -> None:
        if not (0 <= n < len(self._adj)):
            raise ValueError(f"node {n} out of range for graph with {len(self._adj)} nodes")

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"WeightedGraph(v={self.node_count}, edges={self.edge_count})"


def load_edge_list(source: str | TextIO) -> WeightedGraph:
    """Parse "u v w" lines into a graph.

    Node tokens may be any whitespace-free names; they are densified to
    0..v-1 in sorted order (numeric when every token is an integer, so
    0- or 1-indexed files keep their relative ids) and kept as labels.
    Lines starting with '#' and blank lines are ignored. Rejects
    self-loops, duplicate pairs, and non-positive weights, reporting the
    offending line number.
    """
    stream = io.StringIO(source) if isinstance(source, str) else source
    raw_edges: list[tuple[int, str, str, float]] = []
    tokens: set[str] = set()
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise GraphFormatError(f"expected 'u v w', got {line!r}", line=lineno)
        if parts[0] == parts[1]:
            raise GraphFormatError(f"self-loop on node {parts[0]!r}", line=lineno)
        try:
            w = float(parts[2])
        except ValueError:
            raise GraphFormatError(f"weight {parts[2]!r} is not a number", line=lineno) from None
        if not w > 0:
            raise GraphFormatError(f"weight must be positive, got {w}", line=lineno)
        raw_edges.append((lineno, parts[0], parts[1], w))
        tokens.add(parts[0])
        tokens.add(parts[1])

    try:
        labels = sorted(tokens, key=int)
    except ValueError:
        labels = sorted(tokens)
    ids = {token: i for i, token in enumerate(labels)}

    edges: list[tuple[int, int, float]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, token_u, token_v, w in raw_edges:
        u, v = ids[token_u], ids[token_v]
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphFormatError(f"duplicate edge ({token_u}, {token_v})", line=lineno)
        seen.add(key)
        edges.append((u, v, w))
    return WeightedGraph(len(labels), edges, labels)


def dump_edge_list(g: WeightedGraph) -> str:
    """Serialize a graph back to edge-list text using node labels.

    Isolated nodes have no representation in this format and are dropped.
    """
    lines = [f"{g.label(u)} {g.label(v)} {w!r}" for u, v, w in g.edges()]
    return "\n".join(lines) + ("\n" if lines else "")


def distance(g: WeightedGraph, i: int, j: int, const_val: float) -> float:
    """Dissimilarity between two nodes: 0 on the diagonal, 1/w across an
    edge, and ``const_val`` for unconnected pairs."""
    if not const_val > 0:
        raise ValueError("const_val must be positive")
    if i == j:
        g._check_node(i)
        return 0.0
    w = g.weight(i, j)
    return 1.0 / w if w > 0 else const_val


def connected_components(g: WeightedGraph) -> list[list[int]]:
    """Connected components as sorted node lists, ordered by smallest member."""
    seen = [False] * g.node_count
    components: list[list[int]] = []
    for start in range(g.node_count):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        comp = [start]
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comp.sort()
        components.append(comp)
    return components


def subgraph(g: WeightedGraph, nodes: Sequence[int]) -> WeightedGraph:
    """Induced subgraph on ``nodes``, re-densified, labels preserved."""
    index = {n: i for i, n in enumerate(nodes)}
    if len(index) != len(nodes):
        raise ValueError("duplicate node in subgraph selection")
    edges = []
    for u, v, w in g.edges():
        iu, iv = index.get(u), index.get(v)
        if iu is not None and iv is not None:
            edges.append((iu, iv, w))
    labels = [g.label(n) for n in nodes]
    return WeightedGraph(len(nodes), edges, labels)


def filter_by_degree_nodes(g: WeightedGraph, threshold: int) -> list[int]:
    """Nodes of every component containing some node of degree >= threshold."""
    if threshold < 0:
        raise ValueError("threshold must be non-negative")
    kept: list[int] = []
    for comp in connected_components(g):
        if any(g.degree(n) >= threshold for n in comp):
            kept.extend(comp)
    kept.sort()
    return kept


def filter_by_degree(g: WeightedGraph, threshold: int) -> WeightedGraph:
    """Keep the union of connected components that contain at least one node
    of unweighted degree >= threshold; node ids are re-densified."""
    return subgraph(g, filter_by_degree_nodes(g, threshold))
