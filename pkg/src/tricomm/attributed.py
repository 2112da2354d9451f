"""Attributed social-graph datasets: per-node attributes, tweet records, filters."""

from __future__ import annotations

import datetime as dt
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO

from .graph import GraphFormatError, WeightedGraph

EDGE_TYPES = ("retweet", "mention")


@dataclass(frozen=True)
class NodeAttributes:
    followers: int = 0
    tweet_count: int = 0
    is_reporter: bool = False
    label: str = ""


@dataclass(frozen=True)
class TweetRecord:
    author: int
    theme: str
    media: str
    date: dt.date


@dataclass(frozen=True)
class TypedEdge:
    source: int
    target: int
    edge_type: str
    weight: float


@dataclass
class AttributedDataset:
    """A loaded dataset: nodes with attributes, typed edges, tweet records.

    Node indices are dense 0..v-1; ``ids`` keeps the external id of each
    node in load order. Edges and record authors use the dense indices.
    """

    ids: list = field(default_factory=list)
    attrs: list[NodeAttributes] = field(default_factory=list)
    edges: list[TypedEdge] = field(default_factory=list)
    records: list[TweetRecord] = field(default_factory=list)

    @property
    def node_count(self) -> int:
        return len(self.ids)


def filter_records(
    records: Iterable[TweetRecord],
    themes: set[str] | None = None,
    medias: set[str] | None = None,
    date_range: tuple[dt.date | None, dt.date | None] | None = None,
) -> list[TweetRecord]:
    """Records matching every supplied predicate; an absent predicate passes all.

    ``date_range`` is an inclusive (from, to) interval; either bound may be None.
    """
    date_from = date_to = None
    if date_range is not None:
        date_from, date_to = date_range
    out = []
    for r in records:
        if themes is not None and r.theme not in themes:
            continue
        if medias is not None and r.media not in medias:
            continue
        if date_from is not None and r.date < date_from:
            continue
        if date_to is not None and r.date > date_to:
            continue
        out.append(r)
    return out


def load_attributed_json(source: str | TextIO | dict) -> AttributedDataset:
    """Load the attributed-graph JSON format.

    Expected shape: {"nodes": [{"id", "label", "followers", "tweets",
    "reporter"}], "edges": [{"source", "target", "type", "weight"}],
    "records": [{"author", "theme", "media", "date"}]} with ISO-8601 dates.
    When "records" is present, per-node tweet counts are recomputed from it
    so the two stay consistent.
    """
    if isinstance(source, dict):
        data = source
    elif isinstance(source, str):
        data = json.loads(source)
    else:
        data = json.load(source)
    if not isinstance(data, dict) or "nodes" not in data:
        raise GraphFormatError("attributed dataset must be an object with a 'nodes' array")

    ids: list = []
    index: dict = {}
    attrs: list[NodeAttributes] = []
    for i, node in enumerate(data["nodes"]):
        if "id" not in node:
            raise GraphFormatError(f"node #{i} has no 'id'")
        nid = node["id"]
        if nid in index:
            raise GraphFormatError(f"duplicate node id {nid!r}")
        index[nid] = len(ids)
        ids.append(nid)
        followers = int(node.get("followers", 0))
        if followers < 0:
            raise GraphFormatError(f"node {nid!r} has negative followers")
        attrs.append(
            NodeAttributes(
                followers=followers,
                tweet_count=int(node.get("tweets", 0)),
                is_reporter=bool(node.get("reporter", False)),
                label=str(node.get("label", nid)),
            )
        )

    edges: list[TypedEdge] = []
    seen: set[tuple[int, int, str]] = set()
    for i, e in enumerate(data.get("edges", [])):
        try:
            src, dst = index[e["source"]], index[e["target"]]
        except KeyError as exc:
            raise GraphFormatError(f"edge #{i} references unknown node {exc.args[0]!r}") from None
        etype = e.get("type", "retweet")
        if etype not in EDGE_TYPES:
            raise GraphFormatError(f"edge #{i} has unknown type {etype!r}")
        w = float(e.get("weight", 1.0))
        if not w > 0:
            raise GraphFormatError(f"edge #{i} has non-positive weight {w}")
        if src == dst:
            raise GraphFormatError(f"edge #{i} is a self-loop")
        key = (min(src, dst), max(src, dst), etype)
        if key in seen:
            raise GraphFormatError(f"edge #{i} duplicates an earlier {etype} edge")
        seen.add(key)
        edges.append(TypedEdge(src, dst, etype, w))

    records: list[TweetRecord] = []
    if "records" in data:
        for i, r in enumerate(data["records"]):
            try:
                author = index[r["author"]]
            except KeyError:
                raise GraphFormatError(f"record #{i} references unknown author {r.get('author')!r}") from None
            try:
                date = dt.date.fromisoformat(r["date"])
            except (KeyError, ValueError):
                raise GraphFormatError(f"record #{i} has a missing or invalid ISO date") from None
            records.append(TweetRecord(author, str(r.get("theme", "")), str(r.get("media", "")), date))
        counts = [0] * len(ids)
        for r in records:
            counts[r.author] += 1
        attrs = [
            NodeAttributes(a.followers, counts[i], a.is_reporter, a.label)
            for i, a in enumerate(attrs)
        ]

    return AttributedDataset(ids=ids, attrs=attrs, edges=edges, records=records)


def build_graph(ds: AttributedDataset, edge_type: str) -> WeightedGraph:
    """Graph over all dataset nodes using only edges of the chosen type."""
    if edge_type not in EDGE_TYPES:
        raise ValueError(f"edge_type must be one of {EDGE_TYPES}, got {edge_type!r}")
    edges = [(e.source, e.target, e.weight) for e in ds.edges if e.edge_type == edge_type]
    labels = [a.label for a in ds.attrs]
    return WeightedGraph(ds.node_count, edges, labels)


def recount_tweets(ds: AttributedDataset, records: Sequence[TweetRecord]) -> list[int]:
    """Per-node tweet counts over an arbitrary (e.g. filtered) record set."""
    counts = [0] * ds.node_count
    for r in records:
        counts[r.author] += 1
    return counts
