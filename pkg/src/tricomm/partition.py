"""Node-to-community assignments and their file formats."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Partition:
    """A partition of nodes 0..v-1 into communities 0..k-1, every one non-empty."""

    assignment: tuple[int, ...]
    k: int

    @classmethod
    def from_labels(cls, labels: Iterable) -> "Partition":
        """Densify arbitrary community labels in order of first appearance."""
        ids: dict = {}
        assignment = []
        for label in labels:
            cid = ids.get(label)
            if cid is None:
                cid = len(ids)
                ids[label] = cid
            assignment.append(cid)
        return cls(tuple(assignment), len(ids))

    def __post_init__(self):
        if self.k > len(self.assignment):
            raise ValueError("more communities than nodes")
        seen = set(self.assignment)
        if self.assignment and seen != set(range(self.k)):
            raise ValueError("assignment must use every community id in 0..k-1")

    @property
    def node_count(self) -> int:
        return len(self.assignment)

    def members(self, community: int) -> list[int]:
        if not (0 <= community < self.k):
            raise ValueError(f"community {community} out of range (k={self.k})")
        return [n for n, c in enumerate(self.assignment) if c == community]

    def communities(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for n, c in enumerate(self.assignment):
            out[c].append(n)
        return out


def partition_to_json(p: Partition) -> str:
    return json.dumps({"k": p.k, "assignment": list(p.assignment)}, indent=2) + "\n"


def partition_to_text(p: Partition) -> str:
    """Two-column "node community" lines, 0-indexed."""
    return "".join(f"{n} {c}\n" for n, c in enumerate(p.assignment))


def parse_partition(text: str) -> Partition:
    """Read a partition from JSON ({"k", "assignment"}) or two-column text.

    Two-column node ids may be arbitrary integers (e.g. 1-indexed); rows are
    ordered by node id and community labels densified.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        data = json.loads(text)
        assignment = data.get("assignment")
        if not isinstance(assignment, list):
            raise ValueError("partition JSON needs an 'assignment' array")
        p = Partition.from_labels(assignment)
        if "k" in data and data["k"] != p.k:
            raise ValueError(f"declared k={data['k']} but assignment uses {p.k} communities")
        return p
    rows: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'node community', got {line!r}")
        rows.append((int(parts[0]), int(parts[1])))
    if not rows:
        return Partition((), 0)
    rows.sort()
    node_ids = [n for n, _ in rows]
    if len(set(node_ids)) != len(node_ids):
        raise ValueError("duplicate node id in partition file")
    return Partition.from_labels(c for _, c in rows)
