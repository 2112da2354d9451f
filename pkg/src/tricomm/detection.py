"""Community detection by triangle seeding and dominance-based merging.

Communities start as the triangles of a greedy node-disjoint packing plus
singletons for uncovered nodes. Pairs of adjacent communities are then
merged while a dominance condition holds, tracked with an incremental
community-adjacency ledger so inter-community weights are never recomputed
from the raw graph during the run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .graph import WeightedGraph
from .partition import Partition
from .triangles import PackingResult, pack_greedy_eval


class SortChoice(str, Enum):
    """Initial processing order of communities."""

    RANDOM = "random"
    BY_WD = "wd"
    BY_IW = "iw"


@dataclass(frozen=True)
class DetectionConfig:
    """Detection knobs: merge threshold ``omega`` in [0, 0.5], the community
    processing order, and the RNG seed (used only for RANDOM order)."""

    omega: float = 0.1
    sort_choice: SortChoice = SortChoice.BY_IW
    seed: int = 0

    def __post_init__(self):
        if not (0.0 <= self.omega <= 0.5):
            raise ValueError(f"omega must be in [0, 0.5], got {self.omega}")
        if not isinstance(self.sort_choice, SortChoice):
            object.__setattr__(self, "sort_choice", SortChoice(self.sort_choice))


def intra_compare(inw_gh: float, iw_c: float) -> bool:
    """True when the shared boundary weight reaches the community's own
    intra-weight."""
    return inw_gh >= iw_c


def inter_compare(
    inw_gh: float,
    wd_c: float,
    iw_c: float,
    omega: float,
    *,
    subtract_iw_once: bool = False,
) -> bool:
    """True when the shared boundary weight reaches an ``omega`` fraction of
    the community's remaining external weight.

    The community's summed node degrees count internal edges twice, so the
    external weight is ``wd - 2*iw - inw``. ``subtract_iw_once`` switches to
    the looser ``wd - iw - inw`` variant for comparison runs.
    """
    if subtract_iw_once:
        external = wd_c - iw_c - inw_gh
    else:
        external = wd_c - 2.0 * iw_c - inw_gh
    return inw_gh >= external * omega


class MergeState:
    """Mutable bookkeeping for a detection run.

    Tracks, per live community: its member list, intra-weight ``iw``, summed
    weighted degree ``wd``, and an adjacency ledger ``inw`` mapping each
    neighboring community to the total weight of edges between the two.
    """

    def __init__(
        self,
        graph: WeightedGraph,
        assignment: list[int],
        members: dict[int, list[int]],
        iw: dict[int, float],
        wd: dict[int, float],
        inw: dict[int, dict[int, float]],
    ):
        self.graph = graph
        self.assignment = assignment
        self.members = members
        self.iw = iw
        self.wd = wd
        self.inw = inw
        self.min_member = {c: min(nodes) for c, nodes in members.items()}

    def live(self, cid: int) -> bool:
        return cid in self.members

    def live_ids(self) -> list[int]:
        return list(self.members)

    def merge(self, g_id: int, h_id: int) -> None:
        """Absorb community ``h_id`` into ``g_id`` and update the ledger."""
        if g_id == h_id:
            raise ValueError("cannot merge a community with itself")
        if not self.live(g_id) or not self.live(h_id):
            raise ValueError("both communities must be live")
        boundary = self.inw[g_id].pop(h_id, 0.0)
        self.inw[h_id].pop(g_id, None)
        self.iw[g_id] += self.iw.pop(h_id) + boundary
        self.wd[g_id] += self.wd.pop(h_id)
        for x, w in self.inw.pop(h_id).items():
            self.inw[g_id][x] = self.inw[g_id].get(x, 0.0) + w
            ledger_x = self.inw[x]
            ledger_x.pop(h_id, None)
            ledger_x[g_id] = ledger_x.get(g_id, 0.0) + w
        absorbed = self.members.pop(h_id)
        for n in absorbed:
            self.assignment[n] = g_id
        self.members[g_id].extend(absorbed)
        self.min_member[g_id] = min(self.min_member[g_id], self.min_member.pop(h_id))

    def to_partition(self) -> Partition:
        return Partition.from_labels(self.assignment)


def init_state(g: WeightedGraph, packing: PackingResult) -> MergeState:
    """Seed communities from a packing: one per selected triangle, singletons
    for uncovered nodes. A triangle community's intra-weight equals the
    triangle's weight since its three edges are the only internal ones."""
    if len(packing.node_assignment) != g.node_count:
        raise ValueError("packing does not match graph size")
    for t in packing.selected:
        for u, v in ((t.a, t.b), (t.a, t.c), (t.b, t.c)):
            if not g.has_edge(u, v):
                raise ValueError(f"packing inconsistent with graph: missing edge ({u}, {v})")

    assignment = [-1] * g.node_count
    members: dict[int, list[int]] = {}
    for slot, t in enumerate(packing.selected):
        members[slot] = list(t.nodes)
        for n in t.nodes:
            assignment[n] = slot
    next_id = len(packing.selected)
    for n in range(g.node_count):
        if assignment[n] == -1:
            assignment[n] = next_id
            members[next_id] = [n]
            next_id += 1

    iw = {c: 0.0 for c in members}
    wd = {c: 0.0 for c in members}
    inw: dict[int, dict[int, float]] = {c: {} for c in members}
    for c, nodes in members.items():
        wd[c] = sum(g.weighted_degree(n) for n in nodes)
    for u, v, w in g.edges():
        cu, cv = assignment[u], assignment[v]
        if cu == cv:
            iw[cu] += w
        else:
            inw[cu][cv] = inw[cu].get(cv, 0.0) + w
            inw[cv][cu] = inw[cv].get(cu, 0.0) + w
    return MergeState(g, assignment, members, iw, wd, inw)


def sort_initial(state: MergeState, cfg: DetectionConfig) -> list[int]:
    """Community processing order: a seeded shuffle, or decreasing wd/iw with
    ties broken by smallest member node."""
    ids = sorted(state.live_ids(), key=lambda c: state.min_member[c])
    if cfg.sort_choice is SortChoice.RANDOM:
        random.Random(cfg.seed).shuffle(ids)
    elif cfg.sort_choice is SortChoice.BY_WD:
        ids.sort(key=lambda c: (-state.wd[c], state.min_member[c]))
    else:
        ids.sort(key=lambda c: (-state.iw[c], state.min_member[c]))
    return ids


def sorted_adjacent(state: MergeState, c: int) -> list[int]:
    """Communities adjacent to ``c`` in decreasing intra-weight order, ties
    by smallest member node."""
    if not state.live(c):
        raise ValueError(f"community {c} is not live")
    adjacent = [h for h, w in state.inw[c].items() if w > 0]
    adjacent.sort(key=lambda h: (-state.iw[h], state.min_member[h]))
    return adjacent


def _merge_condition(state: MergeState, g_id: int, h_id: int, omega: float) -> bool:
    inw_gh = state.inw[g_id].get(h_id, 0.0)
    if intra_compare(inw_gh, state.iw[g_id]) and inter_compare(
        inw_gh, state.wd[g_id], state.iw[g_id], omega
    ):
        return True
    return intra_compare(inw_gh, state.iw[h_id]) and inter_compare(
        inw_gh, state.wd[h_id], state.iw[h_id], omega
    )


def detect_full(
    g: WeightedGraph,
    cfg: DetectionConfig | None = None,
    *,
    merge_hook: Callable[[MergeState], None] | None = None,
) -> tuple[Partition, MergeState]:
    """Run detection and return both the partition and the final ledger.

    Each pass scans a snapshot of the live communities. A scanning community
    walks the adjacency list computed when its turn starts, absorbing every
    partner that meets the merge condition; weights are read from the ledger
    at evaluation time, so later entries see the enlarged community, but
    partners that only became adjacent mid-scan wait for the next pass.
    Passes repeat until one completes with no merge. For wd/iw orders the
    snapshot is re-sorted every pass with the updated quantities; a RANDOM
    order is shuffled once up front.
    """
    if cfg is None:
        cfg = DetectionConfig()
    state = init_state(g, pack_greedy_eval(g))
    initial_order = sort_initial(state, cfg)

    while True:
        if cfg.sort_choice is SortChoice.RANDOM:
            snapshot = [c for c in initial_order if state.live(c)]
        else:
            snapshot = sort_initial(state, cfg)
        merged_any = False
        for c_g in snapshot:
            if not state.live(c_g):
                continue
            for c_h in sorted_adjacent(state, c_g):
                if not state.live(c_h) or state.inw[c_g].get(c_h, 0.0) <= 0.0:
                    continue
                if _merge_condition(state, c_g, c_h, cfg.omega):
                    state.merge(c_g, c_h)
                    merged_any = True
                    if merge_hook is not None:
                        merge_hook(state)
        if not merged_any:
            break
    return state.to_partition(), state


def detect(
    g: WeightedGraph,
    cfg: DetectionConfig | None = None,
    *,
    merge_hook: Callable[[MergeState], None] | None = None,
) -> Partition:
    """Detect communities in a weighted graph; see ``detect_full``."""
    partition, _ = detect_full(g, cfg, merge_hook=merge_hook)
    return partition
