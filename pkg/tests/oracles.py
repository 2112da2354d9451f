"""Independent reference implementations used to check the library.

Everything here recomputes results from first principles (explicit double
sums, full triple scans, subset enumeration) without reusing the code paths
under test.
"""

from __future__ import annotations

from itertools import combinations

from tricomm import Partition, WeightedGraph


def brute_force_triangles(g: WeightedGraph) -> list[tuple[int, int, int, float]]:
    """All 3-cliques by scanning every node triple."""
    out = []
    for a, b, c in combinations(range(g.node_count), 3):
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
            out.append((a, b, c, g.weight(a, b) + g.weight(a, c) + g.weight(b, c)))
    return out


def brute_force_best_packing_value(g: WeightedGraph) -> float:
    """Maximum packing value by enumerating every subset of triangles."""
    tris = brute_force_triangles(g)
    best = 0.0
    for r in range(len(tris) + 1):
        for subset in combinations(range(len(tris)), r):
            nodes: set[int] = set()
            ok = True
            for i in subset:
                t_nodes = set(tris[i][:3])
                if nodes & t_nodes:
                    ok = False
                    break
                nodes |= t_nodes
            if ok:
                value = sum(tris[i][3] for i in subset)
                best = max(best, value)
    return best


def naive_modularity(g: WeightedGraph, p: Partition) -> float:
    """Direct double sum over all ordered node pairs."""
    m = g.total_weight()
    two_m = 2.0 * m
    total = 0.0
    for i in range(g.node_count):
        for j in range(g.node_count):
            if p.assignment[i] == p.assignment[j]:
                expected = g.weighted_degree(i) * g.weighted_degree(j) / two_m
                total += g.weight(i, j) - expected
    return total / two_m


def naive_pair_counts(p1: Partition, p2: Partition) -> tuple[int, int, int, int]:
    """(m11, m00, m10, m01) by walking every unordered node pair."""
    m11 = m00 = m10 = m01 = 0
    v = p1.node_count
    for i, j in combinations(range(v), 2):
        same1 = p1.assignment[i] == p1.assignment[j]
        same2 = p2.assignment[i] == p2.assignment[j]
        if same1 and same2:
            m11 += 1
        elif same1:
            m10 += 1
        elif same2:
            m01 += 1
        else:
            m00 += 1
    return m11, m00, m10, m01


def recompute_community_quantities(g: WeightedGraph, assignment: list[int]):
    """From-scratch iw, wd, and inw maps for an arbitrary node assignment."""
    communities = set(assignment)
    iw = {c: 0.0 for c in communities}
    wd = {c: 0.0 for c in communities}
    inw: dict[int, dict[int, float]] = {c: {} for c in communities}
    for n in range(g.node_count):
        wd[assignment[n]] += g.weighted_degree(n)
    for u, v, w in g.edges():
        cu, cv = assignment[u], assignment[v]
        if cu == cv:
            iw[cu] += w
        else:
            inw[cu][cv] = inw[cu].get(cv, 0.0) + w
            inw[cv][cu] = inw[cv].get(cu, 0.0) + w
    return iw, wd, inw


def assert_ledger_matches(g: WeightedGraph, state, rel_tol: float = 1e-9) -> None:
    """Compare a MergeState's ledger against the from-scratch oracle."""
    iw, wd, inw = recompute_community_quantities(g, list(state.assignment))
    assert set(state.members) == set(iw)
    for c in iw:
        assert abs(state.iw[c] - iw[c]) <= rel_tol * max(1.0, abs(iw[c])), f"iw mismatch for {c}"
        assert abs(state.wd[c] - wd[c]) <= rel_tol * max(1.0, abs(wd[c])), f"wd mismatch for {c}"
        ledger = {h: w for h, w in state.inw[c].items() if w != 0.0}
        assert set(ledger) == set(inw[c]), f"inw neighbor set mismatch for {c}"
        for h, w in inw[c].items():
            assert abs(ledger[h] - w) <= rel_tol * max(1.0, abs(w)), f"inw mismatch for {c}->{h}"
    total = sum(iw.values()) + 0.5 * sum(sum(d.values()) for d in inw.values())
    m = g.total_weight()
    assert abs(total - m) <= rel_tol * max(1.0, m), "conservation identity violated"
