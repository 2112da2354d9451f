import numpy as np
import pytest

from tricomm import (
    GenSpec,
    GenSpecError,
    GraphFormatError,
    Partition,
    detect,
    generate_planted,
    rand_index,
    read_lfr,
)


class TestGenSpec:
    def test_sizes_must_sum(self):
        with pytest.raises(GenSpecError):
            GenSpec(10, (4, 4), 3.0, 0.2, 0.2)

    def test_minimum_community_size(self):
        with pytest.raises(GenSpecError):
            GenSpec(8, (6, 2), 3.0, 0.2, 0.2)

    def test_needs_two_communities(self):
        with pytest.raises(GenSpecError):
            GenSpec(9, (9,), 3.0, 0.2, 0.2)

    def test_mixing_strictly_inside_unit_interval(self):
        for mu in (0.0, 1.0):
            with pytest.raises(GenSpecError):
                GenSpec(12, (6, 6), 3.0, mu, 0.2)
            with pytest.raises(GenSpecError):
                GenSpec(12, (6, 6), 3.0, 0.2, mu)

    def test_equal_split_requires_divisibility(self):
        with pytest.raises(GenSpecError):
            GenSpec.equal_communities(10, 3, 4.0, 0.2, 0.2)

    def test_from_json_variants(self):
        spec = GenSpec.from_json({"n": 12, "k": 3, "avg_degree": 3, "mu_t": 0.2, "mu_w": 0.3})
        assert spec.community_sizes == (4, 4, 4)
        spec = GenSpec.from_json(
            {"n": 9, "community_sizes": [3, 3, 3], "avg_degree": 3, "mu_t": 0.2, "mu_w": 0.3, "seed": 7}
        )
        assert spec.seed == 7


class TestGeneratePlanted:
    def test_ground_truth_shape(self):
        spec = GenSpec(24, (10, 8, 6), avg_degree=6.0, mu_t=0.2, mu_w=0.2, seed=3)
        _, truth = generate_planted(spec)
        sizes = sorted(len(c) for c in truth.communities())
        assert sizes == [6, 8, 10]
        assert truth.k == 3

    def test_deterministic_per_seed(self):
        spec = GenSpec.equal_communities(40, 2, avg_degree=8.0, mu_t=0.2, mu_w=0.2, seed=11)
        g1, t1 = generate_planted(spec)
        g2, t2 = generate_planted(spec)
        assert list(g1.edges()) == list(g2.edges())
        assert t1 == t2

    def test_graph_invariants(self):
        spec = GenSpec.equal_communities(60, 3, avg_degree=10.0, mu_t=0.3, mu_w=0.3, seed=5)
        g, _ = generate_planted(spec)
        degree_sum = sum(g.weighted_degree(n) for n in range(g.node_count))
        assert degree_sum == pytest.approx(2.0 * g.total_weight(), rel=1e-12)
        assert all(w > 0 for _, _, w in g.edges())

    def test_external_fraction_tracks_mu_t(self):
        spec_base = dict(avg_degree=10.0, mu_t=0.1, mu_w=0.1)
        fractions = []
        for seed in range(20):
            spec = GenSpec.equal_communities(40, 2, seed=seed, **spec_base)
            g, truth = generate_planted(spec)
            external = per_node_external_fraction(g, truth)
            fractions.append(external)
        mean = sum(fractions) / len(fractions)
        assert abs(mean - 0.1) <= 0.05

    def test_balanced_mixing_weight_distributions_match(self):
        internal_means, external_means = [], []
        for seed in range(12):
            spec = GenSpec.equal_communities(60, 3, avg_degree=10.0, mu_t=0.5, mu_w=0.5, seed=seed)
            g, truth = generate_planted(spec)
            internal = [w for u, v, w in g.edges() if truth.assignment[u] == truth.assignment[v]]
            external = [w for u, v, w in g.edges() if truth.assignment[u] != truth.assignment[v]]
            internal_means.append(np.mean(internal))
            external_means.append(np.mean(external))
        assert np.mean(internal_means) == pytest.approx(np.mean(external_means), rel=0.05)

    def test_recoverable_at_low_mixing(self):
        hits = 0
        for seed in range(10):
            spec = GenSpec.equal_communities(200, 5, avg_degree=20.0, mu_t=0.1, mu_w=0.1, seed=seed)
            g, truth = generate_planted(spec)
            found = detect(g)
            if rand_index(truth, found) >= 0.9:
                hits += 1
        assert hits >= 9


def per_node_external_fraction(g, truth: Partition) -> float:
    total = 0.0
    counted = 0
    for n in range(g.node_count):
        neighbors = g.neighbors(n)
        if not neighbors:
            continue
        external = sum(1 for v in neighbors if truth.assignment[v] != truth.assignment[n])
        total += external / len(neighbors)
        counted += 1
    return total / counted


LFR_NETWORK = "1 2 3.0\n2 1 3.0\n2 3 1.5\n"
LFR_COMMUNITY = "1 7\n2 7\n3 9\n"


class TestReadLfr:
    def test_duplicate_directions_collapse(self):
        g, truth = read_lfr(LFR_NETWORK, LFR_COMMUNITY)
        assert g.edge_count == 2
        assert g.weight(0, 1) == 3.0
        assert truth.k == 2
        assert list(truth.assignment) == [0, 0, 1]

    def test_conflicting_duplicate_weight(self):
        with pytest.raises(GraphFormatError, match="conflicting"):
            read_lfr("1 2 3.0\n2 1 4.0\n", "1 1\n2 1\n")

    def test_dangling_edge_node(self):
        with pytest.raises(GraphFormatError, match="missing from the community file"):
            read_lfr("1 5 2.0\n", LFR_COMMUNITY)

    def test_isolated_listed_node_kept(self):
        g, truth = read_lfr("1 2 1.0\n", "1 0\n2 0\n3 1\n")
        assert g.node_count == 3
        assert g.degree(2) == 0
