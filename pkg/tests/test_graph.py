import datetime as dt
import json

import pytest

from tricomm import (
    GraphFormatError,
    TweetRecord,
    WeightedGraph,
    build_graph,
    connected_components,
    distance,
    dump_edge_list,
    filter_by_degree,
    filter_records,
    load_attributed_json,
    load_edge_list,
)
from .conftest import random_graph


class TestLoadEdgeList:
    def test_basic(self):
        g = load_edge_list("0 1 2\n1 2 3\n0 2 1")
        assert g.node_count == 3
        assert g.total_weight() == 6.0

    def test_empty_stream(self):
        g = load_edge_list("")
        assert g.node_count == 0
        assert list(g.edges()) == []

    def test_self_loop_rejected(self):
        with pytest.raises(GraphFormatError, match="self-loop"):
            load_edge_list("0 0 1")

    def test_duplicate_edge_rejected(self):
        with pytest.raises(GraphFormatError, match="duplicate"):
            load_edge_list("0 1 2\n1 0 3")

    def test_non_positive_weight_rejected(self):
        with pytest.raises(GraphFormatError, match="positive"):
            load_edge_list("0 1 0")
        with pytest.raises(GraphFormatError, match="positive"):
            load_edge_list("0 1 -2")

    def test_malformed_line_reports_line_number(self):
        with pytest.raises(GraphFormatError, match="line 2"):
            load_edge_list("0 1 2\n0 1\n")

    def test_comments_and_blank_lines_skipped(self):
        g = load_edge_list("# header\n\n0 1 2\n")
        assert g.edge_count == 1

    def test_crlf_line_endings(self):
        g = load_edge_list("0 1 2\r\n1 2 3\r\n")
        assert g.edge_count == 2
        assert g.total_weight() == 5.0

    def test_labels_preserved_for_sparse_ids(self):
        g = load_edge_list("10 20 1.5\n20 30 2.5")
        assert g.node_count == 3
        assert [g.label(n) for n in range(3)] == ["10", "20", "30"]

    def test_decimal_weights_accepted(self):
        g = load_edge_list("0 1 0.25")
        assert g.weight(0, 1) == 0.25


class TestWeightedGraph:
    def test_weighted_degree(self):
        g = WeightedGraph(3, [(0, 1, 2.0), (0, 2, 1.0)])
        assert g.weighted_degree(0) == 3.0
        assert g.weighted_degree(1) == 2.0

    def test_isolated_node_degree_zero(self):
        g = WeightedGraph(2, [])
        assert g.weighted_degree(0) == 0.0

    def test_unit_triangle_degrees(self, unit_triangle):
        for n in range(3):
            assert unit_triangle.weighted_degree(n) == 2.0

    def test_out_of_range_errors(self, unit_triangle):
        with pytest.raises(ValueError):
            unit_triangle.weighted_degree(3)
        with pytest.raises(ValueError):
            unit_triangle.neighbors(-1)

    def test_total_weight_two_triangles(self, two_unit_triangles):
        assert two_unit_triangles.total_weight() == 6.0

    def test_empty_graph_total_weight(self):
        assert WeightedGraph(0).total_weight() == 0.0

    def test_handshake_identity(self):
        for seed in range(20):
            g = random_graph(seed, v=16, p=0.3, integer_weights=False)
            degree_sum = sum(g.weighted_degree(n) for n in range(g.node_count))
            assert degree_sum == pytest.approx(2.0 * g.total_weight(), rel=1e-12)

    def test_adjacency_symmetry(self):
        g = random_graph(3, v=12, p=0.4)
        for u, v, w in g.edges():
            assert g.neighbors(v)[u] == w


class TestDistance:
    def test_diagonal_zero(self, unit_triangle):
        assert distance(unit_triangle, 1, 1, 10.0) == 0.0

    def test_inverse_weight(self):
        g = WeightedGraph(2, [(0, 1, 2.0)])
        assert distance(g, 0, 1, 10.0) == 0.5

    def test_missing_edge_constant(self):
        g = WeightedGraph(3, [(0, 1, 2.0)])
        assert distance(g, 0, 2, 10.0) == 10.0

    def test_symmetry(self):
        g = random_graph(7, v=10, p=0.3)
        for i in range(10):
            for j in range(10):
                assert distance(g, i, j, 4.0) == distance(g, j, i, 4.0)
                if i != j:
                    assert distance(g, i, j, 4.0) > 0.0

    def test_errors(self, unit_triangle):
        with pytest.raises(ValueError):
            distance(unit_triangle, 0, 9, 1.0)
        with pytest.raises(ValueError):
            distance(unit_triangle, 0, 1, 0.0)


def star_plus_path() -> WeightedGraph:
    # component A: star with center 0 (degree 5); component B: path 6-7-8 (max degree 2)
    edges = [(0, i, 1.0) for i in range(1, 6)] + [(6, 7, 1.0), (7, 8, 1.0)]
    return WeightedGraph(9, edges)


class TestFilterByDegree:
    def test_threshold_zero_identity(self):
        g = star_plus_path()
        f = filter_by_degree(g, 0)
        assert f.node_count == g.node_count
        assert sorted((g.label(u), g.label(v), w) for u, v, w in f.edges()) == sorted(
            (g.label(u), g.label(v), w) for u, v, w in g.edges()
        )

    def test_keeps_only_qualifying_component(self):
        g = star_plus_path()
        f = filter_by_degree(g, 3)
        # component-scan oracle: only the star component has a node of degree >= 3
        expected = {comp_node for comp in connected_components(g)
                    if any(g.degree(n) >= 3 for n in comp) for comp_node in comp}
        assert f.node_count == len(expected)
        assert {f.label(n) for n in range(f.node_count)} == {str(n) for n in expected}

    def test_threshold_above_max_degree_empty(self):
        g = star_plus_path()
        f = filter_by_degree(g, 6)
        assert f.node_count == 0

    def test_idempotent(self):
        g = random_graph(11, v=20, p=0.1)
        once = filter_by_degree(g, 2)
        twice = filter_by_degree(once, 2)
        assert list(once.edges()) == list(twice.edges())
        assert once.node_count == twice.node_count

    def test_monotone_in_threshold(self):
        g = random_graph(13, v=24, p=0.12)
        low = filter_by_degree(g, 1)
        high = filter_by_degree(g, 3)
        low_edges = {(low.label(u), low.label(v)) for u, v, _ in low.edges()}
        high_edges = {(high.label(u), high.label(v)) for u, v, _ in high.edges()}
        assert high_edges <= low_edges


class TestRoundTrip:
    def test_dump_and_reload(self):
        def edge_multiset(g):
            return sorted((*sorted((g.label(u), g.label(v))), w) for u, v, w in g.edges())

        for seed in range(10):
            g = random_graph(seed, v=14, p=0.3, integer_weights=False)
            reloaded = load_edge_list(dump_edge_list(g))
            assert edge_multiset(g) == edge_multiset(reloaded)


def make_records():
    return [
        TweetRecord(0, "sport", "lefigaro.fr", dt.date(2015, 1, 10)),
        TweetRecord(0, "war", "slate.fr", dt.date(2015, 2, 1)),
        TweetRecord(1, "sport", "slate.fr", dt.date(2015, 3, 5)),
    ]


class TestFilterRecords:
    def test_no_predicates_pass_through(self):
        records = make_records()
        assert filter_records(records) == records

    def test_theme_filter(self):
        records = make_records()
        out = filter_records(records, themes={"sport"})
        assert [r.theme for r in out] == ["sport", "sport"]

    def test_media_filter(self):
        out = filter_records(make_records(), medias={"slate.fr"})
        assert len(out) == 2

    def test_disjoint_date_range_empty(self):
        out = filter_records(make_records(), date_range=(dt.date(2020, 1, 1), dt.date(2020, 2, 1)))
        assert out == []

    def test_date_range_inclusive(self):
        out = filter_records(make_records(), date_range=(dt.date(2015, 2, 1), dt.date(2015, 3, 5)))
        assert len(out) == 2


DATASET = {
    "nodes": [
        {"id": "a", "label": "alice", "followers": 10, "tweets": 99, "reporter": True},
        {"id": "b", "label": "bob", "followers": 5},
        {"id": "c", "label": "carol"},
    ],
    "edges": [
        {"source": "a", "target": "b", "type": "retweet", "weight": 2},
        {"source": "b", "target": "c", "type": "mention", "weight": 1},
    ],
    "records": [
        {"author": "a", "theme": "sport", "media": "slate.fr", "date": "2015-01-10"},
        {"author": "a", "theme": "war", "media": "slate.fr", "date": "2015-01-11"},
    ],
}


class TestAttributedJson:
    def test_load_and_edge_type_selection(self):
        ds = load_attributed_json(json.dumps(DATASET))
        assert ds.node_count == 3
        retweet = build_graph(ds, "retweet")
        mention = build_graph(ds, "mention")
        assert retweet.edge_count == 1 and retweet.weight(0, 1) == 2.0
        assert mention.edge_count == 1 and mention.weight(1, 2) == 1.0

    def test_tweet_counts_recomputed_from_records(self):
        ds = load_attributed_json(DATASET)
        assert ds.attrs[0].tweet_count == 2  # the stale "tweets": 99 is replaced
        assert ds.attrs[1].tweet_count == 0

    def test_unknown_edge_endpoint(self):
        bad = {"nodes": [{"id": 1}], "edges": [{"source": 1, "target": 2, "weight": 1}]}
        with pytest.raises(GraphFormatError, match="unknown node"):
            load_attributed_json(bad)

    def test_unknown_record_author(self):
        bad = {"nodes": [{"id": 1}], "records": [{"author": 7, "theme": "", "media": "", "date": "2015-01-01"}]}
        with pytest.raises(GraphFormatError, match="unknown author"):
            load_attributed_json(bad)

    def test_bad_date(self):
        bad = {"nodes": [{"id": 1}], "records": [{"author": 1, "theme": "", "media": "", "date": "nope"}]}
        with pytest.raises(GraphFormatError, match="ISO date"):
            load_attributed_json(bad)

    def test_duplicate_typed_edge(self):
        bad = {
            "nodes": [{"id": 1}, {"id": 2}],
            "edges": [
                {"source": 1, "target": 2, "type": "retweet", "weight": 1},
                {"source": 2, "target": 1, "type": "retweet", "weight": 3},
            ],
        }
        with pytest.raises(GraphFormatError, match="duplicates"):
            load_attributed_json(bad)

    def test_same_pair_different_types_allowed(self):
        data = {
            "nodes": [{"id": 1}, {"id": 2}],
            "edges": [
                {"source": 1, "target": 2, "type": "retweet", "weight": 1},
                {"source": 1, "target": 2, "type": "mention", "weight": 3},
            ],
        }
        ds = load_attributed_json(data)
        assert len(ds.edges) == 2
