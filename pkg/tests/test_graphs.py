"""Tests for graph construction, surgery, and the text format."""

import pytest
from hypothesis import given, strategies as st

from latin3.errors import GraphParseError
from latin3.graphs import (
    Graph,
    build_gn,
    build_gnpq,
    cartesian_product,
    complete,
    complete_bipartite,
    delete_edge,
    format_graph,
    gn_labeling,
    gnpq_labeling,
    identify,
    identify_with_map,
    line_graph,
    parse_graph,
)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


@st.composite
def graphs(draw, max_vertices: int = 8):
    n = draw(st.integers(2, max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


def test_from_edges_normalizes_and_dedupes():
    g = Graph.from_edges(3, [(2, 0), (0, 2), (1, 2)])
    assert g.edges == frozenset({(0, 2), (1, 2)})
    assert g.edge_count == 2
    assert g.has_edge(2, 0)
    assert g.neighbors(2) == {0, 1}
    assert g.degree(2) == 2 and g.degree(0) == 1


def test_graph_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, frozenset({(2, 0)}))  # unnormalized pair
    with pytest.raises(ValueError):
        Graph(-1, frozenset())


def test_adjacency_masks():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert g.adjacency_masks() == (0b010, 0b101, 0b010)


def test_complete_bipartite_counts():
    assert complete_bipartite(1, 1).edge_count == 1
    g = complete_bipartite(3, 2)
    assert (g.vertex_count, g.edge_count) == (5, 6)
    assert complete_bipartite(3, 4).edge_count == 12
    with pytest.raises(ValueError):
        complete_bipartite(0, 2)


def test_line_graph_small():
    assert line_graph(path(3)) == complete(2)
    assert line_graph(complete(3)) == complete(3)
    lg = line_graph(complete_bipartite(3, 2))
    assert (lg.vertex_count, lg.edge_count) == (6, 9)
    assert lg == build_gn(2)


def test_cartesian_product_small():
    assert cartesian_product(complete(1), complete(3)) == complete(3)
    c4 = cartesian_product(complete(2), complete(2))
    assert (c4.vertex_count, c4.edge_count) == (4, 4)
    assert all(c4.degree(v) == 2 for v in range(4))
    k33 = cartesian_product(complete(3), complete(3))
    assert (k33.vertex_count, k33.edge_count) == (9, 18)


def test_build_gn_counts_and_labeled_equality():
    assert build_gn(1) == complete(3)
    for n in range(1, 6):
        g = build_gn(n)
        assert g.vertex_count == 3 * n
        assert g.edge_count == 3 * n * (n - 1) // 2 + 3 * n
        assert g == line_graph(complete_bipartite(3, n))


def test_gn_labeling():
    assert gn_labeling(2) == {
        "x1_1": 0, "x1_2": 1, "x2_1": 2, "x2_2": 3, "x3_1": 4, "x3_2": 5,
    }
    assert sorted(gn_labeling(4).values()) == list(range(12))


def test_delete_edge():
    p = delete_edge(complete(3), 0, 1)
    assert p.edges == frozenset({(0, 2), (1, 2)})
    assert delete_edge(complete(2), 0, 1).edge_count == 0
    assert delete_edge(build_gn(2), 0, 2).edge_count == 8  # prism minus a rung
    with pytest.raises(ValueError):
        delete_edge(path(3), 0, 2)


def test_identify_small():
    g, index_map = identify_with_map(complete(2), 0, 1)
    assert (g.vertex_count, g.edge_count) == (1, 0)
    assert index_map == (0, 0)
    assert identify(complete(3), 1, 2) == complete(2)
    leaves = identify(path(3), 0, 2)
    assert (leaves.vertex_count, leaves.edge_count) == (2, 1)


def test_identify_map_is_compact():
    merged, index_map = identify_with_map(build_gn(2), 1, 4)
    assert merged.vertex_count == 5
    assert index_map == (0, 1, 2, 3, 1, 4)


def test_identify_rejects_bad_vertices():
    with pytest.raises(ValueError):
        identify(complete(3), 1, 1)
    with pytest.raises(ValueError):
        identify(complete(3), 0, 5)


@given(graphs(), st.data())
def test_identify_symmetric(g, data):
    u = data.draw(st.integers(0, g.vertex_count - 1))
    v = data.draw(
        st.integers(0, g.vertex_count - 1).filter(lambda x: x != u)
    )
    assert identify(g, u, v) == identify(g, v, u)


def test_build_gnpq_counts():
    for n in range(1, 6):
        assert build_gnpq(n, 0, 0) == build_gn(n)
        for p in range(n + 1):
            for q in range(n - p + 1):
                assert build_gnpq(n, p, q).vertex_count == 3 * n - q


def test_build_gnpq_smallest_cases():
    p3 = build_gnpq(1, 1, 0)
    assert (p3.vertex_count, p3.edge_count) == (3, 2)
    assert build_gnpq(1, 0, 1) == complete(2)


def test_build_gnpq_rejects_bad_split():
    with pytest.raises(ValueError):
        build_gnpq(2, 2, 1)
    with pytest.raises(ValueError):
        build_gnpq(1, -1, 1)
    with pytest.raises(ValueError):
        build_gnpq(0, 0, 0)


def test_gnpq_labeling_structure():
    g = build_gnpq(3, 1, 2)
    labels = gnpq_labeling(3, 1, 2)
    assert sorted(labels.values()) == list(range(g.vertex_count))
    assert "y2" in labels and "y3" in labels
    for gone in ("x1_2", "x2_2", "x1_3", "x2_3"):
        assert gone not in labels
    # the deleted column keeps both cells; merged vertices inherit row edges
    assert "x1_1" in labels and "x2_1" in labels
    assert g.has_edge(labels["y2"], labels["x1_1"])
    assert g.has_edge(labels["y2"], labels["y3"])
    assert not g.has_edge(labels["x1_1"], labels["x2_1"])  # rung was deleted


def test_parse_graph_basic():
    text = "# a triangle\n3\n\n0 1\n1 2\n0 2\n"
    assert parse_graph(text) == complete(3)


def test_parse_graph_collapses_duplicates():
    assert parse_graph("2\n0 1\n1 0\n") == complete(2)


def test_format_parse_round_trip_fixed():
    for g in (complete(4), build_gn(2), Graph.from_edges(5, []), build_gnpq(2, 1, 1)):
        assert parse_graph(format_graph(g)) == g


@given(graphs())
def test_format_parse_round_trip_random(g):
    assert parse_graph(format_graph(g)) == g


@pytest.mark.parametrize(
    "text,line",
    [
        ("", 1),
        ("x\n", 1),
        ("3\n0 1 2\n", 2),
        ("3\n0 a\n", 2),
        ("# c\n3\n\n1 1\n", 4),
        ("2\n0 2\n", 2),
        ("-1\n", 1),
    ],
)
def test_parse_graph_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphParseError) as err:
        parse_graph(text)
    assert err.value.line_number == line
