from fractions import Fraction

import pytest
from streamgen import fixture

from streamgraphs import UNDIRECTED, StaticGraph, StreamGraph, induced_graph, snapshot
from streamgraphs import static as g
from streamgraphs.catalog import graph_metrics

F = Fraction


def graph(edges, nodes=None, kind=UNDIRECTED, sides=None):
    nodes = frozenset(nodes if nodes is not None else {x for e in edges for x in e})
    return StaticGraph(kind, nodes, {e: F(1) for e in edges}, None, sides)


def test_snapshots_of_figure1():
    S = fixture("fig1.sg")
    G = snapshot(S, 2)
    assert G.nodes == {"a", "b", "d"}
    assert set(G.edges) == {("a", "b"), ("b", "d")}
    G = snapshot(S, F(19, 2))
    assert G.nodes == {"a", "b"} and not G.edges


def test_snapshot_outside_horizon():
    with pytest.raises(ValueError):
        snapshot(fixture("fig1.sg"), 11)


def test_induced_graphs():
    assert set(induced_graph(fixture("fig1.sg")).edges) == {("a", "b"), ("a", "c"), ("b", "c"), ("b", "d")}
    assert set(induced_graph(fixture("fig4.sg")).edges) == {("a", "b"), ("b", "a"), ("c", "a"), ("b", "c"), ("d", "b")}
    G = induced_graph(StreamGraph(UNDIRECTED, (0, 1), {}))
    assert not G.nodes and not G.edges


def test_graph_equivalent_snapshot_is_induced_graph():
    S = fixture("fig3.sg")
    full = S.time
    S = StreamGraph(S.kind, S.horizon, S.nodes, {k: full for k in S.links}, sides=S.sides)
    assert snapshot(S, F(7, 3)) == induced_graph(S)


def test_triangle_transitivity():
    G = graph([("a", "b"), ("a", "c"), ("b", "c")])
    assert graph_metrics(G, "transitivity").values[""] == 1
    assert g.clustering(G, "a") == 1
    assert g.density(G) == 1


def test_figure3_induced_bipartite_density():
    assert graph_metrics(induced_graph(fixture("fig3.sg")), "bipartite_density").values[""] == F(5, 6)


def test_figure4_induced_out_degree():
    assert g.out_degree(induced_graph(fixture("fig4.sg")), "b") == 2


def test_per_node_report_marks_undefined():
    report = graph_metrics(graph([("a", "b")], nodes="abc"), "cc")
    doc = report.to_json()
    assert doc["scope"] == "per-node"
    assert doc["values"]["a"] == {"exact": "undefined", "float": None}


def test_directed_graph_counts():
    G = graph([("a", "b"), ("b", "a"), ("a", "a")], kind="directed")
    assert g.directed_density(G) == F(3, 4)
    assert g.symmetric_fraction(G) == 1
    assert g.loop_fraction(G) == F(1, 2)


def test_graph_json_is_sorted():
    doc = induced_graph(fixture("fig1.sg")).to_json()
    assert doc["nodes"] == ["a", "b", "c", "d"]
    assert doc["edges"] == [["a", "b"], ["a", "c"], ["b", "c"], ["b", "d"]]
