"""Graph-equivalent streams: every stream metric equals its graph counterpart on G(S)."""

import random
from fractions import Fraction

import pytest
from streamgen import BIPARTITE, DIRECTED, UNDIRECTED, graph_equivalent, metric_cases, mismatches

from streamgraphs import core, evaluate, evaluate_graph, induced_graph

STREAMS = 100
FAMILIES = [(UNDIRECTED, False), (UNDIRECTED, True), (BIPARTITE, False), (DIRECTED, False)]


def family_streams(kind, weighted):
    seed = {UNDIRECTED: 0, BIPARTITE: 1, DIRECTED: 2}[kind] * 10_000 + weighted * 100_000
    return [graph_equivalent(random.Random(seed + i), kind, weighted) for i in range(STREAMS)]


def check_family(kind, weighted):
    bad, cases = [], 0
    for S in family_streams(kind, weighted):
        assert core.is_graph_equivalent(S)
        G = induced_graph(S)
        todo = list(metric_cases(S))
        cases += len(todo)
        bad += mismatches(
            todo,
            lambda *c: evaluate(S, *c),
            lambda *c: evaluate_graph(G, *c),
        )
    return cases, bad


@pytest.mark.parametrize("kind,weighted", FAMILIES, ids=["undirected", "weighted", "bipartite", "directed"])
def test_stream_metrics_equal_graph_metrics(kind, weighted):
    cases, bad = check_family(kind, weighted)
    assert cases > STREAMS
    assert not bad, bad[:5]


def test_unit_interval_density_equivalence():
    # weights in [0, 1] so the unit-interval variant is defined
    for i in range(STREAMS):
        S = graph_equivalent(random.Random(500 + i), UNDIRECTED, weighted=True)
        ws = {k: w.map(lambda x: x / 9) for k, w in S.link_weights.items()}
        S = type(S)(S.kind, S.horizon, S.nodes, S.links, link_weights=ws)
        G = induced_graph(S)
        cases = [("weighted_density", None, None, "unit_interval")]
        assert not mismatches(cases, lambda *c: evaluate(S, *c), lambda *c: evaluate_graph(G, *c))
        if len(S.nodes) > 1:
            assert evaluate(S, "weighted_density", variant="unit_interval") <= Fraction(1)
