"""Weighted and bipartite notions collapse to the plain ones where they should."""

import random
from fractions import Fraction

import pytest
from streamgen import BIPARTITE, UNDIRECTED, fixture, grid_stream

from streamgraphs import StreamGraph, UndefinedMetric, core
from streamgraphs import bipartite as bp
from streamgraphs import weighted as wt
from streamgraphs.valuefns import VALUE_FUNCTIONS


def unit(S):
    return StreamGraph(S.kind, S.horizon, S.nodes, S.links, link_weights={}, sides=S.sides)


def same(f, g):
    try:
        a = f()
    except UndefinedMetric:
        with pytest.raises(UndefinedMetric):
            g()
        return
    assert a == g()


def unit_streams():
    yield unit(fixture("fig1.sg"))
    yield unit(fixture("fig3.sg"))
    for i in range(60):
        yield unit(grid_stream(random.Random(i), UNDIRECTED, dense=i % 2 == 0))


@pytest.mark.parametrize("fn", VALUE_FUNCTIONS)
def test_unit_weight_transitivity_is_plain(fn):
    for S in unit_streams():
        same(lambda: core.transitivity(S), lambda: wt.weighted_transitivity(S, fn))
        for v in S.nodes:
            same(lambda: core.clustering_coefficient(S, v), lambda: wt.weighted_clustering_general(S, v, fn))


def test_unit_weight_strength_is_degree():
    for S in unit_streams():
        for v in S.nodes:
            assert wt.strength(S, v) == core.degree(S, v)


def test_threshold_is_monotone():
    for i in range(60):
        S = grid_stream(random.Random(100 + i), UNDIRECTED, weighted=True, dense=True)
        taus = sorted({Fraction(0), *(x for w in S.link_weights.values() for x in w.values()), Fraction(100)})
        previous = None
        for tau in taus:
            cur = wt.threshold(S, tau)
            assert not cur.is_weighted
            if previous is not None:
                for key, ts in cur.links.items():
                    assert ts.issubset(previous.link(*key))
                assert core.link_count(cur) <= core.link_count(previous)
            previous = cur
        assert wt.threshold(S, taus[0]).links == S.links
        assert wt.threshold(S, taus[-1]).links == {}


def bipartite_fixtures():
    yield fixture("fig3.sg")
    for i in range(40):
        yield grid_stream(random.Random(200 + i), BIPARTITE, dense=True, balanced=True)


def test_top_neighbourhoods_are_bottom_cliques():
    for S in bipartite_fixtures():
        P = bp.project(S, "bottom")
        for v in S.side_nodes("top"):
            assert core.is_clique(P, core.neighborhood(S, v))
        P = bp.project(S, "top")
        for v in S.side_nodes("bottom"):
            assert core.is_clique(P, core.neighborhood(S, v))
