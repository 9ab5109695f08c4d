from fractions import Fraction

import pytest
from streamgen import fixture

from streamgraphs import DIRECTED, IntervalSet, StreamGraph, UndefinedMetric
from streamgraphs import core
from streamgraphs import directed as dr
from streamgraphs.oracle import oracle_metric

F = Fraction


def iset(*pairs):
    return IntervalSet(pairs)


@pytest.fixture(scope="module")
def fig4():
    return fixture("fig4.sg")


def always(names, arcs):
    full = iset((0, 1))
    return StreamGraph(DIRECTED, (0, 1), {v: full for v in names}, {a: full for a in arcs})


CYCLE = ("abc", [("a", "b"), ("b", "c"), ("c", "a")])
TRIANGLE = ("abc", [("a", "b"), ("b", "c"), ("a", "c")])


class TestFigure4:
    def test_neighbourhoods(self, fig4):
        assert dr.out_neighborhood(fig4, "a") == {"b": iset((1, 3))}
        assert dr.in_neighborhood(fig4, "a") == {"b": iset((F(5, 2), F(7, 2))), "c": iset((F(9, 2), F(15, 2)))}

    def test_degrees(self, fig4):
        assert dr.out_degree(fig4, "a") == F(1, 5)
        assert dr.in_degree(fig4, "a") == F(2, 5)
        m = core.link_count(fig4)
        assert m == 1
        assert sum(dr.out_degree(fig4, v) for v in fig4.nodes) == m
        assert sum(dr.in_degree(fig4, v) for v in fig4.nodes) == m

    def test_density(self, fig4):
        assert dr.directed_density(fig4) == F(1, 7)

    def test_symmetry(self, fig4):
        assert dr.symmetric_fraction(fig4) == F(1, 10)
        assert dr.loop_fraction(fig4) == 0
        assert dr.symmetry_stats(fig4) == (F(1, 10), 0)

    def test_cliques(self, fig4):
        assert dr.is_directed_clique(fig4, {"a": iset((F(5, 2), 3)), "b": iset((F(5, 2), 3))})
        assert not dr.is_directed_clique(fig4, {"a": iset((1, 2)), "b": iset((1, 2))})
        assert dr.is_directed_clique(fig4, {"c": iset((5, 6))})

    def test_undirect(self, fig4):
        U = dr.undirect(fig4)
        assert U.link("a", "b") == iset((1, F(7, 2)))
        assert core.link_count(U) < core.link_count(fig4)

    def test_sink(self, fig4):
        assert dr.out_neighborhood(fig4, "a") and not dr.out_neighborhood(always("ab", [("a", "b")]), "b")


class TestSmall:
    def test_complete_with_loops(self):
        S = always("ab", [("a", "b"), ("b", "a"), ("a", "a"), ("b", "b")])
        assert dr.directed_density(S) == 1
        assert dr.symmetric_fraction(S) == 1
        assert dr.loop_fraction(S) == 1

    def test_no_arcs(self):
        S = always("ab", [])
        assert dr.directed_density(S) == 0
        with pytest.raises(UndefinedMetric):
            dr.directed_transitivity(S, "cyclic")

    def test_undirect_symmetric_and_loops(self):
        S = always("ab", [("a", "b"), ("b", "a")])
        assert dr.undirect(S).links == {("a", "b"): iset((0, 1))}
        assert dr.undirect(always("ab", [("a", "a")])).links == {}


class TestClosures:
    def test_cycle(self):
        S = always(*CYCLE)
        assert dr.directed_clustering(S, "b", "cyclic") == 1
        assert dr.directed_clustering(S, "b", "transitive") == 0
        assert dr.directed_transitivity(S, "cyclic") == 1
        assert dr.directed_transitivity(S, "transitive") == 0

    def test_transitive_triangle(self):
        S = always(*TRIANGLE)
        assert dr.directed_clustering(S, "b", "transitive") == 1
        assert dr.directed_clustering(S, "b", "cyclic") == 0

    def test_transitive_triangle_transitivity_agrees_with_oracle(self):
        # one two-path a -> b -> c, closed by a -> c
        S = always(*TRIANGLE)
        assert dr.directed_transitivity(S, "transitive") == 1
        assert oracle_metric(S, "directed_transitivity", F(1, 2), variant="transitive") == 1

    def test_single_neighbour_undefined(self):
        S = always("ab", [("a", "b"), ("b", "a")])
        for variant in dr.CLOSURES:
            with pytest.raises(UndefinedMetric):
                dr.directed_clustering(S, "a", variant)

    def test_single_neighbour_in_out_density_counts_the_loop_pair(self):
        S = always("ab", [("a", "b"), ("b", "a")])
        assert dr.directed_clustering(S, "a", "in") == 0
        assert dr.directed_clustering(S, "a", "out") == 0

    def test_no_neighbour_in_out_undefined(self):
        S = always("ab", [("a", "b")])
        with pytest.raises(UndefinedMetric):
            dr.directed_clustering(S, "a", "in")

    def test_in_out_density(self):
        S = always("abcd", [("a", "d"), ("b", "d"), ("a", "b"), ("d", "c")])
        # in-neighbourhood of d is {a, b}: 1 arc among 4 ordered pairs (loops included)
        assert dr.directed_clustering(S, "d", "in") == F(1, 4)
        assert dr.directed_clustering(S, "d", "out") == 0

    def test_figure4_matches_oracle(self, fig4):
        for v in fig4.nodes:
            for variant in dr.CLUSTERING_VARIANTS:
                try:
                    expected = oracle_metric(fig4, "directed_cc", F(1, 2), node=v, variant=variant)
                except UndefinedMetric:
                    with pytest.raises(UndefinedMetric):
                        dr.directed_clustering(fig4, v, variant)
                else:
                    assert dr.directed_clustering(fig4, v, variant) == expected
