from fractions import Fraction

import pytest
from streamgen import fixture

from streamgraphs import BIPARTITE, IntervalSet, SideError, StreamGraph, UndefinedMetric, ValidationError
from streamgraphs import bipartite as bp
from streamgraphs import core
from streamgraphs.oracle import oracle_metric

F = Fraction


def iset(*pairs):
    return IntervalSet(pairs)


@pytest.fixture(scope="module")
def fig3():
    return fixture("fig3.sg")


def complete(tops, bottoms, T=(0, 1)):
    full = iset(T)
    sides = {**{v: "top" for v in tops}, **{v: "bottom" for v in bottoms}}
    return StreamGraph(
        BIPARTITE, T, {v: full for v in sides}, {(u, v): full for u in tops for v in bottoms}, sides=sides
    )


class TestProjection:
    def test_bottom(self, fig3):
        P = bp.project(fig3, "bottom")
        assert P.links == {
            ("a", "b"): iset((4, 5), (8, 9)),
            ("a", "c"): iset((1, 2), (3, 5)),
            ("b", "c"): iset((2, 7)),
        }

    def test_weighted_bottom(self, fig3):
        w = bp.project(fig3, "bottom", weighted=True).link_weight("b", "c")
        assert w.support == iset((2, 7))
        assert w.integrate(iset((4, 5))) == 2
        assert w.integrate(iset((2, 4))) == 2
        assert w.integrate(iset((5, 7))) == 2
        assert w.value_at(F(9, 2)) == 2 and w.value_at(3) == 1 and w.value_at(6) == 1

    def test_single_node_side(self):
        assert bp.project(complete("u", "ab"), "top").links == {}

    def test_neighbourhoods_are_cliques_of_projection(self, fig3):
        P = bp.project(fig3, "bottom")
        for v in fig3.side_nodes("top"):
            assert core.is_clique(P, core.neighborhood(fig3, v))


class TestCounts:
    def test_figure3(self, fig3):
        assert bp.side_counts(fig3) == (2, 3)
        assert core.link_count(fig3) == F(14, 5)
        assert bp.side_average_degree(fig3, "top") == F(7, 5)
        assert bp.side_average_degree(fig3, "bottom") == F(14, 15)
        assert bp.bipartite_density(fig3) == F(7, 15)

    def test_empty_and_half(self):
        S = StreamGraph(BIPARTITE, (0, 2), {"u": iset((0, 1)), "a": IntervalSet()}, sides={"u": "top", "a": "bottom"})
        assert bp.side_counts(S) == (F(1, 2), 0)
        S = StreamGraph(BIPARTITE, (0, 2), {}, sides={})
        assert bp.side_counts(S) == (0, 0)

    def test_complete_and_empty_density(self):
        assert bp.bipartite_density(complete("uv", "abc")) == 1
        S = complete("u", "a")
        S = StreamGraph(BIPARTITE, S.horizon, S.nodes, {}, sides=S.sides)
        assert bp.bipartite_density(S) == 0


class TestCliques:
    def test_figure3(self, fig3):
        assert bp.is_bipartite_clique(fig3, {"u": iset((1, 2))}, {"a": iset((1, 2)), "c": iset((1, 2))})
        assert not bp.is_bipartite_clique(fig3, {"v": iset((0, 1))}, {"a": iset((0, 1))})
        assert bp.is_bipartite_clique(fig3, {"u": iset((0, 10))}, {})

    def test_wrong_side(self, fig3):
        with pytest.raises(SideError):
            bp.is_bipartite_clique(fig3, {"a": iset((0, 1))}, {})


class TestJaccard:
    def test_figure3(self, fig3):
        assert bp.jaccard(fig3, "u", "v") == F(5, 23)

    def test_instantaneous(self, fig3):
        # at t=4.5: N(u) = {a, b, c}, N(v) = {b, c}
        assert bp.jaccard(fig3, "u", "v", at=F(9, 2)) == F(2, 3)

    def test_identical_and_disjoint(self):
        S = complete("uv", "ab")
        assert bp.jaccard(S, "u", "v") == 1
        full = iset((0, 1))
        S = StreamGraph(
            BIPARTITE,
            (0, 1),
            {v: full for v in "uvab"},
            {("u", "a"): full, ("v", "b"): full},
            sides={"u": "top", "v": "top", "a": "bottom", "b": "bottom"},
        )
        assert bp.jaccard(S, "u", "v") == 0
        with pytest.raises(UndefinedMetric):
            bp.jaccard_clustering(S, "u")

    def test_needs_same_side(self, fig3):
        with pytest.raises(SideError):
            bp.jaccard(fig3, "u", "a")
        with pytest.raises(ValidationError):
            bp.jaccard(fig3, "u", "u")

    def test_clustering_single_co_neighbour(self):
        assert bp.jaccard_clustering(complete("uv", "ab"), "u") == 1

    def test_clustering_matches_oracle(self, fig3):
        for v in fig3.nodes:
            assert bp.jaccard_clustering(fig3, v) == oracle_metric(fig3, "jaccard_cc", 1, node=v)


class TestRedundancy:
    def test_figure3(self, fig3):
        assert bp.redundancy(fig3, "c") == F(1, 4)

    def test_complete(self):
        assert bp.redundancy(complete("abc", "xy"), "x") == 1

    def test_star(self):
        assert bp.redundancy(complete("u", "abc"), "u") == 0


class TestCcStar:
    def test_complete_three_by_three(self):
        S = complete("abc", "xyz")
        for v in S.nodes:
            assert bp.cc_star(S, v) == 1

    def test_two_by_two_has_no_sextuplet(self):
        S = complete("ab", "xy")
        for v in S.nodes:
            with pytest.raises(UndefinedMetric):
                bp.cc_star(S, v)
            with pytest.raises(UndefinedMetric):
                oracle_metric(S, "cc_star", 1, node=v)

    def test_isolated(self):
        S = StreamGraph(BIPARTITE, (0, 1), {"u": iset((0, 1))}, sides={"u": "top"})
        with pytest.raises(UndefinedMetric):
            bp.cc_star(S, "u")


class TestTransitivity:
    def test_complete(self):
        S = complete("abc", "xyz")
        assert bp.bipartite_transitivity(S, "quad") == 1
        assert bp.bipartite_transitivity(S, "quint") == 1

    def test_single_path(self):
        full = iset((0, 1))
        S = StreamGraph(
            BIPARTITE,
            (0, 1),
            {v: full for v in "axby"},
            {("a", "x"): full, ("b", "x"): full, ("b", "y"): full},
            sides={"a": "top", "b": "top", "x": "bottom", "y": "bottom"},
        )
        assert bp.bipartite_transitivity(S, "quad") == 0

    def test_figure3_matches_oracle(self, fig3):
        for variant in ("quad", "quint"):
            try:
                expected = oracle_metric(fig3, "bipartite_transitivity", 1, variant=variant)
            except UndefinedMetric:
                with pytest.raises(UndefinedMetric):
                    bp.bipartite_transitivity(fig3, variant)
            else:
                assert bp.bipartite_transitivity(fig3, variant) == expected
