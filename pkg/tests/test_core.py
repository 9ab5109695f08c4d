from fractions import Fraction

import pytest
from streamgen import fixture

from streamgraphs import (
    BIPARTITE,
    DIRECTED,
    UNDIRECTED,
    ContainmentError,
    IntervalSet,
    KindError,
    SideError,
    StepWeight,
    StreamGraph,
    UndefinedMetric,
    ValidationError,
    WeightSupportError,
)
from streamgraphs import core

F = Fraction


def iset(*pairs):
    return IntervalSet(pairs)


@pytest.fixture(scope="module")
def fig1():
    return fixture("fig1.sg")


def always(names, T=(0, 1), links=(), kind=UNDIRECTED):
    full = iset(T)
    return StreamGraph(kind, T, {v: full for v in names}, {p: full for p in links})


class TestConstruction:
    def test_node_outside_horizon(self):
        with pytest.raises(ContainmentError):
            StreamGraph(UNDIRECTED, (0, 1), {"a": iset((0, 2))})

    def test_link_outside_endpoint_presence(self):
        with pytest.raises(ContainmentError):
            StreamGraph(UNDIRECTED, (0, 2), {"a": iset((0, 2)), "b": iset((1, 2))}, {("a", "b"): iset((0, 2))})

    def test_self_loop_only_in_directed(self):
        with pytest.raises(ValidationError):
            always("a", links=[("a", "a")])
        assert always("a", links=[("a", "a")], kind=DIRECTED).link("a", "a") == iset((0, 1))

    def test_bipartite_link_within_side(self):
        with pytest.raises(SideError):
            StreamGraph(
                BIPARTITE,
                (0, 1),
                {"u": iset((0, 1)), "v": iset((0, 1))},
                {("u", "v"): iset((0, 1))},
                sides={"u": "top", "v": "top"},
            )

    def test_weight_support_must_match_presence(self):
        with pytest.raises(WeightSupportError):
            StreamGraph(
                UNDIRECTED,
                (0, 2),
                {"a": iset((0, 2)), "b": iset((0, 2))},
                {("a", "b"): iset((0, 2))},
                link_weights={("a", "b"): StepWeight.constant(iset((0, 1)), 2)},
            )

    def test_undirected_keys_are_unordered(self):
        S = always("ab", links=[("b", "a")])
        assert S.link("a", "b") == S.link("b", "a") == iset((0, 1))

    def test_directed_keys_are_ordered(self):
        S = always("ab", links=[("b", "a")], kind=DIRECTED)
        assert S.link("a", "b") == IntervalSet()


class TestStepWeight:
    def test_integrate(self):
        assert StepWeight.constant(iset((0, 3)), 2).integrate(iset((1, 2))) == 2
        assert StepWeight([((0, 1), 2), ((1, 2), 3)]).integrate(iset((0, 2))) == 5
        assert StepWeight.constant(iset((0, 3)), 2).integrate(IntervalSet()) == 0

    def test_left_piece_owns_boundary(self):
        w = StepWeight([((0, 1), 2), ((1, 2), 3)])
        assert w.value_at(1) == 2
        assert w.value_at(F(3, 2)) == 3
        assert w.value_at(5) is None

    def test_level_set(self):
        assert StepWeight([((0, 1), 2), ((1, 2), 3)]).level_set(F(5, 2)) == iset((1, 2))


class TestFigure1:
    def test_counts(self, fig1):
        assert core.node_count(fig1) == F(13, 5)
        assert core.link_count(fig1) == 1

    def test_neighborhoods(self, fig1):
        assert core.neighborhood(fig1, "d") == {"b": iset((2, 3))}
        assert core.neighborhood(fig1, "a") == {"b": iset((1, 3), (7, 8)), "c": iset((F(9, 2), F(15, 2)))}

    def test_degrees(self, fig1):
        assert core.degree(fig1, "a") == F(3, 5)
        assert core.degree(fig1, "d") == F(1, 10)
        assert core.average_degree(fig1) == F(31, 52)

    def test_density(self, fig1):
        assert core.density(fig1) == F(5, 11)

    def test_clique(self, fig1):
        assert core.is_clique(fig1, {"a": iset((1, 3)), "b": iset((1, 3))})
        assert not core.is_clique(fig1, {"a": iset((1, 3)), "d": iset((1, 3))})
        assert core.is_clique(fig1, {"c": iset((5, 6))})

    def test_clustering(self, fig1):
        assert core.clustering_coefficient(fig1, "b") == F(1, 4)
        assert core.transitivity(fig1) == F(3, 8)

    def test_not_graph_equivalent(self, fig1):
        assert not core.is_graph_equivalent(fig1)


class TestEdgeCases:
    def test_isolated_node(self):
        S = always("ab")
        assert core.neighborhood(S, "a") == {}
        assert core.degree(S, "a") == 0
        assert core.density(S) == 0
        assert core.link_count(S) == 0

    def test_empty_stream(self):
        S = StreamGraph(UNDIRECTED, (0, 1), {})
        assert core.node_count(S) == 0
        assert core.is_graph_equivalent(S)
        with pytest.raises(UndefinedMetric):
            core.density(S)

    def test_single_node_average_degree(self):
        assert core.average_degree(always("a")) == 0

    def test_complete_stream(self):
        S = always("abc", links=[("a", "b"), ("a", "c"), ("b", "c")])
        assert core.density(S) == 1
        assert core.transitivity(S) == 1
        assert core.clustering_coefficient(S, "a") == 1
        assert core.node_count(S) == 3
        assert core.is_graph_equivalent(S)

    def test_star_is_triangle_free(self):
        S = always("abcd", links=[("a", "b"), ("a", "c"), ("a", "d")])
        assert core.transitivity(S) == 0
        assert core.clustering_coefficient(S, "a") == 0

    def test_cc_needs_two_neighbours(self):
        with pytest.raises(UndefinedMetric):
            core.clustering_coefficient(always("ab", links=[("a", "b")]), "a")

    def test_zero_duration(self):
        S = StreamGraph(UNDIRECTED, (1, 1), {"a": iset((1, 1))})
        with pytest.raises(UndefinedMetric):
            core.node_count(S)

    def test_kind_checked(self):
        with pytest.raises(KindError):
            core.degree(always("ab", kind=DIRECTED), "a")


def test_clique_iff_induced_density_one(fig1):
    candidates = [
        {"a": iset((1, 3)), "b": iset((1, 3))},
        {"a": iset((1, 3)), "d": iset((1, 3))},
        {"a": iset((7, F(15, 2))), "b": iset((7, F(15, 2))), "c": iset((7, F(15, 2)))},
        {"a": iset((0, 10)), "b": iset((7, 8))},
    ]
    for C in candidates:
        sub = core.induced_substream(fig1, C)
        assert core.is_clique(fig1, C) == (core.density(sub) == 1)
