import random

import pytest
from streamgen import BIPARTITE, DIRECTED, FIXTURES, UNDIRECTED, fixture, fixture_text, graph_equivalent, grid_stream

from streamgraphs import IntervalSet, ParseError, StepWeight, StreamGraph, dumps, loads
from streamgraphs import bipartite as bp
from streamgraphs import weighted as wt
from streamgraphs.io import fmt


def iset(*pairs):
    return IntervalSet(pairs)


def test_figure1_parses_exactly():
    S = fixture("fig1.sg")
    assert S.kind == UNDIRECTED
    assert S.horizon == (0, 10)
    assert S.nodes == {
        "a": iset((0, 10)),
        "b": iset((0, 4), (5, 10)),
        "c": iset((4, 9)),
        "d": iset((1, 3)),
    }
    assert S.links == {
        ("a", "b"): iset((1, 3), (7, 8)),
        ("a", "c"): iset(("4.5", "7.5")),
        ("b", "c"): iset((6, 9)),
        ("b", "d"): iset((2, 3)),
    }


@pytest.mark.parametrize("name", FIXTURES)
def test_fixture_round_trip(name):
    S = fixture(name)
    assert loads(dumps(S)) == S
    assert dumps(loads(dumps(S))) == dumps(S)


def random_streams():
    for i in range(25):
        rng = random.Random(i)
        yield grid_stream(rng, UNDIRECTED)
        yield grid_stream(rng, UNDIRECTED, weighted=True)
        yield grid_stream(rng, BIPARTITE)
        yield grid_stream(rng, DIRECTED)


def test_random_round_trip():
    count = 0
    for S in random_streams():
        assert loads(dumps(S)) == S
        count += 1
    assert count >= 100


def test_derived_streams_round_trip():
    S = fixture("fig1.sg")
    D = wt.delta_analysis(S, 1, 1)
    assert loads(dumps(D)) == D
    P = bp.project(fixture("fig3.sg"), "bottom", weighted=True)
    assert loads(dumps(P)) == P
    G = graph_equivalent(random.Random(3), UNDIRECTED, weighted=True)
    assert loads(dumps(G)) == G


def test_edge_cases_round_trip():
    cases = [
        StreamGraph(UNDIRECTED, (0, 1), {}),
        StreamGraph(UNDIRECTED, (0, 1), {"ghost": IntervalSet()}),
        StreamGraph(UNDIRECTED, (0, 1), {"a": iset((0, 1))}, link_weights={}),
        StreamGraph(BIPARTITE, (0, 1), {"u": IntervalSet()}, sides={"u": "top"}),
        StreamGraph(DIRECTED, ("1/3", "2/3"), {"a": iset(("1/3", "1/2"), ("7/12", "7/12"))}),
        StreamGraph(
            UNDIRECTED,
            (0, 2),
            {"a": iset((0, 2))},
            node_weights={"a": StepWeight([((0, 1), 3), ((1, 2), "1/3")])},
        ),
    ]
    for S in cases:
        assert loads(dumps(S)) == S


def test_number_formats():
    assert fmt(4) == "4"
    assert fmt("9/2") == "4.5"
    assert fmt("-1/8") == "-0.125"
    assert fmt("1/3") == "1/3"
    S = loads("stream undirected\nT 0 1/3\nN a 0.1 1/3\n")
    assert S.presence("a") == iset(("1/10", "1/3"))


def test_comments_and_unions():
    S = loads("# header\nstream undirected   # kind\n\nT 0 10\nN a 0 4\nN a 3 6 # overlap\nN b 0 10\nL a b 1 2\nL a b 2 3\n")
    assert S.presence("a") == iset((0, 6))
    assert S.link("a", "b") == iset((1, 3))


def test_mixed_weights_make_weighted_stream():
    S = loads("stream undirected\nT 0 2\nN a 0 2\nN b 0 2\nL a b 0 1 3\nL a b 1 2\n")
    assert S.is_weighted
    assert S.link_weight("a", "b").pieces == (((0, 1), 3), ((1, 2), 1))


def test_directed_loop_accepted():
    S = loads("stream directed\nT 0 1\nN a 0 1\nA a a 0 1\n")
    assert S.link("a", "a") == iset((0, 1))


@pytest.mark.parametrize(
    "text,code,line",
    [
        ("stream undirected\nT 0 10\nN a 0 10\nL a d 0 1\n", "containment", 4),
        ("stream undirected\nT 0 10\nN a 0 10\nN d 2 3\nL a d 0 1\n", "containment", 5),
        ("stream undirected\nT 0 10\nN a 0 11\n", "containment", 3),
        ("stream bipartite\nT 0 1\nN u 0 1\n", "side", 3),
        ("stream bipartite\nT 0 1\nside u top\nside a top\nN u 0 1\nN a 0 1\nL u a 0 1\n", "side", 7),
        ("stream undirected\nT 0 1\nside u top\n", "side", 3),
        ("stream undirected\nT 0 2\nN a 0 2\nNW a 0 1 2\n", "weight-support", 4),
        ("stream undirected\nT 0 2\nN a 0 2\nN b 0 2\nL a b 0 2 1\nL a b 1 2 3\n", "weight-conflict", 5),
        ("stream undirected\nT 0 x\n", "syntax", 2),
        ("stream sideways\nT 0 1\n", "syntax", 1),
        ("stream undirected\nN a 0 1\n", "syntax", 2),
        ("stream undirected\nT 0 1\nN a 0\n", "syntax", 3),
        ("stream undirected\nT 0 1\nN a 1 0\n", "syntax", 3),
        ("stream undirected\nT 0 1\nA a b 0 1\n", "syntax", 3),
        ("stream undirected\nT 0 1\nN a 0 1\nL a a 0 1\n", "syntax", 4),
        ("stream undirected\nT 0 1\nQ a\n", "syntax", 3),
        ("", "syntax", None),
    ],
)
def test_parse_errors(text, code, line):
    with pytest.raises(ParseError) as err:
        loads(text)
    assert err.value.code == code
    assert err.value.line == line


def test_fixture_text_is_readable():
    assert "L a c 4.5 7.5" in fixture_text("fig1.sg")
