"""Undirected, unweighted metrics: size, degree, density, cliques, clustering."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Dict, Mapping

from .errors import UndefinedMetric, ValidationError
from .intervals import IntervalSet
from .stream import BIPARTITE, UNDIRECTED, StreamGraph


def _ratio(num: Fraction, den: Fraction, what: str) -> Fraction:
    if den == 0:
        raise UndefinedMetric(f"{what}: denominator is zero")
    return Fraction(num) / den


def node_count(S: StreamGraph) -> Fraction:
    """``n``: total node presence time over the horizon length."""
    T = S.require_duration()
    return sum((ts.measure for ts in S.nodes.values()), Fraction(0)) / T


def link_count(S: StreamGraph) -> Fraction:
    T = S.require_duration()
    return total_link_time(S) / T


def total_link_time(S: StreamGraph) -> Fraction:
    return sum((ts.measure for ts in S.links.values()), Fraction(0))


def total_node_time(S: StreamGraph) -> Fraction:
    return sum((ts.measure for ts in S.nodes.values()), Fraction(0))


def neighborhood(S: StreamGraph, v: str) -> Dict[str, IntervalSet]:
    """``N(v)`` as a map neighbour -> presence of the link."""
    S.require_kind(UNDIRECTED, BIPARTITE)
    return dict(S.adjacency(v))


def degree(S: StreamGraph, v: str) -> Fraction:
    S.require_kind(UNDIRECTED, BIPARTITE)
    T = S.require_duration()
    return sum((ts.measure for ts in S.adjacency(v).values()), Fraction(0)) / T


def average_degree(S: StreamGraph) -> Fraction:
    """Degree averaged over nodes, each weighted by its presence time."""
    S.require_kind(UNDIRECTED, BIPARTITE)
    W = total_node_time(S)
    if W == 0:
        raise UndefinedMetric("average degree of a stream without node presence")
    return sum((S.nodes[v].measure * degree(S, v) for v in S.nodes), Fraction(0)) / W


def copresence(S: StreamGraph) -> Fraction:
    """``Σ_{uv ∈ V⊗V} |T_u ∩ T_v|``."""
    names = list(S.nodes)
    total = Fraction(0)
    for u, w in combinations(names, 2):
        total += (S.nodes[u] & S.nodes[w]).measure
    return total


def density(S: StreamGraph) -> Fraction:
    """Fraction of co-present node pairs that are linked, time-integrated."""
    S.require_kind(UNDIRECTED, BIPARTITE)
    return _ratio(total_link_time(S), copresence(S), "density")


def _check_sub_presence(S: StreamGraph, C: Mapping[str, IntervalSet]) -> None:
    for v, ts in C.items():
        if not ts.issubset(S.presence(v)):
            raise ValidationError(f"clique member {v!r} is not a subset of W")


def is_clique(S: StreamGraph, C: Mapping[str, IntervalSet]) -> bool:
    S.require_kind(UNDIRECTED, BIPARTITE)
    _check_sub_presence(S, C)
    for u, w in combinations(list(C), 2):
        if not (C[u] & C[w]).issubset(S.link(u, w)):
            return False
    return True


def induced_substream(S: StreamGraph, C: Mapping[str, IntervalSet]) -> StreamGraph:
    """Substream on the temporal nodes ``C``: links restricted to co-presence in C."""
    _check_sub_presence(S, C)
    nodes = {v: C[v] for v in C}
    links = {}
    for key, ts in S.links.items():
        u, w = key
        if u in C and w in C:
            links[key] = ts & C[u] & C[w]
    sides = {v: S.sides[v] for v in C} if S.kind == BIPARTITE else None
    return StreamGraph(S.kind, S.horizon, nodes, links, sides=sides)


def clustering_coefficient(S: StreamGraph, v: str) -> Fraction:
    """Density of the neighbourhood of ``v``.

    Ratio of sums: the time both ends of a neighbour pair are linked to v
    and to each other, over the time both are linked to v.
    """
    S.require_kind(UNDIRECTED, BIPARTITE)
    adj = S.adjacency(v)
    closed = open_ = Fraction(0)
    for u, w in combinations(sorted(adj), 2):
        both = adj[u] & adj[w]
        if not both:
            continue
        open_ += both.measure
        closed += (both & S.link(u, w)).measure
    return _ratio(closed, open_, f"clustering coefficient of {v}")


def transitivity(S: StreamGraph) -> Fraction:
    """Closed over open 4-uplets ``(t, u, v, w)``, all centres together."""
    S.require_kind(UNDIRECTED, BIPARTITE)
    closed = open_ = Fraction(0)
    for v in S.nodes:
        adj = S.adjacency(v)
        for u, w in combinations(sorted(adj), 2):
            both = adj[u] & adj[w]
            if not both:
                continue
            open_ += both.measure
            closed += (both & S.link(u, w)).measure
    return _ratio(closed, open_, "transitivity")


def is_graph_equivalent(S: StreamGraph) -> bool:
    """True when nothing changes over time: every presence set is T (links may be absent).

    Weighted streams additionally need time-constant weights.
    """
    if any(ts != S.time for ts in S.nodes.values()):
        return False
    if any(ts != S.time for ts in S.links.values()):
        return False
    for table in (S.link_weights, S.node_weights):
        if table is not None and any(len(set(w.values())) > 1 for w in table.values()):
            return False
    return True


__all__ = [
    "node_count",
    "link_count",
    "neighborhood",
    "degree",
    "average_degree",
    "density",
    "copresence",
    "is_clique",
    "induced_substream",
    "clustering_coefficient",
    "transitivity",
    "is_graph_equivalent",
]
