"""Directed stream graphs: in/out neighbourhoods, directed density, symmetry, cyclic and transitive closure."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Dict, Mapping, Tuple

from .core import _ratio, total_link_time, total_node_time
from .errors import ValidationError
from .intervals import IntervalSet
from .stream import DIRECTED, UNDIRECTED, StreamGraph

CLOSURES = ("cyclic", "transitive")
CLUSTERING_VARIANTS = ("cyclic", "transitive", "in", "out")


def out_neighborhood(S: StreamGraph, v: str) -> Dict[str, IntervalSet]:
    S.require_kind(DIRECTED)
    return dict(S.successors(v))


def in_neighborhood(S: StreamGraph, v: str) -> Dict[str, IntervalSet]:
    S.require_kind(DIRECTED)
    return dict(S.predecessors(v))


def out_degree(S: StreamGraph, v: str) -> Fraction:
    S.require_kind(DIRECTED)
    T = S.require_duration()
    return sum((ts.measure for ts in S.successors(v).values()), Fraction(0)) / T


def in_degree(S: StreamGraph, v: str) -> Fraction:
    S.require_kind(DIRECTED)
    T = S.require_duration()
    return sum((ts.measure for ts in S.predecessors(v).values()), Fraction(0)) / T


def ordered_copresence(S: StreamGraph) -> Fraction:
    """``Σ_{(u,v) ∈ V×V} |T_u ∩ T_v|``, loop terms ``|T_v|`` included."""
    cross = Fraction(0)
    for u, w in combinations(list(S.nodes), 2):
        cross += (S.nodes[u] & S.nodes[w]).measure
    return 2 * cross + total_node_time(S)


def directed_density(S: StreamGraph) -> Fraction:
    S.require_kind(DIRECTED)
    return _ratio(total_link_time(S), ordered_copresence(S), "directed density")


def is_directed_clique(S: StreamGraph, C: Mapping[str, IntervalSet]) -> bool:
    S.require_kind(DIRECTED)
    for v, ts in C.items():
        if not ts.issubset(S.presence(v)):
            raise ValidationError(f"clique member {v!r} is not a subset of W")
    for u, w in combinations(list(C), 2):
        both = C[u] & C[w]
        if not (both.issubset(S.link(u, w)) and both.issubset(S.link(w, u))):
            return False
    return True


def symmetry_stats(S: StreamGraph) -> Tuple[Fraction, Fraction]:
    """``(symmetric_fraction, loop_fraction)`` as measure ratios.

    A loop is its own reverse, so it counts as symmetric.
    """
    S.require_kind(DIRECTED)
    sym = Fraction(0)
    for (u, w), ts in S.links.items():
        sym += (ts & S.link(w, u)).measure
    loops = sum((S.link(v, v).measure for v in S.nodes), Fraction(0))
    return (
        _ratio(sym, total_link_time(S), "symmetric fraction"),
        _ratio(loops, total_node_time(S), "loop fraction"),
    )


def symmetric_fraction(S: StreamGraph) -> Fraction:
    S.require_kind(DIRECTED)
    sym = sum(((ts & S.link(w, u)).measure for (u, w), ts in S.links.items()), Fraction(0))
    return _ratio(sym, total_link_time(S), "symmetric fraction")


def loop_fraction(S: StreamGraph) -> Fraction:
    S.require_kind(DIRECTED)
    loops = sum((S.link(v, v).measure for v in S.nodes), Fraction(0))
    return _ratio(loops, total_node_time(S), "loop fraction")


def _two_path_measures(S: StreamGraph, v: str, closure: str) -> Tuple[Fraction, Fraction]:
    if closure not in CLOSURES:
        raise ValueError(f"unknown directed closure {closure!r}")
    closed = total = Fraction(0)
    for u, t_uv in sorted(S.predecessors(v).items()):
        if u == v:
            continue
        for w, t_vw in sorted(S.successors(v).items()):
            if w in (u, v):
                continue
            path = t_uv & t_vw
            if not path.measure:
                continue
            total += path.measure
            back = S.link(w, u) if closure == "cyclic" else S.link(u, w)
            closed += (path & back).measure
    return closed, total


def _neighborhood_density(S: StreamGraph, v: str, direction: str) -> Tuple[Fraction, Fraction]:
    members = S.predecessors(v) if direction == "in" else S.successors(v)
    arcs = pairs = Fraction(0)
    for x, tx in members.items():
        for y, ty in members.items():
            both = tx & ty
            if not both.measure:
                continue
            pairs += both.measure
            arcs += (both & S.link(x, y)).measure
    return arcs, pairs


def directed_clustering(S: StreamGraph, v: str, variant: str = "cyclic") -> Fraction:
    """Clustering of ``v``.

    ``cyclic``/``transitive``: share of two-path time ``u -> v -> w`` closed
    by ``w -> u`` or ``u -> w``.  ``in``/``out``: directed density of the
    substream induced by the in- or out-neighbourhood.
    """
    S.require_kind(DIRECTED)
    S.check_node(v)
    if variant in ("in", "out"):
        counts = _neighborhood_density(S, v, variant)
    elif variant in CLOSURES:
        counts = _two_path_measures(S, v, variant)
    else:
        raise ValueError(f"unknown directed clustering variant {variant!r}")
    return _ratio(*counts, f"{variant} clustering of {v}")


def directed_transitivity(S: StreamGraph, variant: str = "cyclic") -> Fraction:
    S.require_kind(DIRECTED)
    closed = total = Fraction(0)
    for v in S.nodes:
        c, t = _two_path_measures(S, v, variant)
        closed += c
        total += t
    return _ratio(closed, total, f"{variant} transitivity")


def undirect(S: StreamGraph) -> StreamGraph:
    """Forget directions: a pair is linked whenever an arc joins it either way; loops vanish."""
    S.require_kind(DIRECTED)
    links: Dict[Tuple[str, str], IntervalSet] = {}
    for (u, w), ts in S.links.items():
        if u == w:
            continue
        key = (u, w) if u <= w else (w, u)
        links[key] = links[key] | ts if key in links else ts
    return StreamGraph(UNDIRECTED, S.horizon, S.nodes, links)


__all__ = [
    "out_neighborhood",
    "in_neighborhood",
    "out_degree",
    "in_degree",
    "directed_density",
    "is_directed_clique",
    "symmetry_stats",
    "symmetric_fraction",
    "loop_fraction",
    "directed_clustering",
    "directed_transitivity",
    "undirect",
]
