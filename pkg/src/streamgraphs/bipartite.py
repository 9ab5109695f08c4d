"""Bipartite stream graphs: projections, side statistics, Jaccard, redundancy, cc*, transitivity."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Tuple

from .core import _ratio, degree, total_link_time
from .errors import KindError, SideError, UndefinedMetric, ValidationError
from .intervals import EMPTY, IntervalSet, RationalLike, to_rational, union_all
from .steps import StepWeight
from .stream import BIPARTITE, BOTTOM, TOP, UNDIRECTED, StreamGraph


def _require(S: StreamGraph) -> None:
    if S.kind != BIPARTITE:
        raise KindError(f"operation requires a bipartite stream, got {S.kind}")


def _other(side: str) -> str:
    if side == TOP:
        return BOTTOM
    if side == BOTTOM:
        return TOP
    raise SideError(f"side must be top or bottom, got {side!r}")


def coverage_count(sets: List[IntervalSet]) -> StepWeight:
    """Step function counting, at each instant, how many of ``sets`` contain it."""
    sets = [s for s in sets if s]
    if not sets:
        return StepWeight()
    cuts = sorted({x for s in sets for x in s.endpoints()})
    pieces = []
    solid: List[Tuple[Fraction, Fraction]] = []
    for lo, hi in zip(cuts, cuts[1:]):
        mid = (lo + hi) / 2
        c = sum(1 for s in sets if mid in s)
        if c:
            pieces.append(((lo, hi), c))
            solid.append((lo, hi))
    for x in cuts:
        if any(lo <= x <= hi for lo, hi in solid):
            continue
        c = sum(1 for s in sets if x in s)
        if c:
            pieces.append(((x, x), c))
    return StepWeight(pieces)


def project(S: StreamGraph, side: str, weighted: bool = False) -> StreamGraph:
    """One-mode projection onto ``side``.

    Two nodes of ``side`` are linked whenever they share a neighbour on the
    other side; the weighted variant records how many they share.
    """
    _require(S)
    if S.is_weighted:
        raise ValidationError("projection is only defined for unweighted bipartite streams")
    members = sorted(S.side_nodes(side))
    nodes = {v: S.nodes[v] for v in members}
    links: Dict[Tuple[str, str], IntervalSet] = {}
    weights: Dict[Tuple[str, str], StepWeight] = {}
    for u, w in combinations(members, 2):
        au, aw = S.adjacency(u), S.adjacency(w)
        shared = [au[x] & aw[x] for x in au.keys() & aw.keys()]
        shared = [s for s in shared if s]
        if not shared:
            continue
        links[(u, w)] = union_all(shared)
        if weighted:
            weights[(u, w)] = coverage_count(shared)
    return StreamGraph(UNDIRECTED, S.horizon, nodes, links, link_weights=weights if weighted else None)


def side_counts(S: StreamGraph) -> Tuple[Fraction, Fraction]:
    """``(n_top, n_bottom)``."""
    _require(S)
    T = S.require_duration()
    top = sum((S.nodes[v].measure for v in S.side_nodes(TOP)), Fraction(0))
    bottom = sum((S.nodes[v].measure for v in S.side_nodes(BOTTOM)), Fraction(0))
    return top / T, bottom / T


def side_average_degree(S: StreamGraph, side: str) -> Fraction:
    """Degree averaged over the nodes of ``side``, weighted by presence time.

    Normalised by the presence of that side only, so a graph-equivalent
    stream gives the side's average degree in G(S).
    """
    _require(S)
    _other(side)
    members = S.side_nodes(side)
    W = sum((S.nodes[v].measure for v in members), Fraction(0))
    if W == 0:
        raise UndefinedMetric(f"no {side} node is ever present")
    return sum((S.nodes[v].measure * degree(S, v) for v in members), Fraction(0)) / W


def bipartite_density(S: StreamGraph) -> Fraction:
    _require(S)
    den = Fraction(0)
    for u in S.side_nodes(TOP):
        for v in S.side_nodes(BOTTOM):
            den += (S.nodes[u] & S.nodes[v]).measure
    return _ratio(total_link_time(S), den, "bipartite density")


def is_bipartite_clique(
    S: StreamGraph, top: Mapping[str, IntervalSet], bottom: Mapping[str, IntervalSet]
) -> bool:
    _require(S)
    for members, side in ((top, TOP), (bottom, BOTTOM)):
        for v, ts in members.items():
            if S.side(v) != side:
                raise SideError(f"{v!r} is not a {side} node")
            if not ts.issubset(S.nodes[v]):
                raise ValidationError(f"clique member {v!r} is not a subset of W")
    for u, cu in top.items():
        for v, cv in bottom.items():
            if not (cu & cv).issubset(S.link(u, v)):
                return False
    return True


def _same_side(S: StreamGraph, u: str, v: str) -> None:
    _require(S)
    if u == v:
        raise ValidationError("Jaccard coefficient needs two distinct nodes")
    if S.side(u) != S.side(v):
        raise SideError(f"{u!r} and {v!r} lie on different sides")


def jaccard_measures(S: StreamGraph, u: str, v: str) -> Tuple[Fraction, Fraction]:
    """``(Σ_w |T_uw ∩ T_vw|, Σ_w |T_uw ∪ T_vw|)``."""
    au, av = S.adjacency(u), S.adjacency(v)
    inter = union = Fraction(0)
    for w in au.keys() | av.keys():
        a, b = au.get(w, EMPTY), av.get(w, EMPTY)
        inter += (a & b).measure
        union += (a | b).measure
    return inter, union


def jaccard(S: StreamGraph, u: str, v: str, at: Optional[RationalLike] = None) -> Fraction:
    """Jaccard coefficient of two same-side nodes; instantaneous when ``at`` is given."""
    _same_side(S, u, v)
    if at is not None:
        t = to_rational(at)
        nu = {w for w, ts in S.adjacency(u).items() if t in ts}
        nv = {w for w, ts in S.adjacency(v).items() if t in ts}
        return _ratio(len(nu & nv), len(nu | nv), f"Jaccard coefficient of {u},{v} at {t}")
    return _ratio(*jaccard_measures(S, u, v), f"Jaccard coefficient of {u},{v}")


def jaccard_clustering(S: StreamGraph, v: str) -> Fraction:
    """Average Jaccard coefficient of ``v`` with its neighbours' neighbours.

    Each such node ``u`` is weighted by ``|T_u ∩ T_v| / |T|``, and the
    average is normalised by the total of those weights.
    """
    _require(S)
    T = S.require_duration()
    S.check_node(v)
    num = den = Fraction(0)
    for u in S.side_nodes(S.side(v)):
        if u == v:
            continue
        inter, union = jaccard_measures(S, u, v)
        if inter == 0:
            continue
        weight = (S.nodes[u] & S.nodes[v]).measure / T
        num += weight * inter / union
        den += weight
    if den == 0:
        raise UndefinedMetric(f"{v} never has a neighbour of a neighbour")
    return num / den


def redundancy(S: StreamGraph, v: str) -> Fraction:
    """Share of the time two neighbours of ``v`` are also both linked to another node."""
    _require(S)
    adj = S.adjacency(v)
    covered = total = Fraction(0)
    for u, w in combinations(sorted(adj), 2):
        both = adj[u] & adj[w]
        if not both.measure:
            continue
        total += both.measure
        au, aw = S.adjacency(u), S.adjacency(w)
        alt = union_all(au[x] & aw[x] for x in au.keys() & aw.keys() if x != v)
        covered += (both & alt).measure
    return _ratio(covered, total, f"redundancy of {v}")


def cc_star(S: StreamGraph, v: str) -> Fraction:
    """Fraction of sextuplets ``(t, a, b, v, c, d)`` closed by another common neighbour of a and d."""
    _require(S)
    adj = S.adjacency(v)
    closed = total = Fraction(0)
    for b in sorted(adj):
        for c in sorted(adj):
            if c == b:
                continue
            base = adj[b] & adj[c]
            if not base.measure:
                continue
            for a, t_ab in sorted(S.adjacency(b).items()):
                if a in (v, b, c):
                    continue
                left = base & t_ab
                if not left.measure:
                    continue
                for d, t_cd in sorted(S.adjacency(c).items()):
                    if d in (v, b, c, a):
                        continue
                    span = left & t_cd
                    if not span.measure:
                        continue
                    total += span.measure
                    aa, ad = S.adjacency(a), S.adjacency(d)
                    named = {a, b, v, c, d}
                    alt = union_all(aa[x] & ad[x] for x in aa.keys() & ad.keys() if x not in named)
                    closed += (span & alt).measure
    return _ratio(closed, total, f"cc* of {v}")


def _temporal_paths(S: StreamGraph, length: int):
    """Yield ``(path, presence)`` for simple paths with ``length`` links, presence of positive measure."""

    def extend(path, ts):
        if len(path) == length + 1:
            yield tuple(path), ts
            return
        for x, t_x in sorted(S.adjacency(path[-1]).items()):
            if x in path:
                continue
            nxt = ts & t_x if ts is not None else t_x
            if not nxt.measure:
                continue
            path.append(x)
            yield from extend(path, nxt)
            path.pop()

    for start in sorted(S.nodes):
        yield from extend([start], None)


def bipartite_transitivity(S: StreamGraph, variant: str = "quad") -> Fraction:
    """Closed over open temporal paths.

    ``quad``: 3-link paths ``a-b-c-d`` closed by link ``ad``.
    ``quint``: 4-link paths ``a-b-c-d-e`` closed when another node ``f`` is
    linked to both ``a`` and ``e`` at the same instant.
    """
    _require(S)
    closed = total = Fraction(0)
    if variant == "quad":
        for (a, b, c, d), ts in _temporal_paths(S, 3):
            total += ts.measure
            closed += (ts & S.link(a, d)).measure
    elif variant == "quint":
        for path, ts in _temporal_paths(S, 4):
            total += ts.measure
            a, e = path[0], path[-1]
            aa, ae = S.adjacency(a), S.adjacency(e)
            alt = union_all(aa[x] & ae[x] for x in aa.keys() & ae.keys() if x not in path)
            closed += (ts & alt).measure
    else:
        raise ValueError(f"unknown bipartite transitivity variant {variant!r}")
    return _ratio(closed, total, "bipartite transitivity")


__all__ = [
    "project",
    "coverage_count",
    "side_counts",
    "side_average_degree",
    "bipartite_density",
    "is_bipartite_clique",
    "jaccard",
    "jaccard_clustering",
    "redundancy",
    "cc_star",
    "bipartite_transitivity",
]
