"""Weighted stream graphs: strength, weighted densities and clustering, thresholds, Δ-analysis.

Only links are weighted unless node weights are given explicitly; node
weights are used by :func:`threshold` and :func:`weighted_induced_graph`
only.  Unweighted links count as weight 1 everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict

from .core import _ratio, degree
from .errors import UndefinedMetric, ValidationError
from .intervals import IntervalSet, RationalLike, dilate, to_rational
from .static import StaticGraph, induced_graph, snapshot
from .steps import StepWeight
from .stream import BIPARTITE, UNDIRECTED, StreamGraph
from .valuefns import pair_value

DENSITY_VARIANTS = ("present_max", "all_max", "unit_interval")


@dataclass(frozen=True)
class WeightStats:
    min: Fraction
    max: Fraction
    mean: Fraction


def integrate(w: StepWeight, over: IntervalSet) -> Fraction:
    return w.integrate(over)


def _solid_values(S: StreamGraph):
    for key in S.links:
        for (b, e), v in S.link_weight(*key).pieces:
            if b < e:
                yield v


def weight_stats(S: StreamGraph) -> WeightStats:
    """Extremes and time-weighted mean of link weights.

    Point pieces are ignored: they carry no measure and cannot influence
    any integral.
    """
    if S.link_weights is None:
        raise ValidationError("stream has no link weights; treat every weight as 1")
    values = list(_solid_values(S))
    if not values:
        raise UndefinedMetric("no link is present on a set of positive measure")
    total = sum((S.link_weight(*k).integrate() for k in S.links), Fraction(0))
    time = sum((ts.measure for ts in S.links.values()), Fraction(0))
    return WeightStats(min(values), max(values), total / time)


def max_weight(S: StreamGraph) -> Fraction:
    values = list(_solid_values(S))
    if not values:
        raise UndefinedMetric("maximal weight of a stream without links")
    return max(values)


def strength(S: StreamGraph, v: str) -> Fraction:
    """Time-normalised integral of the weights of the links of ``v``."""
    S.require_kind(UNDIRECTED, BIPARTITE)
    T = S.require_duration()
    return sum((S.link_weight(v, u).integrate() for u in S.adjacency(v)), Fraction(0)) / T


def degree_strength_combo(S: StreamGraph, v: str, alpha: RationalLike) -> float:
    """``d(v) * (s(v) / d(v)) ** alpha``, in floating point."""
    d = degree(S, v)
    if d == 0:
        raise UndefinedMetric(f"{v} has degree 0")
    s = strength(S, v)
    return float(d) * (float(s) / float(d)) ** float(to_rational(alpha))


def total_weight(S: StreamGraph) -> Fraction:
    return sum((S.link_weight(*k).integrate() for k in S.links), Fraction(0))


def weighted_density(S: StreamGraph, variant: str = "present_max") -> Fraction:
    """Integrated weight over one of three normalisations.

    ``present_max``: every present link could carry the maximal weight.
    ``all_max``: every node pair could be linked at maximal weight over T.
    ``unit_interval``: weights in [0, 1], normalised by ``|T| |V⊗V|``.
    """
    S.require_kind(UNDIRECTED, BIPARTITE)
    T = S.require_duration()
    k = len(S.nodes)
    pairs = k * (k - 1) // 2
    if variant == "unit_interval":
        if any(not (0 <= v <= 1) for v in _solid_values(S)):
            raise ValidationError("unit_interval density needs every weight in [0, 1]")
        return _ratio(total_weight(S), T * pairs, "weighted density")
    if variant not in DENSITY_VARIANTS:
        raise ValueError(f"unknown weighted density variant {variant!r}")
    w_max = max_weight(S)
    if variant == "present_max":
        den = w_max * sum((ts.measure for ts in S.links.values()), Fraction(0))
    else:
        den = w_max * T * pairs
    return _ratio(total_weight(S), den, "weighted density")


def weighted_clustering_barrat(S: StreamGraph, v: str) -> Fraction:
    """Barrat-style clustering lifted to streams.

    The time integral is divided by |T| so that a constant-weight
    graph-equivalent stream gives exactly the Barrat value of G(S).
    """
    S.require_kind(UNDIRECTED, BIPARTITE)
    T = S.require_duration()
    d = degree(S, v)
    if d <= 1:
        raise UndefinedMetric(f"Barrat clustering of {v} needs d(v) > 1")
    s = strength(S, v)
    adj = S.adjacency(v)
    total = Fraction(0)
    for i, j in combinations(sorted(adj), 2):
        closed = adj[i] & adj[j] & S.link(i, j)
        if closed:
            total += S.link_weight(v, i).integrate(closed) + S.link_weight(v, j).integrate(closed)
    return _ratio(total / T, s * (d - 1), f"Barrat clustering of {v}")


def _triplet_integrals(S: StreamGraph, v: str, value_fn: str):
    f = pair_value(value_fn)
    adj = S.adjacency(v)
    closed = open_ = Fraction(0)
    for i, j in combinations(sorted(adj), 2):
        if not (adj[i] & adj[j]):
            continue
        pair = S.link_weight(v, i).combine(S.link_weight(v, j), f)
        open_ = open_ + pair.integrate()
        link = S.link(i, j)
        if not link:
            continue
        if value_fn == "product":
            closed = closed + (pair * S.link_weight(i, j)).integrate()
        else:
            closed = closed + pair.integrate(link)
    return closed, open_


def weighted_clustering_general(S: StreamGraph, v: str, value_fn: str = "product"):
    """Closed over open quadruplet values centred on ``v``.

    ``product`` multiplies all three link weights on closed quadruplets;
    the other value functions score a quadruplet from its two links at v.
    """
    S.require_kind(UNDIRECTED, BIPARTITE)
    S.check_node(v)
    return _ratio_any(*_triplet_integrals(S, v, value_fn), f"weighted clustering of {v}")


def weighted_transitivity(S: StreamGraph, value_fn: str = "product"):
    S.require_kind(UNDIRECTED, BIPARTITE)
    closed = open_ = Fraction(0)
    for v in S.nodes:
        c, o = _triplet_integrals(S, v, value_fn)
        closed, open_ = closed + c, open_ + o
    return _ratio_any(closed, open_, "weighted transitivity")


def _ratio_any(num, den, what):
    if isinstance(num, float) or isinstance(den, float):
        if den == 0:
            raise UndefinedMetric(f"{what}: denominator is zero")
        return num / den
    return _ratio(num, den, what)


def threshold(S: StreamGraph, tau: RationalLike) -> StreamGraph:
    """Unweighted ``S_τ``: keep the times where weights reach ``tau``.

    Without node weights node presence is unchanged.  With node weights,
    link presence is clipped to the thresholded presence of both ends.
    """
    tau = to_rational(tau)
    if S.node_weights is not None:
        nodes = {v: S.node_weight(v).level_set(tau) for v in S.nodes}
    else:
        nodes = dict(S.nodes)
    links = {}
    for (u, w) in S.links:
        level = S.link_weight(u, w).level_set(tau)
        links[(u, w)] = level & nodes[u] & nodes[w]
    return StreamGraph(S.kind, S.horizon, nodes, links, sides=S.sides)


def _window_weight(ts: IntervalSet, t: Fraction, half: Fraction) -> Fraction:
    return (ts & IntervalSet._trusted(((t - half, t + half),))).measure


def _sampled_weight(ts: IntervalSet, support: IntervalSet, start: Fraction, resolution: Fraction, half: Fraction):
    pieces = []
    for b, e in support.intervals:
        if b == e:
            pieces.append(((b, e), _window_weight(ts, b, half)))
            continue
        # cell grid anchored at the new horizon start
        k = math.floor((b - start) / resolution)
        lo = b
        while lo < e:
            cell_end = start + (k + 1) * resolution
            hi = min(e, cell_end)
            if hi > lo:
                pieces.append(((lo, hi), _window_weight(ts, (lo + hi) / 2, half)))
            lo = hi
            k += 1
    return StepWeight(pieces)


def delta_analysis(S: StreamGraph, delta: RationalLike, resolution: RationalLike) -> StreamGraph:
    """Smooth ``S`` over windows of width ``delta``.

    Presence sets are dilated by ``delta/2`` and clipped to the shrunk
    horizon ``[x + delta/2, y - delta/2]``.  The weight of a node or link at
    ``t`` is the measure of its original presence inside
    ``[t - delta/2, t + delta/2]``; that function is piecewise linear, so it
    is stored as a step function sampled at the middle of each
    ``resolution`` cell (cells anchored at the new horizon start, cut where
    the presence set ends).
    """
    delta, resolution = to_rational(delta), to_rational(resolution)
    if delta <= 0 or resolution <= 0:
        raise ValueError("delta and resolution must be positive")
    if delta >= S.duration:
        raise ValueError("delta must be shorter than the horizon")
    half = delta / 2
    start, end = S.horizon[0] + half, S.horizon[1] - half
    clip = (start, end)

    nodes: Dict[str, IntervalSet] = {}
    node_weights: Dict[str, StepWeight] = {}
    for v, ts in S.nodes.items():
        nodes[v] = dilate(ts, half, clip)
        node_weights[v] = _sampled_weight(ts, nodes[v], start, resolution, half)
    links = {}
    link_weights = {}
    for key, ts in S.links.items():
        grown = dilate(ts, half, clip)
        if not grown:
            continue
        links[key] = grown
        link_weights[key] = _sampled_weight(ts, grown, start, resolution, half)
    return StreamGraph(
        S.kind,
        clip,
        nodes,
        links,
        link_weights=link_weights,
        node_weights=node_weights,
        sides=S.sides,
    )


def weighted_snapshot(S: StreamGraph, t: RationalLike) -> StaticGraph:
    return snapshot(S, t)


def weighted_induced_graph(S: StreamGraph) -> StaticGraph:
    """G(S) weighted by average weight over T; min/max kept as annotations."""
    if S.link_weights is None:
        S = StreamGraph(
            S.kind,
            S.horizon,
            S.nodes,
            S.links,
            link_weights={},
            node_weights=S.node_weights,
            sides=S.sides,
        )
    return induced_graph(S)


__all__ = [
    "WeightStats",
    "integrate",
    "weight_stats",
    "strength",
    "degree_strength_combo",
    "weighted_density",
    "weighted_clustering_barrat",
    "weighted_clustering_general",
    "weighted_transitivity",
    "threshold",
    "delta_analysis",
    "weighted_snapshot",
    "weighted_induced_graph",
]
