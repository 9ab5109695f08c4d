"""Brute-force evaluation of stream metrics from sampled snapshots.

The horizon is cut into cells of width ``step``; each cell is represented
by the snapshot at its midpoint and weighted by its length.  When every
endpoint of the stream lies on the grid, membership is constant inside
each open cell and the result is exact.  Nothing here touches the
interval-algebra code paths used by the closed-form metrics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from . import static as g
from .errors import KindError, UndefinedMetric, ValidationError
from .intervals import RationalLike, to_rational
from .static import StaticGraph
from .stream import BIPARTITE, BOTTOM, DIRECTED, TOP, UNDIRECTED, StreamGraph

Snapshots = List[Tuple[Fraction, StaticGraph]]


@dataclass(frozen=True)
class GridPlan:
    step: Fraction
    cells: Tuple[Tuple[Tuple[Fraction, Fraction], Fraction], ...]

    @classmethod
    def over(cls, horizon: Tuple[Fraction, Fraction], step: RationalLike) -> "GridPlan":
        step = to_rational(step)
        if step <= 0:
            raise ValueError("grid step must be positive")
        begin, end = horizon
        cells = []
        lo = begin
        while lo < end:
            hi = min(lo + step, end)
            cells.append(((lo, hi), (lo + hi) / 2))
            lo = hi
        return cls(step, tuple(cells))

    def is_aligned(self, points) -> bool:
        begin = self.cells[0][0][0] if self.cells else Fraction(0)
        return all(((p - begin) / self.step).denominator == 1 for p in points)


def sample(S: StreamGraph, step: RationalLike) -> Snapshots:
    plan = GridPlan.over(S.horizon, step)
    return [(hi - lo, g.snapshot(S, mid)) for (lo, hi), mid in plan.cells]


def _ratio(num, den, what):
    if den == 0:
        raise UndefinedMetric(f"{what}: denominator is zero")
    if isinstance(num, float) or isinstance(den, float):
        return num / den
    return Fraction(num) / Fraction(den)


def _T(S: StreamGraph) -> Fraction:
    return S.require_duration()


def _integral(snaps: Snapshots, fn: Callable[[StaticGraph], object]):
    total = Fraction(0)
    for length, G in snaps:
        total = total + length * fn(G)
    return total


def _pair_integral(snaps: Snapshots, fn: Callable[[StaticGraph], Tuple]):
    num = den = Fraction(0)
    for length, G in snaps:
        a, b = fn(G)
        num = num + length * a
        den = den + length * b
    return num, den


def _at(v: str, fn, empty=(0, 0)):
    """Apply a per-node counter, treating an absent node as contributing nothing."""
    return lambda G: fn(G, v) if v in G.nodes else empty


def _presence(snaps: Snapshots, v: str) -> Fraction:
    return _integral(snaps, lambda G: 1 if v in G.nodes else 0)


def _degree_integral(snaps: Snapshots, v: str) -> Fraction:
    return _integral(snaps, lambda G: len(G.neighbors(v)) if v in G.nodes else 0)


# -- undirected ------------------------------------------------------------------------


def _n(S, snaps):
    return _integral(snaps, lambda G: len(G.nodes)) / _T(S)


def _m(S, snaps):
    return _integral(snaps, lambda G: len(G.edges)) / _T(S)


def _degree(S, snaps, node):
    return _degree_integral(snaps, node) / _T(S)


def _average_degree(S, snaps):
    T = _T(S)
    num = den = Fraction(0)
    for v in S.nodes:
        p = _presence(snaps, v)
        num += p * _degree_integral(snaps, v) / T
        den += p
    return _ratio(num, den, "average degree")


def _density(S, snaps):
    return _ratio(*_pair_integral(snaps, lambda G: (len(G.edges), g.pair_count(G))), "density")


def _cc(S, snaps, node):
    return _ratio(*_pair_integral(snaps, _at(node, g.clustering_counts)), "clustering")


def _transitivity(S, snaps):
    return _ratio(*_pair_integral(snaps, g.transitivity_counts), "transitivity")


# -- weighted --------------------------------------------------------------------------


def _strength_integral(snaps, v):
    return _integral(snaps, lambda G: g.strength(G, v) if v in G.nodes else 0)


def _strength(S, snaps, node):
    return _strength_integral(snaps, node) / _T(S)


def _weighted_density(S, snaps, variant):
    T = _T(S)
    k = len(S.nodes)
    pairs = k * (k - 1) // 2
    total = _integral(snaps, g.total_weight)
    if variant == "unit_interval":
        for _, G in snaps:
            if any(not (0 <= w <= 1) for w in G.edges.values()):
                raise ValidationError("unit_interval density needs every weight in [0, 1]")
        return _ratio(total, T * pairs, "weighted density")
    seen = [w for _, G in snaps for w in G.edges.values()]
    if not seen:
        raise UndefinedMetric("no link is ever present")
    w_max = max(seen)
    if variant == "present_max":
        return _ratio(total, w_max * _integral(snaps, lambda G: len(G.edges)), "weighted density")
    if variant == "all_max":
        return _ratio(total, w_max * T * pairs, "weighted density")
    raise ValueError(f"unknown weighted density variant {variant!r}")


def _barrat(S, snaps, node):
    T = _T(S)
    d = _degree_integral(snaps, node) / T
    if d <= 1:
        raise UndefinedMetric(f"Barrat clustering of {node} needs d(v) > 1")
    s = _strength_integral(snaps, node) / T
    num = _integral(snaps, lambda G: g.barrat_sum(G, node) if node in G.nodes else 0) / T
    return _ratio(num, s * (d - 1), "Barrat clustering")


def _weighted_cc(S, snaps, node, variant):
    counter = _at(node, lambda G, v: g.weighted_triplet_sums(G, v, variant))
    return _ratio(*_pair_integral(snaps, counter), "weighted clustering")


def _weighted_transitivity(S, snaps, variant):
    return _ratio(*_pair_integral(snaps, lambda G: g.weighted_transitivity_sums(G, variant)), "weighted transitivity")


# -- bipartite -------------------------------------------------------------------------


def _side_total(snaps, side):
    return _integral(snaps, lambda G: len(G.side_nodes(side)))


def _n_side(side):
    return lambda S, snaps: _side_total(snaps, side) / _T(S)


def _d_side(side):
    def run(S, snaps):
        T = _T(S)
        num = den = Fraction(0)
        for v in S.side_nodes(side):
            p = _presence(snaps, v)
            num += p * _degree_integral(snaps, v) / T
            den += p
        return _ratio(num, den, f"{side} average degree")

    return run


def _bipartite_density(S, snaps):
    counter = lambda G: (len(G.edges), len(G.side_nodes(TOP)) * len(G.side_nodes(BOTTOM)))
    return _ratio(*_pair_integral(snaps, counter), "bipartite density")


def _jaccard_sums(snaps, u, v):
    def counter(G):
        nu = G.neighbors(u) if u in G.nodes else set()
        nv = G.neighbors(v) if v in G.nodes else set()
        return len(nu & nv), len(nu | nv)

    return _pair_integral(snaps, counter)


def _jaccard(S, snaps, pair):
    u, v = pair
    if u == v or S.side(u) != S.side(v):
        raise ValidationError("Jaccard coefficient needs two distinct nodes of the same side")
    return _ratio(*_jaccard_sums(snaps, u, v), "Jaccard coefficient")


def _jaccard_cc(S, snaps, node):
    T = _T(S)
    num = den = Fraction(0)
    for u in S.side_nodes(S.side(node)):
        if u == node:
            continue
        inter, union = _jaccard_sums(snaps, u, node)
        if inter == 0:
            continue
        both = _integral(snaps, lambda G: 1 if u in G.nodes and node in G.nodes else 0) / T
        num += both * inter / union
        den += both
    return _ratio(num, den, "Jaccard clustering")


def _redundancy(S, snaps, node):
    return _ratio(*_pair_integral(snaps, _at(node, g.redundancy_counts)), "redundancy")


def _cc_star(S, snaps, node):
    return _ratio(*_pair_integral(snaps, _at(node, g.cc_star_counts)), "cc*")


def _bipartite_transitivity(S, snaps, variant):
    counter = lambda G: g.bipartite_transitivity_counts(G, variant)
    return _ratio(*_pair_integral(snaps, counter), "bipartite transitivity")


# -- directed --------------------------------------------------------------------------


def _out_degree(S, snaps, node):
    return _integral(snaps, lambda G: len(G.successors(node)) if node in G.nodes else 0) / _T(S)


def _in_degree(S, snaps, node):
    return _integral(snaps, lambda G: len(G.predecessors(node)) if node in G.nodes else 0) / _T(S)


def _directed_density(S, snaps):
    return _ratio(*_pair_integral(snaps, lambda G: (len(G.edges), len(G.nodes) ** 2)), "directed density")


def _symmetric_fraction(S, snaps):
    return _ratio(*_pair_integral(snaps, g.symmetric_counts), "symmetric fraction")


def _loop_fraction(S, snaps):
    return _ratio(*_pair_integral(snaps, g.loop_counts), "loop fraction")


def _directed_cc(S, snaps, node, variant):
    if variant in ("in", "out"):
        counter = _at(node, lambda G, v: g.neighborhood_density_counts(G, v, variant))
    else:
        counter = _at(node, lambda G, v: g.directed_triplet_counts(G, v, variant))
    return _ratio(*_pair_integral(snaps, counter), f"{variant} clustering")


def _directed_transitivity(S, snaps, variant):
    counter = lambda G: g.directed_transitivity_counts(G, variant)
    return _ratio(*_pair_integral(snaps, counter), f"{variant} transitivity")


# name -> (kinds, scope, evaluator)
ORACLES: Dict[str, Tuple[Tuple[str, ...], str, Callable]] = {
    "n": ((UNDIRECTED, BIPARTITE, DIRECTED), "global", _n),
    "m": ((UNDIRECTED, BIPARTITE, DIRECTED), "global", _m),
    "degree": ((UNDIRECTED, BIPARTITE), "node", _degree),
    "average_degree": ((UNDIRECTED, BIPARTITE), "global", _average_degree),
    "density": ((UNDIRECTED, BIPARTITE), "global", _density),
    "cc": ((UNDIRECTED, BIPARTITE), "node", _cc),
    "transitivity": ((UNDIRECTED, BIPARTITE), "global", _transitivity),
    "strength": ((UNDIRECTED, BIPARTITE), "node", _strength),
    "weighted_density": ((UNDIRECTED, BIPARTITE), "global", _weighted_density),
    "barrat": ((UNDIRECTED, BIPARTITE), "node", _barrat),
    "weighted_cc": ((UNDIRECTED, BIPARTITE), "node", _weighted_cc),
    "weighted_transitivity": ((UNDIRECTED, BIPARTITE), "global", _weighted_transitivity),
    "n_top": ((BIPARTITE,), "global", _n_side(TOP)),
    "n_bottom": ((BIPARTITE,), "global", _n_side(BOTTOM)),
    "d_top": ((BIPARTITE,), "global", _d_side(TOP)),
    "d_bottom": ((BIPARTITE,), "global", _d_side(BOTTOM)),
    "bipartite_density": ((BIPARTITE,), "global", _bipartite_density),
    "jaccard": ((BIPARTITE,), "pair", _jaccard),
    "jaccard_cc": ((BIPARTITE,), "node", _jaccard_cc),
    "redundancy": ((BIPARTITE,), "node", _redundancy),
    "cc_star": ((BIPARTITE,), "node", _cc_star),
    "bipartite_transitivity": ((BIPARTITE,), "global", _bipartite_transitivity),
    "out_degree": ((DIRECTED,), "node", _out_degree),
    "in_degree": ((DIRECTED,), "node", _in_degree),
    "directed_density": ((DIRECTED,), "global", _directed_density),
    "symmetric_fraction": ((DIRECTED,), "global", _symmetric_fraction),
    "loop_fraction": ((DIRECTED,), "global", _loop_fraction),
    "directed_cc": ((DIRECTED,), "node", _directed_cc),
    "directed_transitivity": ((DIRECTED,), "global", _directed_transitivity),
}


def oracle_metric(
    S: StreamGraph,
    metric: str,
    step: RationalLike,
    node: Optional[str] = None,
    pair: Optional[Tuple[str, str]] = None,
    variant: Optional[str] = None,
    snapshots: Optional[Snapshots] = None,
):
    """Evaluate ``metric`` on ``S`` by snapshot enumeration over a grid of width ``step``.

    ``snapshots`` may be passed to reuse one sampling across many metrics.
    """
    try:
        kinds, scope, fn = ORACLES[metric]
    except KeyError:
        raise ValueError(f"unknown metric {metric!r}") from None
    if S.kind not in kinds:
        raise KindError(f"{metric} requires a {' or '.join(kinds)} stream, got {S.kind}")
    snaps = snapshots if snapshots is not None else sample(S, step)
    args = []
    if scope == "node":
        S.check_node(node)
        args.append(node)
    elif scope == "pair":
        for x in pair:
            S.check_node(x)
        args.append(tuple(pair))
    if variant is not None:
        args.append(variant)
    return fn(S, snaps, *args)
