"""Classical graphs and their metrics, computed by direct counting.

Nothing in here uses interval algebra once the graph is built.  That keeps
these functions a second, independent route to every value the stream
metrics produce on graph-equivalent streams, and they are the per-instant
counters the grid oracle aggregates.

Count helpers return ``(numerator, denominator)`` pairs so that a graph
metric is their ratio while the oracle can sum them over time first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Set, Tuple

from .errors import KindError, UndefinedMetric, UnknownNodeError, ValidationError
from .intervals import RationalLike, to_rational
from .stream import BIPARTITE, BOTTOM, DIRECTED, TOP, UNDIRECTED, StreamGraph, link_key
from .valuefns import pair_value

Key = Tuple[str, str]


@dataclass(frozen=True)
class StaticGraph:
    kind: str
    nodes: FrozenSet[str]
    edges: Mapping[Key, Fraction]
    node_weights: Optional[Mapping[str, Fraction]] = None
    sides: Optional[Mapping[str, str]] = None
    weighted: bool = False
    # min/max annotations carried by weighted induced graphs
    edge_ranges: Optional[Mapping[Key, Tuple[Fraction, Fraction]]] = field(default=None, compare=False)

    def __post_init__(self):
        for u, v in self.edges:
            if u not in self.nodes or v not in self.nodes:
                raise ValidationError(f"edge {u}-{v} references an unknown node")
            if self.kind != DIRECTED and (u == v or (u, v) != link_key(self.kind, u, v)):
                raise ValidationError(f"bad undirected edge key {(u, v)}")
            if self.kind == BIPARTITE and self.sides[u] == self.sides[v]:
                raise ValidationError(f"edge {u}-{v} does not cross sides")
        adj: Dict[str, Set[str]] = {v: set() for v in self.nodes}
        succ: Dict[str, Set[str]] = {v: set() for v in self.nodes}
        pred: Dict[str, Set[str]] = {v: set() for v in self.nodes}
        for u, v in self.edges:
            succ[u].add(v)
            pred[v].add(u)
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", adj)
        object.__setattr__(self, "_succ", succ)
        object.__setattr__(self, "_pred", pred)

    def has(self, u: str, v: str) -> bool:
        return link_key(self.kind, u, v) in self.edges

    def weight(self, u: str, v: str) -> Fraction:
        return self.edges[link_key(self.kind, u, v)]

    def neighbors(self, v: str) -> Set[str]:
        if self.kind == DIRECTED:
            raise KindError("use successors/predecessors on directed graphs")
        return self._adj[v]

    def successors(self, v: str) -> Set[str]:
        return self._succ[v]

    def predecessors(self, v: str) -> Set[str]:
        return self._pred[v]

    def side_nodes(self, side: str) -> Set[str]:
        if self.kind != BIPARTITE:
            raise KindError("graph is not bipartite")
        return {v for v in self.nodes if self.sides[v] == side}

    def to_json(self) -> dict:
        doc = {
            "kind": self.kind,
            "nodes": sorted(self.nodes),
            "edges": [[u, v] for u, v in sorted(self.edges)],
        }
        if self.weighted:
            doc["weights"] = {f"{u} {v}": str(w) for (u, v), w in sorted(self.edges.items())}
            if self.edge_ranges:
                doc["weight_ranges"] = {
                    f"{u} {v}": [str(lo), str(hi)] for (u, v), (lo, hi) in sorted(self.edge_ranges.items())
                }
        if self.node_weights is not None:
            doc["node_weights"] = {v: str(w) for v, w in sorted(self.node_weights.items())}
        if self.sides is not None:
            doc["sides"] = dict(sorted(self.sides.items()))
        return doc


# -- extraction from streams -----------------------------------------------------------


def snapshot(S: StreamGraph, t: RationalLike) -> StaticGraph:
    """``G_t``; weights are evaluated at ``t`` when the stream is weighted."""
    t = to_rational(t)
    if not (S.horizon[0] <= t <= S.horizon[1]):
        raise ValueError(f"t={t} lies outside the horizon")
    nodes = frozenset(v for v, ts in S.nodes.items() if t in ts)
    edges: Dict[Key, Fraction] = {}
    for (u, v), ts in S.links.items():
        if t in ts:
            edges[(u, v)] = S.link_weight(u, v).value_at(t) if S.link_weights is not None else Fraction(1)
    node_weights = None
    if S.node_weights is not None:
        node_weights = {v: S.node_weight(v).value_at(t) for v in nodes}
    sides = {v: S.sides[v] for v in nodes} if S.kind == BIPARTITE else None
    return StaticGraph(S.kind, nodes, edges, node_weights, sides, weighted=S.link_weights is not None)


def induced_graph(S: StreamGraph) -> StaticGraph:
    """``G(S)``; weighted streams give time-averaged weights with min/max annotations."""
    nodes = frozenset(v for v, ts in S.nodes.items() if ts)
    edges: Dict[Key, Fraction] = {}
    ranges = None
    if S.link_weights is not None:
        T = S.require_duration()
        ranges = {}
        for key in S.links:
            w = S.link_weight(*key)
            edges[key] = w.integrate() / T
            ranges[key] = (min(w.values()), max(w.values()))
    else:
        edges = {key: Fraction(1) for key in S.links}
    node_weights = None
    if S.node_weights is not None:
        T = S.require_duration()
        node_weights = {v: S.node_weight(v).integrate() / T for v in nodes}
    sides = {v: S.sides[v] for v in nodes} if S.kind == BIPARTITE else None
    return StaticGraph(
        S.kind, nodes, edges, node_weights, sides, weighted=S.link_weights is not None, edge_ranges=ranges
    )


# -- helpers ----------------------------------------------------------------------------


def _ratio(num, den, what: str):
    if den == 0:
        raise UndefinedMetric(f"{what}: denominator is zero")
    if isinstance(num, float) or isinstance(den, float):
        return num / den
    return Fraction(num) / Fraction(den)


def _require(G: StaticGraph, *kinds: str) -> None:
    if G.kind not in kinds:
        raise KindError(f"metric requires a {' or '.join(kinds)} graph, got {G.kind}")


def _node(G: StaticGraph, v: str) -> None:
    if v not in G.nodes:
        raise UnknownNodeError(f"unknown node {v!r}")


# -- undirected ------------------------------------------------------------------------


def node_count(G: StaticGraph) -> Fraction:
    return Fraction(len(G.nodes))


def link_count(G: StaticGraph) -> Fraction:
    return Fraction(len(G.edges))


def degree(G: StaticGraph, v: str) -> Fraction:
    _require(G, UNDIRECTED, BIPARTITE)
    _node(G, v)
    return Fraction(len(G.neighbors(v)))


def average_degree(G: StaticGraph) -> Fraction:
    _require(G, UNDIRECTED, BIPARTITE)
    return _ratio(2 * len(G.edges), len(G.nodes), "average degree")


def pair_count(G: StaticGraph) -> int:
    k = len(G.nodes)
    return k * (k - 1) // 2


def density(G: StaticGraph) -> Fraction:
    _require(G, UNDIRECTED, BIPARTITE)
    return _ratio(len(G.edges), pair_count(G), "density")


def is_clique(G: StaticGraph, C: Iterable[str]) -> bool:
    return all(G.has(u, v) for u, v in combinations(sorted(C), 2))


def clustering_counts(G: StaticGraph, v: str) -> Tuple[int, int]:
    """(linked neighbour pairs, neighbour pairs) around ``v``."""
    nb = sorted(G.neighbors(v))
    closed = sum(1 for i, j in combinations(nb, 2) if G.has(i, j))
    return closed, len(nb) * (len(nb) - 1) // 2


def clustering(G: StaticGraph, v: str) -> Fraction:
    _require(G, UNDIRECTED, BIPARTITE)
    _node(G, v)
    return _ratio(*clustering_counts(G, v), f"clustering coefficient of {v}")


def transitivity_counts(G: StaticGraph) -> Tuple[int, int]:
    closed = open_ = 0
    for v in G.nodes:
        c, o = clustering_counts(G, v)
        closed += c
        open_ += o
    return closed, open_


def transitivity(G: StaticGraph) -> Fraction:
    _require(G, UNDIRECTED, BIPARTITE)
    return _ratio(*transitivity_counts(G), "transitivity")


# -- weighted --------------------------------------------------------------------------


def strength(G: StaticGraph, v: str) -> Fraction:
    _require(G, UNDIRECTED, BIPARTITE)
    _node(G, v)
    return sum((G.weight(v, u) for u in G.neighbors(v)), Fraction(0))


def weight_stats(G: StaticGraph) -> Tuple[Fraction, Fraction, Fraction]:
    if not G.edges:
        raise UndefinedMetric("weight statistics of a graph without edges")
    ws = list(G.edges.values())
    return min(ws), max(ws), sum(ws, Fraction(0)) / len(ws)


def total_weight(G: StaticGraph) -> Fraction:
    return sum(G.edges.values(), Fraction(0))


def weighted_density(G: StaticGraph, variant: str) -> Fraction:
    _require(G, UNDIRECTED, BIPARTITE)
    if variant == "unit_interval":
        if any(not (0 <= w <= 1) for w in G.edges.values()):
            raise ValidationError("unit_interval density needs every weight in [0, 1]")
        return _ratio(total_weight(G), pair_count(G), "weighted density")
    if not G.edges:
        raise UndefinedMetric("weighted density without edges has no maximal weight")
    w_max = max(G.edges.values())
    if variant == "present_max":
        return _ratio(total_weight(G), w_max * len(G.edges), "weighted density")
    if variant == "all_max":
        return _ratio(total_weight(G), w_max * pair_count(G), "weighted density")
    raise ValueError(f"unknown weighted density variant {variant!r}")


def barrat_sum(G: StaticGraph, v: str) -> Fraction:
    """``Σ (ω(vi) + ω(vj)) / 2`` over ordered linked neighbour pairs ``(i, j)``."""
    nb = sorted(G.neighbors(v))
    total = Fraction(0)
    for i, j in permutations(nb, 2):
        if G.has(i, j):
            total += (G.weight(v, i) + G.weight(v, j)) / 2
    return total


def barrat_clustering(G: StaticGraph, v: str) -> Fraction:
    _require(G, UNDIRECTED, BIPARTITE)
    _node(G, v)
    k = len(G.neighbors(v))
    if k <= 1:
        raise UndefinedMetric(f"Barrat clustering of {v} needs degree above 1")
    return _ratio(barrat_sum(G, v), strength(G, v) * (k - 1), f"Barrat clustering of {v}")


def weighted_triplet_sums(G: StaticGraph, v: str, value_fn: str):
    """(closed value sum, open value sum) over unordered neighbour pairs of ``v``."""
    f = pair_value(value_fn)
    closed = open_ = Fraction(0)
    for i, j in combinations(sorted(G.neighbors(v)), 2):
        wi, wj = G.weight(v, i), G.weight(v, j)
        open_ = open_ + f(wi, wj)
        if G.has(i, j):
            if value_fn == "product":
                closed = closed + wi * wj * G.weight(i, j)
            else:
                closed = closed + f(wi, wj)
    return closed, open_


def weighted_clustering(G: StaticGraph, v: str, value_fn: str = "product"):
    _require(G, UNDIRECTED, BIPARTITE)
    _node(G, v)
    return _ratio(*weighted_triplet_sums(G, v, value_fn), f"weighted clustering of {v}")


def weighted_transitivity_sums(G: StaticGraph, value_fn: str):
    closed = open_ = Fraction(0)
    for v in G.nodes:
        c, o = weighted_triplet_sums(G, v, value_fn)
        closed, open_ = closed + c, open_ + o
    return closed, open_


def weighted_transitivity(G: StaticGraph, value_fn: str = "product"):
    _require(G, UNDIRECTED, BIPARTITE)
    return _ratio(*weighted_transitivity_sums(G, value_fn), "weighted transitivity")


def threshold(G: StaticGraph, tau: RationalLike) -> StaticGraph:
    """``G_τ``: nodes and edges whose weight reaches ``tau``."""
    tau = to_rational(tau)
    if G.node_weights is not None:
        nodes = frozenset(v for v in G.nodes if G.node_weights[v] >= tau)
    else:
        nodes = G.nodes
    edges = {
        k: Fraction(1) for k, w in G.edges.items() if w >= tau and k[0] in nodes and k[1] in nodes
    }
    sides = {v: G.sides[v] for v in nodes} if G.sides is not None else None
    return StaticGraph(G.kind, nodes, edges, None, sides)


# -- bipartite -------------------------------------------------------------------------


def side_count(G: StaticGraph, side: str) -> Fraction:
    return Fraction(len(G.side_nodes(side)))


def side_average_degree(G: StaticGraph, side: str) -> Fraction:
    members = G.side_nodes(side)
    return _ratio(sum(len(G.neighbors(v)) for v in members), len(members), f"{side} average degree")


def bipartite_density(G: StaticGraph) -> Fraction:
    _require(G, BIPARTITE)
    return _ratio(len(G.edges), len(G.side_nodes(TOP)) * len(G.side_nodes(BOTTOM)), "bipartite density")


def is_bipartite_clique(G: StaticGraph, top: Iterable[str], bottom: Iterable[str]) -> bool:
    return all(G.has(u, v) for u in top for v in bottom)


def jaccard_counts(G: StaticGraph, u: str, v: str) -> Tuple[int, int]:
    nu, nv = G.neighbors(u), G.neighbors(v)
    return len(nu & nv), len(nu | nv)


def _same_side(G: StaticGraph, u: str, v: str) -> None:
    _require(G, BIPARTITE)
    _node(G, u)
    _node(G, v)
    if u == v or G.sides[u] != G.sides[v]:
        raise ValidationError("Jaccard coefficient needs two distinct nodes of the same side")


def jaccard(G: StaticGraph, u: str, v: str) -> Fraction:
    _same_side(G, u, v)
    return _ratio(*jaccard_counts(G, u, v), f"Jaccard coefficient of {u},{v}")


def second_neighbors(G: StaticGraph, v: str) -> Set[str]:
    out: Set[str] = set()
    for w in G.neighbors(v):
        out |= G.neighbors(w)
    out.discard(v)
    return out


def jaccard_clustering(G: StaticGraph, v: str) -> Fraction:
    """Mean Jaccard coefficient of ``v`` with the neighbours of its neighbours."""
    _require(G, BIPARTITE)
    _node(G, v)
    nn = second_neighbors(G, v)
    if not nn:
        raise UndefinedMetric(f"{v} has no neighbour of a neighbour")
    return sum((jaccard(G, u, v) for u in nn), Fraction(0)) / len(nn)


def redundancy_counts(G: StaticGraph, v: str) -> Tuple[int, int]:
    nb = sorted(G.neighbors(v))
    covered = 0
    for u, w in combinations(nb, 2):
        if (G.neighbors(u) & G.neighbors(w)) - {v}:
            covered += 1
    return covered, len(nb) * (len(nb) - 1) // 2


def redundancy(G: StaticGraph, v: str) -> Fraction:
    _require(G, BIPARTITE)
    _node(G, v)
    return _ratio(*redundancy_counts(G, v), f"redundancy of {v}")


def cc_star_counts(G: StaticGraph, v: str) -> Tuple[int, int]:
    """Quintuplets ``(a, b, v, c, d)`` of distinct nodes, and those closed through a sixth node."""
    closed = total = 0
    nb = G.neighbors(v)
    for b, c in permutations(sorted(nb), 2):
        for a in G.neighbors(b):
            if a in (v, b, c):
                continue
            for d in G.neighbors(c):
                if d in (v, b, c, a):
                    continue
                total += 1
                if (G.neighbors(a) & G.neighbors(d)) - {a, b, v, c, d}:
                    closed += 1
    return closed, total


def cc_star(G: StaticGraph, v: str) -> Fraction:
    _require(G, BIPARTITE)
    _node(G, v)
    return _ratio(*cc_star_counts(G, v), f"cc* of {v}")


def _paths(G: StaticGraph, length: int):
    """Ordered simple paths with ``length`` edges."""

    def extend(path):
        if len(path) == length + 1:
            yield tuple(path)
            return
        for x in sorted(G.neighbors(path[-1])):
            if x not in path:
                path.append(x)
                yield from extend(path)
                path.pop()

    for start in sorted(G.nodes):
        yield from extend([start])


def bipartite_transitivity_counts(G: StaticGraph, variant: str) -> Tuple[int, int]:
    closed = total = 0
    if variant == "quad":
        for a, b, c, d in _paths(G, 3):
            total += 1
            closed += G.has(a, d)
    elif variant == "quint":
        for path in _paths(G, 4):
            total += 1
            a, e = path[0], path[-1]
            if (G.neighbors(a) & G.neighbors(e)) - set(path):
                closed += 1
    else:
        raise ValueError(f"unknown bipartite transitivity variant {variant!r}")
    return closed, total


def bipartite_transitivity(G: StaticGraph, variant: str = "quad") -> Fraction:
    _require(G, BIPARTITE)
    return _ratio(*bipartite_transitivity_counts(G, variant), "bipartite transitivity")


def projection(G: StaticGraph, side: str, weighted: bool = False) -> StaticGraph:
    """One-mode projection onto ``side``; weights count common neighbours."""
    _require(G, BIPARTITE)
    members = sorted(G.side_nodes(side))
    edges = {}
    for u, w in combinations(members, 2):
        common = len(G.neighbors(u) & G.neighbors(w))
        if common:
            edges[(u, w)] = Fraction(common) if weighted else Fraction(1)
    return StaticGraph(UNDIRECTED, frozenset(members), edges, weighted=weighted)


# -- directed --------------------------------------------------------------------------


def out_degree(G: StaticGraph, v: str) -> Fraction:
    _require(G, DIRECTED)
    _node(G, v)
    return Fraction(len(G.successors(v)))


def in_degree(G: StaticGraph, v: str) -> Fraction:
    _require(G, DIRECTED)
    _node(G, v)
    return Fraction(len(G.predecessors(v)))


def directed_density(G: StaticGraph) -> Fraction:
    _require(G, DIRECTED)
    return _ratio(len(G.edges), len(G.nodes) ** 2, "directed density")


def is_directed_clique(G: StaticGraph, C: Iterable[str]) -> bool:
    return all(G.has(u, v) and G.has(v, u) for u, v in combinations(sorted(C), 2))


def symmetric_counts(G: StaticGraph) -> Tuple[int, int]:
    """(arcs whose reverse exists, arcs); a loop is its own reverse."""
    return sum(1 for u, v in G.edges if (v, u) in G.edges), len(G.edges)


def loop_counts(G: StaticGraph) -> Tuple[int, int]:
    return sum(1 for u, v in G.edges if u == v), len(G.nodes)


def symmetric_fraction(G: StaticGraph) -> Fraction:
    _require(G, DIRECTED)
    return _ratio(*symmetric_counts(G), "symmetric fraction")


def loop_fraction(G: StaticGraph) -> Fraction:
    _require(G, DIRECTED)
    return _ratio(*loop_counts(G), "loop fraction")


def directed_triplet_counts(G: StaticGraph, v: str, variant: str) -> Tuple[int, int]:
    """Two-paths ``u -> v -> w`` (distinct nodes) and those closed by the variant's arc."""
    closed = total = 0
    for u in sorted(G.predecessors(v)):
        if u == v:
            continue
        for w in sorted(G.successors(v)):
            if w in (u, v):
                continue
            total += 1
            if variant == "cyclic":
                closed += G.has(w, u)
            elif variant == "transitive":
                closed += G.has(u, w)
            else:
                raise ValueError(f"unknown directed closure {variant!r}")
    return closed, total


def neighborhood_density_counts(G: StaticGraph, v: str, direction: str) -> Tuple[int, int]:
    members = G.predecessors(v) if direction == "in" else G.successors(v)
    arcs = sum(1 for a, b in G.edges if a in members and b in members)
    return arcs, len(members) ** 2


def directed_clustering(G: StaticGraph, v: str, variant: str) -> Fraction:
    _require(G, DIRECTED)
    _node(G, v)
    if variant in ("in", "out"):
        counts = neighborhood_density_counts(G, v, variant)
    else:
        counts = directed_triplet_counts(G, v, variant)
    return _ratio(*counts, f"{variant} clustering of {v}")


def directed_transitivity_counts(G: StaticGraph, variant: str) -> Tuple[int, int]:
    closed = total = 0
    for v in G.nodes:
        c, t = directed_triplet_counts(G, v, variant)
        closed += c
        total += t
    return closed, total


def directed_transitivity(G: StaticGraph, variant: str) -> Fraction:
    _require(G, DIRECTED)
    return _ratio(*directed_transitivity_counts(G, variant), f"{variant} transitivity")


def undirect(G: StaticGraph) -> StaticGraph:
    _require(G, DIRECTED)
    edges = {link_key(UNDIRECTED, u, v): Fraction(1) for u, v in G.edges if u != v}
    return StaticGraph(UNDIRECTED, G.nodes, edges)
