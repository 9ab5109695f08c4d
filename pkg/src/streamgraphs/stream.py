"""The stream graph data model ``S = (T, V, W, E)``."""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .errors import (
    ContainmentError,
    KindError,
    SideError,
    UnknownNodeError,
    UndefinedMetric,
    ValidationError,
    WeightSupportError,
)
from .intervals import EMPTY, IntervalSet, RationalLike, to_rational
from .steps import StepWeight

UNDIRECTED = "undirected"
BIPARTITE = "bipartite"
DIRECTED = "directed"
KINDS = (UNDIRECTED, BIPARTITE, DIRECTED)
TOP = "top"
BOTTOM = "bottom"

LinkKey = Tuple[str, str]


def link_key(kind: str, u: str, v: str) -> LinkKey:
    """Canonical key: sorted pair for undirected kinds, ordered pair for directed."""
    if kind == DIRECTED or u <= v:
        return (u, v)
    return (v, u)


class StreamGraph:
    """Immutable stream graph of kind ``undirected``, ``bipartite`` or ``directed``.

    ``nodes`` maps every node of V to its presence set (possibly empty).
    ``links`` maps link keys to presence sets; keys with empty presence are
    dropped.  Weights are optional; when ``link_weights`` is given the
    stream is weighted and links without an explicit weight weigh 1.
    """

    def __init__(
        self,
        kind: str,
        horizon: Tuple[RationalLike, RationalLike],
        nodes: Mapping[str, IntervalSet],
        links: Mapping[Tuple[str, str], IntervalSet] = (),
        *,
        link_weights: Optional[Mapping[Tuple[str, str], StepWeight]] = None,
        node_weights: Optional[Mapping[str, StepWeight]] = None,
        sides: Optional[Mapping[str, str]] = None,
    ):
        if kind not in KINDS:
            raise KindError(f"unknown stream kind {kind!r}")
        begin, end = to_rational(horizon[0]), to_rational(horizon[1])
        if begin > end:
            raise ValidationError(f"reversed horizon [{begin}, {end}]")
        self.kind = kind
        self.horizon: Tuple[Fraction, Fraction] = (begin, end)
        self.time = IntervalSet._trusted(((begin, end),))

        self._nodes: Dict[str, IntervalSet] = {str(v): ts for v, ts in dict(nodes).items()}

        links = dict(links)
        merged: Dict[LinkKey, IntervalSet] = {}
        for (u, v), ts in links.items():
            key = link_key(kind, u, v)
            merged[key] = merged[key] | ts if key in merged else ts
        self._links = {k: ts for k, ts in sorted(merged.items()) if ts}

        self._link_weights: Optional[Dict[LinkKey, StepWeight]] = None
        if link_weights is not None:
            given = {link_key(kind, u, v): w for (u, v), w in dict(link_weights).items()}
            self._link_weights = {}
            for key, ts in self._links.items():
                w = given.pop(key, None)
                self._link_weights[key] = StepWeight.constant(ts, 1) if w is None else w
            stray = [k for k, w in given.items() if w.pieces]
            if stray:
                raise WeightSupportError(f"weights given for absent links {stray}")

        self._node_weights: Optional[Dict[str, StepWeight]] = None
        if node_weights is not None:
            given = dict(node_weights)
            for v in given:
                if v not in self._nodes:
                    raise UnknownNodeError(f"weight given for undeclared node {v!r}")
            # nodes without an explicit weight weigh 1, as links do
            self._node_weights = {
                v: given[v] if v in given else StepWeight.constant(ts, 1) for v, ts in self._nodes.items()
            }

        self._sides: Optional[Dict[str, str]] = dict(sides) if sides is not None else None
        self._validate()
        self._build_index()

    # -- validation ---------------------------------------------------------

    def _validate(self) -> None:
        for v, ts in self._nodes.items():
            if not ts.issubset(self.time):
                raise ContainmentError(f"presence of node {v!r} exceeds the horizon")

        if self.kind == BIPARTITE:
            if self._sides is None:
                raise SideError("bipartite stream needs a side for every node")
            for v in self._nodes:
                if self._sides.get(v) not in (TOP, BOTTOM):
                    raise SideError(f"node {v!r} has no valid side")
            for v in self._sides:
                if v not in self._nodes:
                    raise SideError(f"side given for undeclared node {v!r}")
        elif self._sides is not None:
            raise SideError("sides are only meaningful for bipartite streams")

        for (u, v), ts in self._links.items():
            for x in (u, v):
                if x not in self._nodes:
                    raise UnknownNodeError(f"link {u}-{v} uses undeclared node {x!r}")
            if u == v and self.kind != DIRECTED:
                raise ValidationError(f"self-loop {u}-{v} in a {self.kind} stream")
            if self.kind == BIPARTITE and self._sides[u] == self._sides[v]:
                raise SideError(f"link {u}-{v} joins two {self._sides[u]} nodes")
            if not ts.issubset(self._nodes[u] & self._nodes[v]):
                raise ContainmentError(f"link {u}-{v} present while an endpoint is absent")

        if self._link_weights is not None:
            for key, w in self._link_weights.items():
                if w.support != self._links[key]:
                    raise WeightSupportError(f"weight support of link {key} differs from its presence")
        if self._node_weights is not None:
            for v, w in self._node_weights.items():
                if v not in self._nodes:
                    raise UnknownNodeError(f"weight given for undeclared node {v!r}")
                if w.support != self._nodes[v]:
                    raise WeightSupportError(f"weight support of node {v!r} differs from its presence")

    def _build_index(self) -> None:
        adj: Dict[str, Dict[str, IntervalSet]] = {v: {} for v in self._nodes}
        out: Dict[str, Dict[str, IntervalSet]] = {v: {} for v in self._nodes}
        inc: Dict[str, Dict[str, IntervalSet]] = {v: {} for v in self._nodes}
        for (u, v), ts in self._links.items():
            if self.kind == DIRECTED:
                out[u][v] = ts
                inc[v][u] = ts
            else:
                adj[u][v] = ts
                adj[v][u] = ts
        self._adj, self._out, self._in = adj, out, inc

    # -- accessors ----------------------------------------------------------

    @property
    def duration(self) -> Fraction:
        return self.horizon[1] - self.horizon[0]

    def require_duration(self) -> Fraction:
        if self.duration == 0:
            raise UndefinedMetric("time horizon has zero length")
        return self.duration

    @property
    def nodes(self) -> Mapping[str, IntervalSet]:
        return MappingProxyType(self._nodes)

    @property
    def links(self) -> Mapping[LinkKey, IntervalSet]:
        return MappingProxyType(self._links)

    @property
    def sides(self) -> Optional[Mapping[str, str]]:
        return None if self._sides is None else MappingProxyType(self._sides)

    @property
    def link_weights(self) -> Optional[Mapping[LinkKey, StepWeight]]:
        return None if self._link_weights is None else MappingProxyType(self._link_weights)

    @property
    def node_weights(self) -> Optional[Mapping[str, StepWeight]]:
        return None if self._node_weights is None else MappingProxyType(self._node_weights)

    @property
    def is_weighted(self) -> bool:
        return self._link_weights is not None or self._node_weights is not None

    def require_kind(self, *kinds: str) -> None:
        if self.kind not in kinds:
            raise KindError(f"operation requires a {' or '.join(kinds)} stream, got {self.kind}")

    def check_node(self, v: str) -> None:
        if v not in self._nodes:
            raise UnknownNodeError(f"unknown node {v!r}")

    def presence(self, v: str) -> IntervalSet:
        self.check_node(v)
        return self._nodes[v]

    def key(self, u: str, v: str) -> LinkKey:
        return link_key(self.kind, u, v)

    def link(self, u: str, v: str) -> IntervalSet:
        """Presence of link ``uv`` (arc ``u -> v`` for directed streams)."""
        return self._links.get(link_key(self.kind, u, v), EMPTY)

    def link_weight(self, u: str, v: str) -> StepWeight:
        """Weight of ``uv``; unweighted links weigh 1 on their presence."""
        key = link_key(self.kind, u, v)
        if self._link_weights is not None and key in self._link_weights:
            return self._link_weights[key]
        return StepWeight.constant(self._links.get(key, EMPTY), 1)

    def node_weight(self, v: str) -> StepWeight:
        self.check_node(v)
        if self._node_weights is not None and v in self._node_weights:
            return self._node_weights[v]
        return StepWeight.constant(self._nodes[v], 1)

    def adjacency(self, v: str) -> Mapping[str, IntervalSet]:
        """Undirected neighbours of ``v`` with link presence sets."""
        self.check_node(v)
        return self._adj[v]

    def successors(self, v: str) -> Mapping[str, IntervalSet]:
        self.check_node(v)
        return self._out[v]

    def predecessors(self, v: str) -> Mapping[str, IntervalSet]:
        self.check_node(v)
        return self._in[v]

    def side(self, v: str) -> str:
        self.require_kind(BIPARTITE)
        self.check_node(v)
        return self._sides[v]

    def side_nodes(self, side: str) -> Tuple[str, ...]:
        self.require_kind(BIPARTITE)
        if side not in (TOP, BOTTOM):
            raise SideError(f"side must be top or bottom, got {side!r}")
        return tuple(v for v in self._nodes if self._sides[v] == side)

    def breakpoints(self) -> Iterable[Fraction]:
        """Every endpoint appearing in the stream, horizon included."""
        yield from self.horizon
        for ts in self._nodes.values():
            yield from ts.endpoints()
        for ts in self._links.values():
            yield from ts.endpoints()
        for ws in (self._link_weights or {}).values():
            yield from ws.breakpoints()
        for ws in (self._node_weights or {}).values():
            yield from ws.breakpoints()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StreamGraph):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.horizon == other.horizon
            and self._nodes == other._nodes
            and self._links == other._links
            and self._link_weights == other._link_weights
            and self._node_weights == other._node_weights
            and self._sides == other._sides
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"StreamGraph({self.kind}, T=[{self.horizon[0]}, {self.horizon[1]}], "
            f"{len(self._nodes)} nodes, {len(self._links)} links"
            f"{', weighted' if self.is_weighted else ''})"
        )

    def unweighted(self) -> "StreamGraph":
        return StreamGraph(self.kind, self.horizon, self._nodes, self._links, sides=self._sides)
