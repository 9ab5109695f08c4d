"""Metric registry: one name per metric, with its stream and graph implementations.

The same names are understood by :func:`streamgraphs.oracle.oracle_metric`,
so every entry can be checked three ways.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

from . import bipartite as bp
from . import core
from . import directed as dr
from . import static as g
from . import weighted as wt
from .errors import KindError, UndefinedMetric
from .stream import BIPARTITE, BOTTOM, DIRECTED, TOP, UNDIRECTED, StreamGraph
from .valuefns import VALUE_FUNCTIONS

ALL = (UNDIRECTED, BIPARTITE, DIRECTED)
PLAIN = (UNDIRECTED, BIPARTITE)


@dataclass(frozen=True)
class Metric:
    name: str
    scope: str  # global | node | pair
    kinds: Tuple[str, ...]
    stream: Callable
    graph: Callable
    variants: Tuple[str, ...] = ()


def _entry(name, scope, kinds, stream, graph, variants=()):
    return name, Metric(name, scope, kinds, stream, graph, tuple(variants))


METRICS: Dict[str, Metric] = dict(
    [
        _entry("n", "global", ALL, core.node_count, g.node_count),
        _entry("m", "global", ALL, core.link_count, g.link_count),
        _entry("degree", "node", PLAIN, core.degree, g.degree),
        _entry("average_degree", "global", PLAIN, core.average_degree, g.average_degree),
        _entry("density", "global", PLAIN, core.density, g.density),
        _entry("cc", "node", PLAIN, core.clustering_coefficient, g.clustering),
        _entry("transitivity", "global", PLAIN, core.transitivity, g.transitivity),
        _entry("strength", "node", PLAIN, wt.strength, g.strength),
        _entry(
            "weighted_density", "global", PLAIN, wt.weighted_density, g.weighted_density, wt.DENSITY_VARIANTS
        ),
        _entry("barrat", "node", PLAIN, wt.weighted_clustering_barrat, g.barrat_clustering),
        _entry(
            "weighted_cc", "node", PLAIN, wt.weighted_clustering_general, g.weighted_clustering, VALUE_FUNCTIONS
        ),
        _entry(
            "weighted_transitivity",
            "global",
            PLAIN,
            wt.weighted_transitivity,
            g.weighted_transitivity,
            VALUE_FUNCTIONS,
        ),
        _entry("n_top", "global", (BIPARTITE,), lambda S: bp.side_counts(S)[0], lambda G: g.side_count(G, TOP)),
        _entry(
            "n_bottom", "global", (BIPARTITE,), lambda S: bp.side_counts(S)[1], lambda G: g.side_count(G, BOTTOM)
        ),
        _entry(
            "d_top",
            "global",
            (BIPARTITE,),
            lambda S: bp.side_average_degree(S, TOP),
            lambda G: g.side_average_degree(G, TOP),
        ),
        _entry(
            "d_bottom",
            "global",
            (BIPARTITE,),
            lambda S: bp.side_average_degree(S, BOTTOM),
            lambda G: g.side_average_degree(G, BOTTOM),
        ),
        _entry("bipartite_density", "global", (BIPARTITE,), bp.bipartite_density, g.bipartite_density),
        _entry("jaccard", "pair", (BIPARTITE,), bp.jaccard, g.jaccard),
        _entry("jaccard_cc", "node", (BIPARTITE,), bp.jaccard_clustering, g.jaccard_clustering),
        _entry("redundancy", "node", (BIPARTITE,), bp.redundancy, g.redundancy),
        _entry("cc_star", "node", (BIPARTITE,), bp.cc_star, g.cc_star),
        _entry(
            "bipartite_transitivity",
            "global",
            (BIPARTITE,),
            bp.bipartite_transitivity,
            g.bipartite_transitivity,
            ("quad", "quint"),
        ),
        _entry("out_degree", "node", (DIRECTED,), dr.out_degree, g.out_degree),
        _entry("in_degree", "node", (DIRECTED,), dr.in_degree, g.in_degree),
        _entry("directed_density", "global", (DIRECTED,), dr.directed_density, g.directed_density),
        _entry("symmetric_fraction", "global", (DIRECTED,), dr.symmetric_fraction, g.symmetric_fraction),
        _entry("loop_fraction", "global", (DIRECTED,), dr.loop_fraction, g.loop_fraction),
        _entry(
            "directed_cc", "node", (DIRECTED,), dr.directed_clustering, g.directed_clustering, dr.CLUSTERING_VARIANTS
        ),
        _entry(
            "directed_transitivity",
            "global",
            (DIRECTED,),
            dr.directed_transitivity,
            g.directed_transitivity,
            dr.CLOSURES,
        ),
    ]
)


def lookup(name: str) -> Metric:
    try:
        return METRICS[name]
    except KeyError:
        raise ValueError(f"unknown metric {name!r}") from None


def _call(fn, metric: Metric, target, node, pair, variant):
    args = [target]
    if metric.scope == "node":
        if node is None:
            raise ValueError(f"{metric.name} needs a node")
        args.append(node)
    elif metric.scope == "pair":
        if pair is None:
            raise ValueError(f"{metric.name} needs a node pair")
        args.extend(pair)
    if metric.variants:
        args.append(variant if variant is not None else metric.variants[0])
    elif variant is not None:
        raise ValueError(f"{metric.name} takes no variant")
    return fn(*args)


def evaluate(S: StreamGraph, name: str, node=None, pair=None, variant=None):
    """Closed-form value of metric ``name`` on the stream ``S``."""
    metric = lookup(name)
    if S.kind not in metric.kinds:
        raise KindError(f"{name} requires a {' or '.join(metric.kinds)} stream, got {S.kind}")
    return _call(metric.stream, metric, S, node, pair, variant)


def evaluate_graph(G: g.StaticGraph, name: str, node=None, pair=None, variant=None):
    """Value of metric ``name`` on a classical graph."""
    metric = lookup(name)
    if G.kind not in metric.kinds:
        raise KindError(f"{name} requires a {' or '.join(metric.kinds)} graph, got {G.kind}")
    return _call(metric.graph, metric, G, node, pair, variant)


# -- reports -------------------------------------------------------------------------

_FLOAT_CTX = Context(prec=12, rounding=ROUND_HALF_EVEN)


def render_float(value) -> Optional[float]:
    """12 significant digits, round-half-even."""
    if value is None:
        return None
    if isinstance(value, float):
        return float(_FLOAT_CTX.create_decimal_from_float(value))
    value = Fraction(value)
    return float(_FLOAT_CTX.divide(Decimal(value.numerator), Decimal(value.denominator)))


def render_exact(value) -> Optional[str]:
    if value is None or isinstance(value, float):
        return None
    return str(Fraction(value))


@dataclass
class MetricReport:
    """Named metric values; ``None`` marks an undefined value."""

    metric: str
    scope: str = "global"
    values: Dict[str, object] = field(default_factory=dict)

    def to_json(self) -> dict:
        if self.scope in ("global", "per-pair"):
            return {"metric": self.metric, "scope": self.scope, **_cell(self.values.get(""))}
        return {
            "metric": self.metric,
            "scope": self.scope,
            "values": {k: _cell(v) for k, v in self.values.items()},
        }

    @property
    def has_undefined(self) -> bool:
        return any(v is None for v in self.values.values())


def _cell(value) -> dict:
    if value is None:
        return {"exact": "undefined", "float": None}
    exact = render_exact(value)
    return {"exact": exact, "float": render_float(value)}


def graph_metrics(G: g.StaticGraph, request: str, node=None, pair=None, variant=None) -> MetricReport:
    """Evaluate a metric on a classical graph; per-node metrics default to every node."""
    metric = lookup(request)
    label = request if variant is None else f"{request}:{variant}"
    if metric.scope == "node" and node is None:
        report = MetricReport(label, "per-node")
        for v in sorted(G.nodes):
            try:
                report.values[v] = evaluate_graph(G, request, node=v, variant=variant)
            except UndefinedMetric:
                report.values[v] = None
        return report
    try:
        value = evaluate_graph(G, request, node=node, pair=pair, variant=variant)
    except UndefinedMetric:
        value = None
    return MetricReport(label, "global", {"": value})
