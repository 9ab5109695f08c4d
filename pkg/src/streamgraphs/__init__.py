"""Exact metrics on weighted, bipartite and directed stream graphs."""

from .catalog import METRICS, MetricReport, evaluate, evaluate_graph
from .errors import (
    ContainmentError,
    IntervalError,
    KindError,
    SideError,
    StreamError,
    UndefinedMetric,
    UnknownNodeError,
    ValidationError,
    WeightSupportError,
)
from .intervals import EMPTY, IntervalSet, to_rational
from .io import ParseError, dumps, loads, read
from .oracle import oracle_metric
from .static import StaticGraph, induced_graph, snapshot
from .steps import StepWeight
from .stream import BIPARTITE, BOTTOM, DIRECTED, TOP, UNDIRECTED, StreamGraph

__version__ = "0.1.0"

__all__ = [
    "BIPARTITE",
    "BOTTOM",
    "DIRECTED",
    "EMPTY",
    "METRICS",
    "TOP",
    "UNDIRECTED",
    "ContainmentError",
    "IntervalError",
    "IntervalSet",
    "KindError",
    "MetricReport",
    "ParseError",
    "SideError",
    "StaticGraph",
    "StepWeight",
    "StreamError",
    "StreamGraph",
    "UndefinedMetric",
    "UnknownNodeError",
    "ValidationError",
    "WeightSupportError",
    "dumps",
    "evaluate",
    "evaluate_graph",
    "induced_graph",
    "loads",
    "oracle_metric",
    "read",
    "snapshot",
    "to_rational",
]
