"""Line-oriented stream files.

::

    # comment
    stream undirected|bipartite|directed
    T <begin> <end>
    weighted links|nodes          (optional; marks a weighted stream with no weight lines)
    side <node> top|bottom        (bipartite only, before the node is used)
    V <node>                      (declares a node, possibly never present)
    N <node> <begin> <end>
    NW <node> <begin> <end> <weight>
    L <u> <v> <begin> <end> [<weight>]   (undirected / bipartite)
    A <u> <v> <begin> <end> [<weight>]   (directed: arc u -> v)

Numbers are integers, decimals or ``p/q`` rationals.  Repeated presence
lines are unioned.  Omitted link weights default to 1.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Optional, TextIO, Tuple

from .errors import (
    ContainmentError,
    IntervalError,
    SideError,
    StreamError,
    ValidationError,
    WeightSupportError,
)
from .intervals import IntervalSet, to_rational
from .steps import StepWeight, WeightConflict
from .stream import BIPARTITE, BOTTOM, DIRECTED, KINDS, TOP, StreamGraph, link_key


class ParseError(StreamError):
    """Malformed or inconsistent stream file; ``code`` names the failure class."""

    def __init__(self, message: str, line: Optional[int] = None, code: str = "syntax"):
        self.line = line
        self.code = code
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


def _number(tok: str, lineno: int) -> Fraction:
    try:
        return to_rational(tok)
    except (ValueError, TypeError):
        raise ParseError(f"not a number: {tok!r}", lineno) from None


def loads(text: str) -> StreamGraph:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body.split()))
    if not lines:
        raise ParseError("empty stream file")

    lineno, head = lines[0]
    if len(head) != 2 or head[0] != "stream" or head[1] not in KINDS:
        raise ParseError("first line must be 'stream undirected|bipartite|directed'", lineno)
    kind = head[1]
    if len(lines) < 2:
        raise ParseError("missing 'T <begin> <end>' line")
    lineno, tline = lines[1]
    if len(tline) != 3 or tline[0] != "T":
        raise ParseError("second line must be 'T <begin> <end>'", lineno)
    begin, end = _number(tline[1], lineno), _number(tline[2], lineno)
    if begin > end:
        raise ParseError("reversed horizon", lineno)

    link_tag = "A" if kind == DIRECTED else "L"
    sides: Dict[str, str] = {}
    declared: Dict[str, int] = {}
    node_spans: Dict[str, List[Tuple[Fraction, Fraction]]] = defaultdict(list)
    node_pieces: Dict[str, list] = defaultdict(list)
    link_pieces: Dict[Tuple[str, str], list] = defaultdict(list)
    link_lines: Dict[Tuple[str, str], int] = {}
    node_weight_lines: Dict[str, int] = {}
    weighted_links = weighted_nodes = False

    def use(node: str, ln: int) -> None:
        if kind == BIPARTITE and node not in sides:
            raise ParseError(f"node {node!r} used before its side line", ln, "side")
        declared.setdefault(node, ln)

    def span(b: str, e: str, ln: int) -> Tuple[Fraction, Fraction]:
        lo, hi = _number(b, ln), _number(e, ln)
        if lo > hi:
            raise ParseError(f"reversed interval [{lo}, {hi}]", ln)
        return lo, hi

    for ln, tok in lines[2:]:
        tag = tok[0]
        if tag == "weighted" and len(tok) == 2 and tok[1] in ("links", "nodes"):
            if tok[1] == "links":
                weighted_links = True
            else:
                weighted_nodes = True
        elif tag == "side":
            if kind != BIPARTITE:
                raise ParseError("side lines are only allowed in bipartite streams", ln, "side")
            if len(tok) != 3 or tok[2] not in (TOP, BOTTOM):
                raise ParseError("expected 'side <node> top|bottom'", ln)
            if tok[1] in sides and sides[tok[1]] != tok[2]:
                raise ParseError(f"node {tok[1]!r} given two sides", ln, "side")
            sides[tok[1]] = tok[2]
            declared.setdefault(tok[1], ln)
        elif tag == "V":
            if len(tok) != 2:
                raise ParseError("expected 'V <node>'", ln)
            use(tok[1], ln)
        elif tag == "N":
            if len(tok) != 4:
                raise ParseError("expected 'N <node> <begin> <end>'", ln)
            use(tok[1], ln)
            node_spans[tok[1]].append(span(tok[2], tok[3], ln))
        elif tag == "NW":
            if len(tok) != 5:
                raise ParseError("expected 'NW <node> <begin> <end> <weight>'", ln)
            use(tok[1], ln)
            node_pieces[tok[1]].append((span(tok[2], tok[3], ln), _number(tok[4], ln)))
            node_weight_lines.setdefault(tok[1], ln)
            weighted_nodes = True
        elif tag in ("L", "A"):
            if tag != link_tag:
                raise ParseError(f"{kind} streams use '{link_tag}' lines for links", ln)
            if len(tok) not in (5, 6):
                raise ParseError(f"expected '{link_tag} <u> <v> <begin> <end> [<weight>]'", ln)
            u, v = tok[1], tok[2]
            use(u, ln)
            use(v, ln)
            if u == v and kind != DIRECTED:
                raise ParseError(f"self-loop {u}-{v} in a {kind} stream", ln)
            if kind == BIPARTITE and sides[u] == sides[v]:
                raise ParseError(f"link {u}-{v} joins two {sides[u]} nodes", ln, "side")
            key = link_key(kind, u, v)
            weight = Fraction(1)
            if len(tok) == 6:
                weight = _number(tok[5], ln)
                weighted_links = True
            link_pieces[key].append((span(tok[3], tok[4], ln), weight))
            link_lines.setdefault(key, ln)
        else:
            raise ParseError(f"unknown line type {tag!r}", ln)

    horizon = IntervalSet._trusted(((begin, end),))
    nodes = {v: IntervalSet(node_spans.get(v, ())) for v in declared}
    for v, ts in nodes.items():
        if not ts.issubset(horizon):
            raise ParseError(f"presence of {v!r} exceeds the horizon", declared[v], "containment")

    links = {}
    link_weights = {} if weighted_links else None
    for key, pieces in link_pieces.items():
        ln = link_lines[key]
        ts = IntervalSet(iv for iv, _ in pieces)
        u, v = key
        if not ts.issubset(nodes[u] & nodes[v]):
            raise ParseError(f"link {u}-{v} present while an endpoint is absent", ln, "containment")
        links[key] = ts
        if weighted_links:
            try:
                link_weights[key] = StepWeight(pieces)
            except WeightConflict as exc:
                raise ParseError(str(exc), ln, "weight-conflict") from None

    node_weights = None
    if weighted_nodes:
        node_weights = {}
        for v, pieces in node_pieces.items():
            try:
                w = StepWeight(pieces)
            except WeightConflict as exc:
                raise ParseError(str(exc), node_weight_lines[v], "weight-conflict") from None
            if w.support != nodes[v]:
                raise ParseError(
                    f"weight support of {v!r} differs from its presence", node_weight_lines[v], "weight-support"
                )
            node_weights[v] = w

    try:
        return StreamGraph(
            kind,
            (begin, end),
            nodes,
            links,
            link_weights=link_weights,
            node_weights=node_weights,
            sides=sides if kind == BIPARTITE else None,
        )
    except ContainmentError as exc:
        raise ParseError(str(exc), code="containment") from None
    except WeightSupportError as exc:
        raise ParseError(str(exc), code="weight-support") from None
    except SideError as exc:
        raise ParseError(str(exc), code="side") from None
    except (ValidationError, IntervalError) as exc:
        raise ParseError(str(exc)) from None


def load(fp: TextIO) -> StreamGraph:
    return loads(fp.read())


def read(path: str) -> StreamGraph:
    with open(path, encoding="utf-8") as fp:
        return load(fp)


def fmt(x: Fraction) -> str:
    """Decimal notation when finite, ``p/q`` otherwise."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    d = x.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    if d != 1:
        return f"{x.numerator}/{x.denominator}"
    digits = 0
    scaled = x
    while scaled.denominator != 1:
        scaled *= 10
        digits += 1
    sign = "-" if scaled < 0 else ""
    n = abs(scaled.numerator)
    whole, frac = divmod(n, 10**digits)
    return f"{sign}{whole}.{str(frac).zfill(digits)}"


def dumps(S: StreamGraph) -> str:
    out = [f"stream {S.kind}", f"T {fmt(S.horizon[0])} {fmt(S.horizon[1])}"]
    if S.link_weights is not None:
        out.append("weighted links")
    if S.node_weights is not None:
        out.append("weighted nodes")
    names = sorted(S.nodes)
    if S.kind == BIPARTITE:
        out.extend(f"side {v} {S.sides[v]}" for v in names)
    for v in names:
        ts = S.nodes[v]
        if not ts and S.kind != BIPARTITE:
            out.append(f"V {v}")
        out.extend(f"N {v} {fmt(b)} {fmt(e)}" for b, e in ts)
    if S.node_weights is not None:
        for v in names:
            w = S.node_weights.get(v)
            if w is None:
                continue
            out.extend(f"NW {v} {fmt(b)} {fmt(e)} {fmt(x)}" for (b, e), x in w.pieces)
    tag = "A" if S.kind == DIRECTED else "L"
    for (u, v), ts in sorted(S.links.items()):
        if S.link_weights is not None:
            w = S.link_weights[(u, v)]
            out.extend(f"{tag} {u} {v} {fmt(b)} {fmt(e)} {fmt(x)}" for (b, e), x in w.pieces)
        else:
            out.extend(f"{tag} {u} {v} {fmt(b)} {fmt(e)}" for b, e in ts)
    return "\n".join(out) + "\n"


def dump(S: StreamGraph, fp: TextIO) -> None:
    fp.write(dumps(S))
