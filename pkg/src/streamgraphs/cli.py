"""Command-line interface: ``streamgraphs <command> FILE [options]``.

Reports are JSON on stdout.  Exit status is 0 on success, 1 when the
requested value is undefined, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, List, Optional, Sequence

from . import bipartite as bp
from . import catalog
from . import core
from . import io
from . import static
from . import weighted as wt
from .catalog import MetricReport
from .errors import KindError, StreamError, UndefinedMetric
from .intervals import to_rational
from .oracle import GridPlan, oracle_metric
from .stream import BIPARTITE, BOTTOM, DIRECTED, TOP, UNDIRECTED, StreamGraph

EXIT_OK, EXIT_UNDEFINED, EXIT_INPUT = 0, 1, 2

CC_VARIANTS = {
    "plain": ("cc", None),
    "barrat": ("barrat", None),
    "product": ("weighted_cc", "product"),
    "arith": ("weighted_cc", "arith_mean"),
    "geo": ("weighted_cc", "geo_mean"),
    "min": ("weighted_cc", "min"),
    "max": ("weighted_cc", "max"),
    "jaccard": ("jaccard_cc", None),
    "redundancy": ("redundancy", None),
    "ccstar": ("cc_star", None),
    "cyclic": ("directed_cc", "cyclic"),
    "transitive": ("directed_cc", "transitive"),
    "in": ("directed_cc", "in"),
    "out": ("directed_cc", "out"),
}

TRANSITIVITY_VARIANTS = {
    "plain": ("transitivity", None),
    "product": ("weighted_transitivity", "product"),
    "arith": ("weighted_transitivity", "arith_mean"),
    "geo": ("weighted_transitivity", "geo_mean"),
    "min": ("weighted_transitivity", "min"),
    "max": ("weighted_transitivity", "max"),
    "quad": ("bipartite_transitivity", "quad"),
    "quint": ("bipartite_transitivity", "quint"),
    "cyclic": ("directed_transitivity", "cyclic"),
    "transitive": ("directed_transitivity", "transitive"),
}

DENSITY_BY_KIND = {UNDIRECTED: "density", BIPARTITE: "bipartite_density", DIRECTED: "directed_density"}


class InputError(Exception):
    """Bad command-line input; maps to exit status 2."""


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, separators=(",", ":"), ensure_ascii=False) + "\n")


def _check_kind(S: StreamGraph, metric: str) -> None:
    kinds = catalog.lookup(metric).kinds
    if S.kind not in kinds:
        raise KindError(f"{metric} requires a {' or '.join(kinds)} stream, got {S.kind}")


def _report(S: StreamGraph, metric: str, label: str, node=None, pair=None, variant=None, fn=None) -> int:
    """Evaluate and print; per-node metrics cover every node when ``node`` is omitted."""
    _check_kind(S, metric)
    scope = catalog.lookup(metric).scope
    call: Callable = fn or (lambda v: catalog.evaluate(S, metric, node=v, pair=pair, variant=variant))
    if scope == "node" and node is None:
        report = MetricReport(label, "per-node")
        for v in sorted(S.nodes):
            try:
                report.values[v] = call(v)
            except UndefinedMetric:
                report.values[v] = None
        _emit(report.to_json())
        return EXIT_OK
    if scope == "node":
        S.check_node(node)
    try:
        value = call(node)
    except UndefinedMetric:
        value = None
    report = MetricReport(label, "per-pair" if scope == "pair" else "global", {"": value})
    doc = report.to_json()
    if scope == "node":
        doc["node"] = node
    elif scope == "pair":
        doc["pair"] = list(pair)
    _emit(doc)
    return EXIT_UNDEFINED if value is None else EXIT_OK


def _stats(S: StreamGraph, args) -> int:
    names = ["n", "m"]
    if S.kind in (UNDIRECTED, BIPARTITE):
        names += ["average_degree", "density"]
    if S.kind == BIPARTITE:
        names += ["n_top", "n_bottom", "d_top", "d_bottom", "bipartite_density"]
    if S.kind == DIRECTED:
        names += ["directed_density", "symmetric_fraction", "loop_fraction"]
    values = {}
    for name in names:
        try:
            values[name] = catalog.evaluate(S, name)
        except UndefinedMetric:
            values[name] = None
    report = MetricReport("stats", "summary", values).to_json()
    report["kind"] = S.kind
    _emit(report)
    return EXIT_OK


def _degree(S: StreamGraph, args) -> int:
    if S.kind == DIRECTED:
        metric = f"{args.direction or 'out'}_degree"
    elif args.direction:
        raise KindError("--direction requires a directed stream")
    else:
        metric = "degree"
    return _report(S, metric, metric, node=args.node)


def _density(S: StreamGraph, args) -> int:
    metric = DENSITY_BY_KIND[S.kind] if args.variant is None else args.variant
    return _report(S, metric, metric)


def _cc(S: StreamGraph, args) -> int:
    variant = args.variant or ("cyclic" if S.kind == DIRECTED else "plain")
    metric, fn_variant = CC_VARIANTS[variant]
    if variant == "jaccard" and args.pair:
        _check_kind(S, "jaccard")
        at = args.at

        def call(_):
            return bp.jaccard(S, args.pair[0], args.pair[1], at=at)

        label = "jaccard" if at is None else f"jaccard@{at}"
        return _report(S, "jaccard", label, pair=tuple(args.pair), fn=call)
    if args.pair or args.at is not None:
        raise InputError("--pair and --at apply only to --variant jaccard")
    label = "cc" if variant == "plain" else f"cc:{variant}"
    return _report(S, metric, label, node=args.node, variant=fn_variant)


def _transitivity(S: StreamGraph, args) -> int:
    variant = args.variant or ("cyclic" if S.kind == DIRECTED else "plain")
    metric, fn_variant = TRANSITIVITY_VARIANTS[variant]
    label = "transitivity" if variant == "plain" else f"transitivity:{variant}"
    return _report(S, metric, label, variant=fn_variant)


def _strength(S: StreamGraph, args) -> int:
    if args.alpha is None:
        return _report(S, "strength", "strength", node=args.node)
    alpha = to_rational(args.alpha)
    return _report(
        S, "strength", f"strength:alpha={alpha}", node=args.node, fn=lambda v: wt.degree_strength_combo(S, v, alpha)
    )


def _wdensity(S: StreamGraph, args) -> int:
    return _report(S, "weighted_density", f"weighted_density:{args.variant}", variant=args.variant)


def _threshold(S: StreamGraph, args) -> int:
    sys.stdout.write(io.dumps(wt.threshold(S, to_rational(args.tau))))
    return EXIT_OK


def _delta(S: StreamGraph, args) -> int:
    sys.stdout.write(io.dumps(wt.delta_analysis(S, to_rational(args.delta), to_rational(args.resolution))))
    return EXIT_OK


def _project(S: StreamGraph, args) -> int:
    sys.stdout.write(io.dumps(bp.project(S, args.side, weighted=args.weighted)))
    return EXIT_OK


def _snapshot(S: StreamGraph, args) -> int:
    t = to_rational(args.t)
    doc = {"graph": "snapshot", "t": str(t), **static.snapshot(S, t).to_json()}
    _emit(doc)
    return EXIT_OK


def _induced(S: StreamGraph, args) -> int:
    _emit({"graph": "induced", **static.induced_graph(S).to_json()})
    return EXIT_OK


def _oracle(S: StreamGraph, args) -> int:
    step = to_rational(args.step)
    if step <= 0:
        raise InputError("--step must be positive")
    metric = args.metric
    _check_kind(S, metric)
    entry = catalog.lookup(metric)
    if entry.scope == "node" and args.node is None:
        raise InputError(f"{metric} needs --node")
    if entry.scope == "pair" and args.pair is None:
        raise InputError(f"{metric} needs --pair")
    variant = args.variant
    if variant is None and entry.variants:
        variant = entry.variants[0]
    try:
        value = oracle_metric(S, metric, step, node=args.node, pair=args.pair, variant=variant)
    except UndefinedMetric:
        value = None
    label = f"oracle:{metric}" if variant is None else f"oracle:{metric}:{variant}"
    doc = MetricReport(label, "global", {"": value}).to_json()
    doc["step"] = str(step)
    doc["aligned"] = GridPlan.over(S.horizon, step).is_aligned(S.breakpoints())
    _emit(doc)
    return EXIT_UNDEFINED if value is None else EXIT_OK


def _validate(S: StreamGraph, args) -> int:
    checks = {
        "horizon": True,
        "node_presence_in_horizon": True,
        "link_presence_in_endpoints": True,
        "weight_support": True,
        "graph_equivalent": core.is_graph_equivalent(S),
    }
    if S.kind == BIPARTITE:
        checks["sides"] = True
    _emit(
        {
            "valid": True,
            "kind": S.kind,
            "nodes": len(S.nodes),
            "links": len(S.links),
            "weighted": S.is_weighted,
            "checks": checks,
        }
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="streamgraphs", description="Exact metrics on stream graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="stream file, or - for stdin")
        p.set_defaults(handler=handler)
        return p

    command("stats", _stats, "summary statistics")

    p = command("degree", _degree, "node degrees")
    p.add_argument("--node")
    p.add_argument("--direction", choices=("out", "in"))

    p = command("density", _density, "density suited to the stream kind")
    p.add_argument("--variant", choices=sorted(set(DENSITY_BY_KIND.values())))

    p = command("cc", _cc, "clustering coefficients")
    p.add_argument("--node")
    p.add_argument("--variant", choices=tuple(CC_VARIANTS))
    p.add_argument("--pair", nargs=2, metavar=("U", "V"))
    p.add_argument("--at", help="instant for the instantaneous Jaccard coefficient")

    p = command("transitivity", _transitivity, "transitivity")
    p.add_argument("--variant", choices=tuple(TRANSITIVITY_VARIANTS))

    p = command("strength", _strength, "node strength")
    p.add_argument("--node")
    p.add_argument("--alpha", help="degree-strength tuning parameter")

    p = command("wdensity", _wdensity, "weighted density")
    p.add_argument("--variant", choices=wt.DENSITY_VARIANTS, default=wt.DENSITY_VARIANTS[0])

    p = command("threshold", _threshold, "keep weights >= tau; prints a stream file")
    p.add_argument("--tau", required=True)

    p = command("delta", _delta, "sliding-window aggregation; prints a weighted stream file")
    p.add_argument("--delta", required=True)
    p.add_argument("--resolution", required=True)

    p = command("project", _project, "one-mode projection of a bipartite stream")
    p.add_argument("--side", required=True, choices=(TOP, BOTTOM))
    p.add_argument("--weighted", action="store_true")

    p = command("snapshot", _snapshot, "graph G_t as JSON")
    p.add_argument("--t", required=True)

    command("induced", _induced, "induced graph G(S) as JSON")

    p = command("oracle", _oracle, "grid brute-force value of a metric")
    p.add_argument("--metric", required=True, choices=sorted(catalog.METRICS))
    p.add_argument("--step", required=True)
    p.add_argument("--node")
    p.add_argument("--pair", nargs=2, metavar=("U", "V"))
    p.add_argument("--variant")

    command("validate", _validate, "parse and audit invariants")
    return parser


def _read(path: str) -> StreamGraph:
    if path == "-":
        return io.load(sys.stdin)
    return io.read(path)


def _fail(code: str, message: str) -> int:
    sys.stderr.write(json.dumps({"error": code, "message": message}, separators=(",", ":")) + "\n")
    return EXIT_INPUT


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        S = _read(args.file)
        return args.handler(S, args)
    except io.ParseError as exc:
        return _fail(exc.code, str(exc))
    except OSError as exc:
        return _fail("io", str(exc))
    except KindError as exc:
        return _fail("kind", str(exc))
    except UndefinedMetric as exc:
        # whole-command failures such as an empty horizon
        _emit({"error": "undefined", "message": str(exc)})
        return EXIT_UNDEFINED
    except (StreamError, InputError, ValueError, TypeError) as exc:
        return _fail(getattr(exc, "code", "input"), str(exc))


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
