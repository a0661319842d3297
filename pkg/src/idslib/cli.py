"""Command-line front end.

Commands: ``enumerate`` (count/list valid profiles), ``check`` (is a
subset an IDS), ``mids`` (minimum IDS), ``gadget`` (emit reduction
instances), ``transform`` (odd-degree transformation). Exit codes: 0 for
an affirmative answer, 1 for a negative answer that comes with a
certificate, 2 for usage, format, or limit errors. Output is
deterministic byte for byte for a given input and configuration.

Forests are routed to the linear-time tree algorithms automatically;
``--exact`` forces the enumeration-based path instead.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import IdsLibError
from .graph import Graph, VertexSet, graph_from_json, parse_graph, to_edge_list
from .profiles import DEFAULT_VERTEX_LIMIT, enumerate_valid_profiles
from .reductions import (
    DEFAULT_BISECTION_CAP,
    IntegerSet,
    build_idsc_gadget,
    build_mids_gadget,
    build_scb_gadget,
)
from .solver import check_ids, solve_mids_exact, vc_upper_bound
from .transform import odd_transform
from .trees import check_ids_tree, solve_mids_tree

__all__ = ["RunConfig", "main", "build_parser"]


@dataclass(frozen=True)
class RunConfig:
    """Resolved invocation settings shared by the subcommands."""

    command: str
    fmt: str
    limit: int
    cap: int
    jobs: int
    seed: int | None


def _load_graph(path: str) -> Graph:
    text = Path(path).read_text(encoding="utf-8")
    if path.endswith(".json"):
        return graph_from_json(text)
    return parse_graph(text)


def _emit(config: RunConfig, text_lines: list[str], json_doc: dict) -> None:
    if config.fmt == "json":
        print(json.dumps(json_doc, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_enumerate(config: RunConfig, args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    profile_set = enumerate_valid_profiles(graph, limit=config.limit)
    lines = [f"|U| = {len(profile_set)}"]
    texts = profile_set.texts() if args.profiles else None
    if texts is not None:
        lines.extend(texts)
    _emit(
        config,
        lines,
        {"count": len(profile_set), "complete": profile_set.complete, "profiles": texts},
    )
    return 0


def _cmd_check(config: RunConfig, args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    subset = VertexSet.from_labels(graph, args.label)
    if graph.is_forest() and not args.exact:
        verdict = check_ids_tree(graph, subset)
        lines = ["IDS" if verdict else "not an IDS"]
        _emit(
            config,
            lines,
            {"is_ids": verdict, "method": "tree", "witness": None, "profiles_examined": None},
        )
        return 0 if verdict else 1
    result = check_ids(graph, subset, limit=config.limit)
    lines = ["IDS" if result.is_ids else "not an IDS"]
    if result.witness is not None:
        first, second = result.witness
        lines.append(f"witness: {first.to_text()} {second.to_text()}")
    doc = result.as_json_dict()
    doc["method"] = "exact"
    _emit(config, lines, doc)
    return 0 if result.is_ids else 1


def _cmd_mids(config: RunConfig, args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    if args.upper_bound:
        bound = vc_upper_bound(graph, limit=config.limit)
        tag = "verified" if bound.verified else "unverified"
        lines = [f"{{{','.join(bound.vertices.labels(graph))}}} size={bound.size} upper-bound {tag}"]
        doc = bound.as_json_dict(graph)
        doc["method"] = "vc-upper-bound"
        _emit(config, lines, doc)
        return 0
    if graph.is_forest() and not args.exact:
        result = solve_mids_tree(graph)
        method = "tree"
    else:
        result = solve_mids_exact(graph, jobs=config.jobs, limit=config.limit)
        method = "exact"
    flag = "optimal" if result.optimal else "not-optimal"
    lines = [f"{{{','.join(result.vertices.labels(graph))}}} size={result.size} {flag}"]
    doc = result.as_json_dict(graph)
    doc["method"] = method
    _emit(config, lines, doc)
    return 0


def _parse_integers(tokens: list[str]) -> IntegerSet:
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise IdsLibError(f"not an integer: {tok!r}") from None
    return IntegerSet(tuple(values))


def _cmd_gadget(config: RunConfig, args: argparse.Namespace) -> int:
    base = args.output
    threshold = None
    if args.kind == "scb":
        graph, meta = build_scb_gadget(_parse_integers(args.spec))
    elif args.kind == "mids":
        graph, threshold, meta = build_mids_gadget(_parse_integers(args.spec))
    else:
        if len(args.spec) != 1:
            raise IdsLibError("gadget idsc takes exactly one graph file")
        graph, _, meta = build_idsc_gadget(_load_graph(args.spec[0]))
    edges_path = Path(f"{base}.edges")
    meta_path = Path(f"{base}.meta.json")
    edges_path.write_text(to_edge_list(graph), encoding="utf-8")
    meta_path.write_text(meta.to_json() + "\n", encoding="utf-8")
    lines = [
        f"wrote {edges_path} ({graph.vertex_count} vertices, {graph.edge_count} edges)",
        f"wrote {meta_path}",
    ]
    if threshold is not None:
        lines.append(f"threshold = {threshold}")
    _emit(
        config,
        lines,
        {
            "edges_file": str(edges_path),
            "meta_file": str(meta_path),
            "vertices": graph.vertex_count,
            "edges": graph.edge_count,
            "threshold": threshold,
        },
    )
    return 0


def _cmd_transform(config: RunConfig, args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    transformed, tmap = odd_transform(graph)
    base = args.output
    edges_path = Path(f"{base}.edges")
    map_path = Path(f"{base}.map.json")
    edges_path.write_text(to_edge_list(transformed), encoding="utf-8")
    map_path.write_text(tmap.to_json() + "\n", encoding="utf-8")
    aux_count = len(tmap.even_hosts)
    _emit(
        config,
        [
            f"wrote {edges_path} ({transformed.vertex_count} vertices, {transformed.edge_count} edges)",
            f"wrote {map_path} ({aux_count} auxiliaries)",
        ],
        {
            "edges_file": str(edges_path),
            "map_file": str(map_path),
            "auxiliaries": aux_count,
        },
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--limit",
        type=int,
        default=DEFAULT_VERTEX_LIMIT,
        help="vertex limit for profile enumeration (default %(default)s)",
    )
    common.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_BISECTION_CAP,
        help="bisection scan cap (default %(default)s)",
    )
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for subset scans")
    common.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed for randomized instance generation (reserved; current commands are deterministic)",
    )

    parser = argparse.ArgumentParser(
        prog="idslib",
        description="Information dominating sets under the binary local majority rule.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="count or list the valid profiles")
    p.add_argument("graph", help="edge-list file (or .json graph)")
    p.add_argument("--profiles", action="store_true", help="list every profile, ascending")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("check", parents=[common], help="test whether a subset is an IDS")
    p.add_argument("graph")
    p.add_argument("label", nargs="*", help="vertex labels forming the subset")
    p.add_argument("--exact", action="store_true", help="force the enumeration path on forests")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("mids", parents=[common], help="compute a minimum IDS")
    p.add_argument("graph")
    p.add_argument("--exact", action="store_true", help="force the enumeration path on forests")
    p.add_argument(
        "--upper-bound",
        action="store_true",
        help="return a fast cover-based upper bound instead of an exact answer",
    )
    p.set_defaults(func=_cmd_mids)

    p = sub.add_parser("gadget", parents=[common], help="emit a reduction instance")
    p.add_argument("kind", choices=("scb", "idsc", "mids"))
    p.add_argument("spec", nargs="+", help="positive integers (scb, mids) or a graph file (idsc)")
    p.add_argument("-o", "--output", required=True, help="output base path")
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser("transform", parents=[common], help="apply the odd-degree transformation")
    p.add_argument("graph")
    p.add_argument("-o", "--output", required=True, help="output base path")
    p.set_defaults(func=_cmd_transform)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    config = RunConfig(
        command=args.command,
        fmt=args.format,
        limit=args.limit,
        cap=args.cap,
        jobs=args.jobs,
        seed=args.seed,
    )
    try:
        return args.func(config, args)
    except IdsLibError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
