"""Command-line entry points: generate, detect, triangles, metrics, stats, serve."""

from __future__ import annotations

import functools
import json
import sys
import time
from pathlib import Path

import click

from .attributed import build_graph, load_attributed_json
from .benchmark import GenSpec, GenSpecError, generate_planted, read_lfr
from .detection import DetectionConfig, SortChoice, detect
from .graph import GraphFormatError, WeightedGraph, dump_edge_list, filter_by_degree, load_edge_list
from .metrics import modularity, pair_counts, rand_index
from .partition import Partition, parse_partition, partition_to_json, partition_to_text
from .stats import community_stats
from .triangles import (
    PackingBudgetError,
    enumerate_triangles,
    pack_exact,
    pack_greedy_eval,
    pack_greedy_weight,
)

_USER_ERRORS = (GraphFormatError, GenSpecError, PackingBudgetError, ValueError, OSError, KeyError)


def _fail_cleanly(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except _USER_ERRORS as exc:
            click.echo(json.dumps({"error": str(exc)}), err=True)
            sys.exit(2)

    return wrapper


def _load_graph(path: str, fmt: str, edge_type: str, ground_truth: str | None):
    """Returns (graph, truth partition or None)."""
    text = Path(path).read_text()
    if fmt == "lfr":
        if not ground_truth:
            raise ValueError("--format lfr requires --ground-truth (the community file)")
        return read_lfr(text, Path(ground_truth).read_text())
    if fmt == "edgelist":
        g = load_edge_list(text)
    elif fmt == "json":
        g = build_graph(load_attributed_json(text), edge_type)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    truth = None
    if ground_truth:
        truth = parse_partition(Path(ground_truth).read_text())
        if truth.node_count != g.node_count:
            raise ValueError(
                f"ground truth covers {truth.node_count} nodes but the graph has {g.node_count}"
            )
    return g, truth


_format_option = click.option(
    "--format", "fmt", type=click.Choice(["edgelist", "json", "lfr"]), default="edgelist",
    show_default=True, help="Input graph format.",
)
_edge_type_option = click.option(
    "--edge-type", type=click.Choice(["retweet", "mention"]), default="retweet",
    show_default=True, help="Edge type used when reading attributed JSON.",
)


@click.group()
@click.version_option(package_name="tricomm")
def main():
    """Community detection in weighted graphs, seeded by triangle packing."""


@main.command()
@click.option("--input", "spec_path", required=True, type=click.Path(exists=True),
              help="Generator spec JSON.")
@click.option("--output", "prefix", required=True, help="Output path prefix.")
@click.option("--seed", type=int, default=None, help="Override the spec's seed.")
@_fail_cleanly
def generate(spec_path: str, prefix: str, seed: int | None):
    """Generate a planted-partition instance and write '<prefix>.edges' and
    '<prefix>.communities'."""
    spec = GenSpec.from_json(Path(spec_path).read_text())
    if seed is not None:
        spec = GenSpec(spec.n, spec.community_sizes, spec.avg_degree, spec.mu_t,
                       spec.mu_w, spec.weight_scale, seed)
    graph, truth = generate_planted(spec)
    edges_path = Path(f"{prefix}.edges")
    communities_path = Path(f"{prefix}.communities")
    edges_path.write_text(dump_edge_list(graph))
    communities_path.write_text(partition_to_text(truth))
    click.echo(json.dumps({
        "v": graph.node_count,
        "edges": graph.edge_count,
        "k": truth.k,
        "files": [str(edges_path), str(communities_path)],
    }))


def _detect_once(g: WeightedGraph, truth: Partition | None, cfg: DetectionConfig):
    started = time.perf_counter()
    partition = detect(g, cfg)
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    try:
        mod = modularity(g, partition)
    except ValueError:
        mod = None
    ri = rand_index(truth, partition) if truth is not None and truth.node_count >= 2 else None
    report = {"modularity": mod, "rand_index": ri, "k": partition.k, "elapsed_ms": elapsed_ms}
    return partition, report


@main.command("detect")
@click.option("--input", "path", required=True, type=click.Path(exists=True))
@_format_option
@_edge_type_option
@click.option("--omega", type=float, default=0.1, show_default=True)
@click.option("--sort", "sort_choice", type=click.Choice([s.value for s in SortChoice]),
              default="iw", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--ground-truth", type=click.Path(exists=True), default=None,
              help="Partition file (or LFR community file) to score against.")
@click.option("--output", "out", type=click.Path(), default=None,
              help="Write the partition JSON here.")
@click.option("--min-degree", type=int, default=0, show_default=True,
              help="Apply the component degree filter before detection.")
@_fail_cleanly
def detect_cmd(path, fmt, edge_type, omega, sort_choice, seed, ground_truth, out, min_degree):
    """Detect communities and print a metrics report to stdout."""
    g, truth = _load_graph(path, fmt, edge_type, ground_truth)
    if min_degree > 0:
        if truth is not None:
            raise ValueError("--min-degree cannot be combined with --ground-truth")
        g = filter_by_degree(g, min_degree)
    cfg = DetectionConfig(omega=omega, sort_choice=SortChoice(sort_choice), seed=seed)
    partition, report = _detect_once(g, truth, cfg)
    if out:
        Path(out).write_text(partition_to_json(partition))
    click.echo(json.dumps(report))


@main.command("triangles")
@click.option("--input", "path", required=True, type=click.Path(exists=True))
@_format_option
@_edge_type_option
@click.option("--mode", type=click.Choice(["enumerate", "pack-eval", "pack-weight", "pack-exact"]),
              default="pack-eval", show_default=True)
@click.option("--output", "out", type=click.Path(), default=None)
@_fail_cleanly
def triangles_cmd(path, fmt, edge_type, mode, out):
    """Enumerate triangles or compute a node-disjoint packing."""
    g, _ = _load_graph(path, fmt, edge_type, None)
    if mode == "enumerate":
        tris = enumerate_triangles(g)
        payload = {
            "triangles": [{"nodes": list(t.nodes), "weight": t.weight} for t in tris],
            "count": len(tris),
        }
    else:
        packer = {"pack-eval": pack_greedy_eval, "pack-weight": pack_greedy_weight,
                  "pack-exact": pack_exact}[mode]
        payload = packer(g).to_json_dict()
    text = json.dumps(payload, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


@main.command("metrics")
@click.option("--input", "path", required=True, type=click.Path(exists=True),
              help="First partition file.")
@click.option("--ground-truth", "truth_path", required=True, type=click.Path(exists=True),
              help="Second partition file.")
@_fail_cleanly
def metrics_cmd(path, truth_path):
    """Compare two partition files with the Rand Index."""
    p1 = parse_partition(Path(path).read_text())
    p2 = parse_partition(Path(truth_path).read_text())
    counts = pair_counts(p1, p2)
    click.echo(json.dumps({
        "rand_index": rand_index(p1, p2),
        "pair_counts": {"m11": counts.m11, "m00": counts.m00,
                        "m10": counts.m10, "m01": counts.m01},
    }))


@main.command("stats")
@click.option("--input", "path", required=True, type=click.Path(exists=True),
              help="Attributed dataset JSON.")
@_edge_type_option
@click.option("--community", "community_id", required=True, type=int)
@click.option("--theme", default=None)
@click.option("--media", default=None)
@click.option("--partition", "partition_path", type=click.Path(exists=True), default=None,
              help="Reuse a partition file instead of running detection.")
@click.option("--omega", type=float, default=0.1, show_default=True)
@click.option("--sort", "sort_choice", type=click.Choice([s.value for s in SortChoice]),
              default="iw", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@_fail_cleanly
def stats_cmd(path, edge_type, community_id, theme, media, partition_path, omega, sort_choice, seed):
    """Per-community tweet statistics for an attributed dataset."""
    ds = load_attributed_json(Path(path).read_text())
    if partition_path:
        partition = parse_partition(Path(partition_path).read_text())
        if partition.node_count != ds.node_count:
            raise ValueError("partition does not match the dataset's node count")
    else:
        g = build_graph(ds, edge_type)
        partition = detect(g, DetectionConfig(omega=omega, sort_choice=SortChoice(sort_choice),
                                              seed=seed))
    result = community_stats(partition, ds.records, community_id, theme=theme, media=media)
    click.echo(json.dumps(result.to_json_dict(), indent=2))


@main.command("serve")
@click.option("--input", "path", type=click.Path(exists=True), default=None,
              help="Attributed dataset JSON to pre-load.")
@_edge_type_option
@click.option("--min-degree", type=int, default=0, show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--time-budget", type=float, default=120.0, show_default=True,
              help="Per-request detection budget in seconds.")
@click.option("--ui-dir", type=click.Path(exists=True, file_okay=False), default=None,
              help="Serve a built frontend from this directory at /.")
@_fail_cleanly
def serve_cmd(path, edge_type, min_degree, port, host, time_budget, ui_dir):
    """Start the exploration HTTP API (and optionally the UI)."""
    import uvicorn

    from .server import create_app

    dataset = load_attributed_json(Path(path).read_text()) if path else None
    app = create_app(dataset, edge_type=edge_type, min_degree=min_degree, time_budget=time_budget)
    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
