"""HTTP API for interactive graph and community exploration.

One dataset is held per server. Filters are always re-applied to the
pristine dataset in a fixed order (records, then edge type, then degree),
so re-posting the same filter is idempotent. Mutations swap an immutable
view snapshot under a lock; reads never block on a running detection.
"""

from __future__ import annotations

import datetime as dt
import threading
import time
from dataclasses import dataclass, field, replace

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .attributed import (
    AttributedDataset,
    EDGE_TYPES,
    build_graph,
    filter_records,
    load_attributed_json,
    recount_tweets,
)
from .detection import DetectionConfig, SortChoice, detect_full
from .graph import GraphFormatError, WeightedGraph, filter_by_degree_nodes, subgraph
from .metrics import modularity
from .partition import Partition
from .stats import community_stats


@dataclass(frozen=True)
class FilterParams:
    min_degree: int = 0
    edge_type: str = "retweet"
    themes: frozenset[str] | None = None
    medias: frozenset[str] | None = None
    date_from: dt.date | None = None
    date_to: dt.date | None = None

    def to_json_dict(self) -> dict:
        return {
            "min_degree": self.min_degree,
            "edge_type": self.edge_type,
            "themes": sorted(self.themes) if self.themes is not None else None,
            "medias": sorted(self.medias) if self.medias is not None else None,
            "date_from": self.date_from.isoformat() if self.date_from else None,
            "date_to": self.date_to.isoformat() if self.date_to else None,
        }


@dataclass(frozen=True)
class DetectionResult:
    partition: Partition
    config: DetectionConfig
    elapsed_ms: int
    modularity: float | None
    community_info: tuple[dict, ...]


@dataclass(frozen=True)
class View:
    """Immutable snapshot of the dataset after the current filters."""

    filters: FilterParams
    records: tuple = ()
    graph: WeightedGraph | None = None
    node_ids: tuple[int, ...] = ()  # dataset index per graph node
    detection: DetectionResult | None = None


def _build_view(ds: AttributedDataset, f: FilterParams) -> View:
    records = filter_records(
        ds.records,
        themes=set(f.themes) if f.themes is not None else None,
        medias=set(f.medias) if f.medias is not None else None,
        date_range=(f.date_from, f.date_to),
    )
    typed = build_graph(ds, f.edge_type)
    kept = filter_by_degree_nodes(typed, f.min_degree)
    return View(
        filters=f,
        records=tuple(records),
        graph=subgraph(typed, kept),
        node_ids=tuple(kept),
    )


class SessionStore:
    """Single-writer state holder; reads take the current snapshot atomically."""

    def __init__(self, dataset: AttributedDataset | None, filters: FilterParams, time_budget: float):
        self._lock = threading.Lock()
        self.time_budget = time_budget
        self.dataset = dataset
        self.view = _build_view(dataset, filters) if dataset is not None else View(filters)

    def load(self, dataset: AttributedDataset, filters: FilterParams) -> View:
        with self._lock:
            self.dataset = dataset
            self.view = _build_view(dataset, filters)
            return self.view

    def apply_filter(self, filters: FilterParams) -> View:
        with self._lock:
            if self.dataset is None:
                raise ApiError(409, "no dataset loaded")
            self.view = _build_view(self.dataset, filters)
            return self.view

    def run_detection(self, cfg: DetectionConfig) -> View:
        with self._lock:
            view = self.view
        if self.dataset is None or view.graph is None:
            raise ApiError(409, "no dataset loaded")

        outcome: dict = {}

        dataset = self.dataset

        def work() -> None:
            started = time.perf_counter()
            partition, state = detect_full(view.graph, cfg)
            elapsed = int((time.perf_counter() - started) * 1000)
            try:
                mod = modularity(view.graph, partition)
            except ValueError:
                mod = None
            info = _community_info(dataset, view, partition)
            outcome["result"] = DetectionResult(partition, cfg, elapsed, mod, info)

        worker = threading.Thread(target=work, daemon=True)
        worker.start()
        worker.join(timeout=self.time_budget)
        if "result" not in outcome:
            raise ApiError(503, f"detection exceeded the {self.time_budget:.0f}s time budget")
        with self._lock:
            if self.view is not view:
                raise ApiError(409, "filters changed while detection was running")
            self.view = replace(view, detection=outcome["result"])
            return self.view


def _community_info(ds: AttributedDataset, view: View, partition: Partition) -> tuple[dict, ...]:
    iw = {c: 0.0 for c in range(partition.k)}
    wd = {c: 0.0 for c in range(partition.k)}
    g = view.graph
    for u, v, w in g.edges():
        if partition.assignment[u] == partition.assignment[v]:
            iw[partition.assignment[u]] += w
    for n in range(g.node_count):
        wd[partition.assignment[n]] += g.weighted_degree(n)
    infos = []
    for c, members in enumerate(partition.communities()):
        infos.append(
            {
                "id": c,
                "size": len(members),
                "iw": iw[c],
                "wd": wd[c],
                "members": [ds.ids[view.node_ids[n]] for n in members],
            }
        )
    return tuple(infos)


class ApiError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


def _parse_filters(payload: dict) -> FilterParams:
    if not isinstance(payload, dict):
        raise ApiError(400, "filter body must be a JSON object")
    known = {"min_degree", "edge_type", "themes", "medias", "date_from", "date_to"}
    unknown = set(payload) - known
    if unknown:
        raise ApiError(400, f"unknown filter fields: {sorted(unknown)}")
    min_degree = payload.get("min_degree", 0)
    if not isinstance(min_degree, int) or min_degree < 0:
        raise ApiError(400, "min_degree must be a non-negative integer")
    edge_type = payload.get("edge_type", "retweet")
    if edge_type not in EDGE_TYPES:
        raise ApiError(400, f"edge_type must be one of {list(EDGE_TYPES)}")

    def str_set(name: str) -> frozenset[str] | None:
        value = payload.get(name)
        if value is None:
            return None
        if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
            raise ApiError(400, f"{name} must be a list of strings")
        return frozenset(value)

    def parse_date(name: str) -> dt.date | None:
        value = payload.get(name)
        if value is None:
            return None
        try:
            return dt.date.fromisoformat(value)
        except (TypeError, ValueError):
            raise ApiError(400, f"{name} must be an ISO-8601 date") from None

    return FilterParams(
        min_degree=min_degree,
        edge_type=edge_type,
        themes=str_set("themes"),
        medias=str_set("medias"),
        date_from=parse_date("date_from"),
        date_to=parse_date("date_to"),
    )


def _parse_detection(payload: dict) -> DetectionConfig:
    if not isinstance(payload, dict):
        raise ApiError(400, "detect body must be a JSON object")
    omega = payload.get("omega", 0.1)
    if not isinstance(omega, (int, float)) or not (0.0 <= float(omega) <= 0.5):
        raise ApiError(400, "omega must be a number in [0, 0.5]")
    sort_choice = payload.get("sort_choice", "iw")
    try:
        sort_choice = SortChoice(sort_choice)
    except ValueError:
        raise ApiError(400, f"sort_choice must be one of {[s.value for s in SortChoice]}") from None
    seed = payload.get("seed", 0)
    if not isinstance(seed, int):
        raise ApiError(400, "seed must be an integer")
    return DetectionConfig(omega=float(omega), sort_choice=sort_choice, seed=seed)


def _graph_json(ds: AttributedDataset, view: View) -> dict:
    g = view.graph
    counts = recount_tweets(ds, view.records)
    kept = set(view.node_ids)
    nodes = []
    for n, dataset_idx in enumerate(view.node_ids):
        a = ds.attrs[dataset_idx]
        nodes.append(
            {
                "id": ds.ids[dataset_idx],
                "label": a.label,
                "followers": a.followers,
                "tweets": counts[dataset_idx],
                "reporter": a.is_reporter,
                "degree": g.degree(n),
            }
        )
    edges = [
        {
            "source": ds.ids[view.node_ids[u]],
            "target": ds.ids[view.node_ids[v]],
            "type": view.filters.edge_type,
            "weight": w,
        }
        for u, v, w in g.edges()
    ]
    records = [
        {"author": ds.ids[r.author], "theme": r.theme, "media": r.media, "date": r.date.isoformat()}
        for r in view.records
        if r.author in kept
    ]
    return {"nodes": nodes, "edges": edges, "records": records}


def _summary(view: View) -> dict:
    g = view.graph
    return {
        "v": g.node_count,
        "edge_count": g.edge_count,
        "total_weight": g.total_weight(),
        "record_count": len(view.records),
        "filter": view.filters.to_json_dict(),
        "has_detection": view.detection is not None,
    }


def create_app(
    dataset: AttributedDataset | None = None,
    *,
    edge_type: str = "retweet",
    min_degree: int = 0,
    time_budget: float = 120.0,
) -> FastAPI:
    """Build the API app, optionally pre-loading a dataset."""
    app = FastAPI(title="tricomm explorer API")
    store = SessionStore(dataset, FilterParams(min_degree=min_degree, edge_type=edge_type), time_budget)
    app.state.store = store

    @app.exception_handler(ApiError)
    async def handle_api_error(_request: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status, content={"error": exc.message})

    @app.exception_handler(RequestValidationError)
    async def handle_validation(_request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    def current_view() -> View:
        if store.dataset is None or store.view.graph is None:
            raise ApiError(409, "no dataset loaded")
        return store.view

    @app.post("/load")
    async def load(request: Request):
        try:
            payload = await request.json()
        except Exception:
            raise ApiError(400, "body must be JSON") from None
        try:
            ds = load_attributed_json(payload)
        except (GraphFormatError, ValueError) as exc:
            raise ApiError(400, str(exc)) from None
        view = store.load(ds, FilterParams(edge_type=store.view.filters.edge_type))
        return _summary(view)

    @app.get("/session")
    async def session():
        if store.dataset is None:
            return {"loaded": False}
        return {"loaded": True, **_summary(store.view)}

    @app.get("/graph")
    async def graph():
        view = current_view()
        return _graph_json(store.dataset, view)

    @app.post("/filter")
    async def apply_filter(request: Request):
        try:
            payload = await request.json()
        except Exception:
            raise ApiError(400, "body must be JSON") from None
        if store.dataset is None:
            raise ApiError(409, "no dataset loaded")
        filters = _parse_filters(payload)
        view = store.apply_filter(filters)
        return _summary(view)

    @app.post("/detect")
    async def run_detect(request: Request):
        try:
            payload = await request.json()
        except Exception:
            raise ApiError(400, "body must be JSON") from None
        cfg = _parse_detection(payload)
        view = store.run_detection(cfg)
        det = view.detection
        return {
            "partition": {"k": det.partition.k, "assignment": list(det.partition.assignment)},
            "node_ids": [store.dataset.ids[i] for i in view.node_ids],
            "metrics": {
                "modularity": det.modularity,
                "rand_index": None,
                "k": det.partition.k,
                "elapsed_ms": det.elapsed_ms,
            },
        }

    @app.get("/communities")
    async def communities():
        view = current_view()
        if view.detection is None:
            raise ApiError(409, "no detection has been run on the current view")
        return {"communities": [dict(info) for info in view.detection.community_info]}

    @app.get("/communities/{cid}/stats")
    async def stats(cid: int, theme: str | None = None, media: str | None = None):
        view = current_view()
        if view.detection is None:
            raise ApiError(409, "no detection has been run on the current view")
        partition = view.detection.partition
        if not (0 <= cid < partition.k):
            raise ApiError(404, f"unknown community {cid}")
        index_of = {dataset_idx: n for n, dataset_idx in enumerate(view.node_ids)}
        remapped = [
            replace(r, author=index_of[r.author]) for r in view.records if r.author in index_of
        ]
        result = community_stats(partition, remapped, cid, theme=theme, media=media)
        json_dict = result.to_json_dict()
        json_dict["member_share"] = {
            str(store.dataset.ids[view.node_ids[int(n)]]): share
            for n, share in json_dict["member_share"].items()
        }
        json_dict["members"] = [store.dataset.ids[view.node_ids[n]] for n in partition.members(cid)]
        return json_dict

    return app
