"""Classification pipeline: parameters -> candidate graphs -> filters -> status table."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .canon import EnumerationOptions, canonical_matrix, default_workers, enumerate_biregular, is_edge_transitive
from .catalog import GRAPH_NAMES, LITERATURE, STAR_TO_GRAPH, named_graph
from .coxeter import condition_battery
from .diophantine import solutions_for_star
from .graph import BipartiteGraph, bidegree, has_duplicate_neighborhoods
from .quiver import StarAlgebra

MODES = ("regular", "edge-transitive", "enumerate")
GRAPH_TO_STAR = {g: s for s, g in STAR_TO_GRAPH.items()}


@dataclass(frozen=True)
class PipelineConfig:
    mode: str = "regular"
    p_values: tuple[int, ...] = (1, 2, 3, 4)
    tuples: tuple[tuple[int, int, int, int], ...] = ()  # explicit (r, sigma1, s, sigma2); overrides p_values
    catalog: tuple[str, ...] = GRAPH_NAMES
    extra_graphs: tuple[tuple[str, BipartiteGraph], ...] = ()
    max_vertices: int = 14  # enumeration is attempted only up to this many vertices
    order_bound: int = 1000
    solution_bound: int = 60
    distinct_neighbourhoods: bool = True
    workers: int | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.max_vertices < 1 or self.order_bound < 1 or self.solution_bound < 1:
            raise ValueError("limits must be positive")
        for p in self.p_values:
            if p not in (1, 2, 3, 4):
                raise ValueError("p values must lie in 1..4")

    def parameter_sets(self) -> list[tuple[int, int, int, int]]:
        if self.tuples:
            return sorted(set(self.tuples))
        out: set[tuple[int, int, int, int]] = set()
        for p in self.p_values:
            out |= solutions_for_star(p, self.solution_bound)
        return sorted(out)


def graph_parameters(G: BipartiteGraph) -> tuple[int, int, int, int] | None:
    """(r, sigma1, s, sigma2), reading the edgeless 1x1 graph as the tuple (1, 1, 1, 1).

    The A3 star algebra has an edgeless B-graph, yet it is the solution
    (p, a, k, b, l) = (2, 1, 1, 1, 1) of the Diophantine system.
    """
    deg = bidegree(G)
    if deg is None:
        return None
    if (G.r, G.s) == (1, 1) and G.num_edges == 0:
        return (1, 1, 1, 1)
    return (G.r, deg.sigma1, G.s, deg.sigma2)


@dataclass
class Candidate:
    name: str
    graph: BipartiteGraph
    params: tuple[int, int, int, int]
    sources: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class ClassifiedRow:
    name: str
    params: tuple[int, int, int, int]
    status: str  # candidate | undecided | excluded
    failed: tuple[str, ...]
    trace: tuple[dict, ...]
    note: str
    canonical: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"name": self.name, "params": list(self.params), "status": self.status,
                "failed": list(self.failed), "trace": list(self.trace), "note": self.note}


@dataclass(frozen=True)
class ClassificationResult:
    config: PipelineConfig
    rows: tuple[ClassifiedRow, ...]
    skipped: tuple[tuple[int, int, int, int], ...]  # parameter sets too large to enumerate

    @property
    def partial(self) -> bool:
        return bool(self.skipped)

    def survivors(self) -> list[str]:
        return [row.name for row in self.rows if row.status == "candidate"]

    def with_status(self, status: str) -> list[str]:
        return [row.name for row in self.rows if row.status == status]

    def to_json(self) -> dict:
        return {
            "mode": self.config.mode,
            "rows": [row.to_json() for row in self.rows],
            "survivors": self.survivors(),
            "undecided": self.with_status("undecided"),
            "partial": self.partial,
            "skipped": [list(t) for t in self.skipped],
        }


def _trace_entry(name: str, ok: bool | None, witness=None) -> dict:
    status = "undecided" if ok is None else ("pass" if ok else "fail")
    return {"condition": name, "status": status, "witness": witness}


def evaluate_candidate(cand: Candidate, mode: str, order_bound: int) -> ClassifiedRow:
    G = cand.graph
    trace = []
    edgeless_a3 = (G.r, G.s) == (1, 1) and G.num_edges == 0
    trace.append(_trace_entry("connected", G.is_connected() or edgeless_a3))
    if mode == "regular":
        deg = bidegree(G)
        trace.append(_trace_entry("regular", deg is not None and G.r == G.s and deg.sigma1 == deg.sigma2))
    elif mode == "edge-transitive":
        trace.append(_trace_entry("edge_transitive", is_edge_transitive(G)))
    trace.append(_trace_entry("no_duplicate_neighbourhoods", not has_duplicate_neighborhoods(G)))
    verdict = condition_battery(StarAlgebra.from_graph(G), order_bound)
    trace.extend(r.to_json() for r in verdict.results)
    failed = tuple(t["condition"] for t in trace if t["status"] == "fail")
    undecided = any(t["status"] == "undecided" for t in trace)
    literature = next((LITERATURE[GRAPH_TO_STAR[s]] for s in cand.sources if s in GRAPH_TO_STAR), None)
    if failed:
        status, note = "excluded", "fails " + ", ".join(failed)
    elif undecided:
        status, note = "undecided", "some implemented filter is undecided"
    elif literature is not None and literature.two_rf:
        status, note = "candidate", "passes all implemented filters; " + literature.note
    elif literature is not None:
        status, note = "undecided", "passes all implemented filters; " + literature.note
    else:
        status, note = "undecided", "passes all implemented filters"
    return ClassifiedRow(cand.name, cand.params, status, failed, tuple(trace), note, canonical_matrix(G))


def _evaluate_task(args):
    return evaluate_candidate(*args)


def gather_candidates(config: PipelineConfig) -> tuple[list[Candidate], list[tuple[int, int, int, int]]]:
    params = config.parameter_sets()
    wanted = set(params)
    by_key: dict[tuple, Candidate] = {}

    def add(name: str, G: BipartiteGraph, source: str):
        key = (G.r, G.s, canonical_matrix(G))
        p = graph_parameters(G)
        if p is None or p not in wanted:
            return
        if key in by_key:
            by_key[key].sources.append(source)
        else:
            by_key[key] = Candidate(name, G, p, [source])

    for name in config.catalog:
        add(name, named_graph(name), name)
    for name, G in config.extra_graphs:
        add(name, G, f"file:{name}")
    skipped = []
    if config.mode == "enumerate":
        opts = EnumerationOptions(distinct_neighbourhoods=config.distinct_neighbourhoods,
                                  max_vertices=config.max_vertices, workers=config.workers)
        for r, s1, s, s2 in params:
            if (r, s1, s, s2) == (1, 1, 1, 1):
                continue  # the edgeless A3 graph comes from the catalog
            if r + s > config.max_vertices:
                skipped.append((r, s1, s, s2))
                continue
            for idx, G in enumerate(enumerate_biregular(r, s1, s, s2, opts)):
                add(f"enum({r},{s1},{s},{s2})#{idx + 1}", G, "enumeration")
    return list(by_key.values()), skipped


def classify(config: PipelineConfig) -> ClassificationResult:
    candidates, skipped = gather_candidates(config)
    workers = config.workers or default_workers()
    tasks = [(c, config.mode, config.order_bound) for c in candidates]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_evaluate_task, tasks))
    else:
        rows = [_evaluate_task(t) for t in tasks]
    rows.sort(key=lambda row: (row.params, row.canonical))
    return ClassificationResult(config, tuple(rows), tuple(skipped))


def survivor_names(result: ClassificationResult, statuses: Iterable[str] = ("candidate",)) -> set[str]:
    statuses = set(statuses)
    return {row.name for row in result.rows if row.status in statuses}
