"""Named bipartite graphs and star algebra fixtures shipped with the package."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .graph import BipartiteGraph
from .quiver import StarAlgebra

GRAPH_NAMES = ("p2-complement", "c8", "heawood", "heawood-c", "g9p730", "g9p730-c",
               "g9p731", "g9p731-c", "mobius-kantor")
STAR_NAMES = ("a3", "c8", "heawood", "heawood-c", "g9p730", "g9p730-c",
              "g9p731", "g9p731-c", "mobius-kantor")

# star fixture name -> graph catalog name of its B-graph
STAR_TO_GRAPH = dict(zip(STAR_NAMES, GRAPH_NAMES))


@dataclass(frozen=True)
class Literature:
    """What is known about a fixture beyond the implemented necessary conditions."""

    two_rf: bool | None
    note: str


LITERATURE = {
    "a3": Literature(True, "2-representation-finite (I = (a1 b1))"),
    "c8": Literature(True, "2-representation-finite"),
    "heawood": Literature(True, "2-representation-finite"),
    "heawood-c": Literature(True, "2-representation-finite"),
    "g9p730": Literature(True, "2-representation-finite"),
    "g9p730-c": Literature(True, "2-representation-finite"),
    "g9p731": Literature(True, "2-representation-finite"),
    "g9p731-c": Literature(True, "2-representation-finite"),
    "mobius-kantor": Literature(None, "excluded externally: its 3-preprojective algebra is infinite dimensional"),
}


def _data(kind: str, name: str) -> dict:
    path = resources.files("starquiver").joinpath("data").joinpath(kind).joinpath(f"{name}.json")
    return json.loads(path.read_text())


def generalized_petersen(n: int, k: int) -> BipartiteGraph:
    """GP(n, k) for even n and odd k, with X = {u_even, v_odd} and Y = {u_odd, v_even}."""
    if n % 2 or k % 2 == 0:
        raise ValueError("GP(n, k) is bipartite only for even n and odd k")
    xs = [("u", i) for i in range(0, n, 2)] + [("v", i) for i in range(1, n, 2)]
    ys = [("u", i) for i in range(1, n, 2)] + [("v", i) for i in range(0, n, 2)]
    xi = {v: t for t, v in enumerate(xs)}
    yi = {v: t for t, v in enumerate(ys)}
    R = [[0] * len(ys) for _ in xs]
    edges = []
    for i in range(n):
        edges.append((("u", i), ("u", (i + 1) % n)))
        edges.append((("u", i), ("v", i)))
        edges.append((("v", i), ("v", (i + k) % n)))
    for a, b in edges:
        if a not in xi:
            a, b = b, a
        R[xi[a]][yi[b]] = 1
    return BipartiteGraph(len(xs), len(ys), tuple(map(tuple, R)))


@lru_cache(maxsize=None)
def named_graph(name: str) -> BipartiteGraph:
    if name == "mobius-kantor":
        return generalized_petersen(8, 3)
    if name not in GRAPH_NAMES:
        raise KeyError(f"unknown graph {name!r}; choose from {', '.join(GRAPH_NAMES)}")
    return BipartiteGraph.from_json(_data("graphs", name))


@lru_cache(maxsize=None)
def star_fixture(name: str) -> StarAlgebra:
    if name == "mobius-kantor":
        return StarAlgebra.from_graph(named_graph("mobius-kantor"))
    if name not in STAR_NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(STAR_NAMES)}")
    return StarAlgebra.from_json(_data("stars", name))


def display_name(name: str) -> str:
    if name == "mobius-kantor":
        return "Moebius-Kantor graph GP(8,3)"
    kind = "stars" if name in STAR_NAMES else "graphs"
    return _data(kind, name).get("display", name)
