"""Cayley graphs, a few named graphs, and graph-level utilities."""

from __future__ import annotations

import re
import warnings
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .groups import (
    DEFAULT_ORDER_LIMIT,
    Element,
    GroupError,
    GroupSpec,
    Z2Pow,
    enumerate_elements,
    validate_generators,
)

__all__ = [
    "Graph",
    "CayleyGraph",
    "DisconnectedWarning",
    "build_cayley",
    "hypercube",
    "product_with_k2",
    "named_graph",
    "diameter",
    "export_graph",
    "read_edge_list",
]


class DisconnectedWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1`` with sorted adjacency lists."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    name: str | None = None
    vertex_transitive: bool = False

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for {self.n} vertices")
        for v, nbrs in enumerate(self.adj):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"adjacency of {v} is not sorted and duplicate-free")
            for u in nbrs:
                if u == v:
                    raise ValueError(f"loop at vertex {v}")
                if not 0 <= u < self.n:
                    raise ValueError(f"vertex {u} out of range")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if v not in self.adj[u]:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str | None = None,
                   vertex_transitive: bool = False) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), name, vertex_transitive)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def distances_from(self, source: int) -> list[int]:
        """BFS distances; -1 for unreachable vertices."""
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in self.adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return dist

    def is_connected(self) -> bool:
        return self.n == 0 or min(self.distances_from(0)) >= 0


@dataclass(frozen=True, eq=False)
class CayleyGraph:
    """Cayley graph (A, S) plus the element <-> vertex bijection.

    ``table[v, j]`` is the vertex of ``element(v) * S[j]``; schemes address
    neighbours through it, by generator index.
    """

    group: GroupSpec
    generators: tuple[Element, ...]
    elements: tuple[Element, ...]
    table: np.ndarray
    graph: Graph
    index: dict = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return len(self.generators)

    @property
    def identity_vertex(self) -> int:
        return self.index[self.group.identity()]

    def vertex(self, a: Element) -> int:
        try:
            return self.index[a]
        except KeyError:
            raise GroupError(f"{a!r} is not an element of {self.group.text}") from None

    def element(self, v: int) -> Element:
        return self.elements[v]

    def generator_index(self, s: Element) -> int:
        try:
            return self.generators.index(s)
        except ValueError:
            raise GroupError(f"{self.group.format(s)} is not in the generator set") from None

    def is_connected(self) -> bool:
        return self.graph.is_connected()


def build_cayley(group: GroupSpec, gens: Sequence[Element], limit: int = DEFAULT_ORDER_LIMIT,
                 name: str | None = None) -> CayleyGraph:
    """Cayley graph with an edge a -- a*s for each s in ``gens``.

    ``gens`` must be inverse-closed. A non-generating set gives a
    disconnected graph and a :class:`DisconnectedWarning`.
    """
    gens = tuple(gens)
    elements = tuple(enumerate_elements(group, limit))
    report = validate_generators(group, gens, limit)
    if report.non_members:
        raise GroupError("; ".join(report.problems()))
    if not report.inverse_closed:
        raise GroupError("; ".join(report.problems()))
    if report.duplicates or report.contains_identity:
        raise GroupError("; ".join(report.problems()))
    if not report.generates:
        warnings.warn(
            f"{len(gens)} generators reach only {report.reached} of {group.order} elements of {group.text}; "
            "the Cayley graph is disconnected",
            DisconnectedWarning,
            stacklevel=2,
        )
    index = {a: v for v, a in enumerate(elements)}
    mul = group.mul
    table = np.empty((len(elements), len(gens)), dtype=np.int64)
    for v, a in enumerate(elements):
        for j, s in enumerate(gens):
            table[v, j] = index[mul(a, s)]
    adj = tuple(tuple(sorted(set(row))) for row in table.tolist())
    graph = Graph(len(elements), adj, name or f"Cay({group.text})", vertex_transitive=True)
    return CayleyGraph(group, gens, elements, table, graph, index)


def hypercube(r: int, limit: int = DEFAULT_ORDER_LIMIT) -> CayleyGraph:
    """Q_r as the Cayley graph of z2pow(r) with the standard basis."""
    if r < 1:
        raise ValueError("hypercube dimension must be >= 1")
    group = Z2Pow(r)
    if group.order > limit:
        raise GroupError(f"hypercube({r}) has {group.order} vertices, above the limit {limit}")
    return build_cayley(group, group.basis(), limit, name=f"Q{r}")


def product_with_k2(g: Graph) -> Graph:
    """Cartesian product g x K_2: vertex v of copy b becomes 2v + b."""
    edges = []
    for u, v in g.edges():
        edges.append((2 * u, 2 * v))
        edges.append((2 * u + 1, 2 * v + 1))
    edges.extend((2 * v, 2 * v + 1) for v in range(g.n))
    name = f"{g.name} x K2" if g.name else None
    return Graph.from_edges(2 * g.n, edges, name, g.vertex_transitive)


_NAMED = re.compile(r"^\s*(cycle|complete|star)\s*\(\s*(\d+)\s*\)\s*$")


def named_graph(name: str) -> Graph:
    """``petersen``, ``cycle(n)``, ``complete(n)`` (and ``star(k)`` = K_{1,k})."""
    if name.strip() == "petersen":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return Graph.from_edges(10, outer + spokes + inner, "petersen", vertex_transitive=True)
    m = _NAMED.match(name)
    if not m:
        raise ValueError(f"unknown graph name {name!r}")
    kind, k = m.group(1), int(m.group(2))
    if kind == "cycle":
        if k < 3:
            raise ValueError("cycle(n) needs n >= 3")
        return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)], f"cycle({k})", True)
    if kind == "complete":
        if k < 1:
            raise ValueError("complete(n) needs n >= 1")
        return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)], f"complete({k})", True)
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)], f"star({k})")


def diameter(g: Graph) -> int:
    best = 0
    for v in range(g.n):
        dist = g.distances_from(v)
        if min(dist) < 0:
            raise ValueError("diameter of a disconnected graph is undefined")
        best = max(best, max(dist))
        if g.vertex_transitive:
            break
    return best


def export_graph(g: Graph, fmt: str = "edge-list") -> str:
    if fmt == "edge-list":
        return "\n".join(f"{u} {v}" for u, v in g.edges())
    if fmt == "dot":
        lines = [f'graph "{g.name or "G"}" {{']
        lines += [f"  {v};" for v in range(g.n)]
        lines += [f"  {u} -- {v};" for u, v in g.edges()]
        lines.append("}")
        return "\n".join(lines)
    raise ValueError(f"unknown export format {fmt!r}")


def read_edge_list(text: str, name: str | None = None) -> Graph:
    """Inverse of ``export_graph(g, "edge-list")``; isolated vertices past the last edge are lost."""
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    n = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(n, edges, name)
