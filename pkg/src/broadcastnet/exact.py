"""Exact minimum broadcast time for small graphs, plus cheap bounds.

The search runs over informed-vertex bitsets. From a state, only callee sets
of maximum matchings between informed and uninformed vertices are branched
on: the matchable callee sets form a transversal matroid, every matchable
set extends to one of maximum size, and informing more vertices never
costs extra rounds.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .broadcast import SimulationTrace
from .cayley import CayleyGraph, Graph

__all__ = [
    "ExactResult",
    "SolverTooLarge",
    "DEFAULT_VERTEX_CAP",
    "exact_broadcast_time_from",
    "exact_broadcast_time",
    "log2_lower_bound",
    "greedy_upper_bound",
    "greedy_trace",
]

DEFAULT_VERTEX_CAP = 20


class SolverTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class ExactResult:
    origin: int
    rounds: int
    witness: SimulationTrace
    nodes_expanded: int


def _as_graph(g) -> Graph:
    return g.graph if isinstance(g, CayleyGraph) else g


def _check_size(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise SolverTooLarge(f"graph has {g.n} vertices, which exceeds exact-solver cap {cap}")
    if cap > DEFAULT_VERTEX_CAP and g.n > DEFAULT_VERTEX_CAP:
        warnings.warn(f"exact solver on {g.n} vertices: memory grows like 2^n", RuntimeWarning, stacklevel=3)
    if not g.is_connected():
        raise ValueError("broadcast time of a disconnected graph is undefined")


class _Solver:
    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.full = (1 << g.n) - 1
        self.nbr = [sum(1 << u for u in g.adj[v]) for v in range(g.n)]
        self.failed: dict[int, int] = {}  # state -> largest budget known to fail
        self.moves_cache: dict[int, list[tuple[int, tuple]]] = {}
        self.expanded = 0

    def _radius_bound(self, mask: int) -> int:
        """Rounds needed just to reach the farthest uninformed vertex."""
        frontier = mask
        seen = mask
        d = 0
        while seen != self.full:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= self.nbr[low.bit_length() - 1]
                m ^= low
            nxt &= ~seen
            if not nxt:
                return 10**9
            seen |= nxt
            frontier = nxt
            d += 1
        return d

    def moves(self, mask: int) -> list[tuple[int, tuple]]:
        """(callee mask, matching) for each maximum-matching callee set."""
        cached = self.moves_cache.get(mask)
        if cached is not None:
            return cached
        unknown = self.full & ~mask
        callers = []
        for v in range(self.n):
            if mask >> v & 1:
                c = self.nbr[v] & unknown
                if c:
                    callers.append((v, c))
        best: dict[int, tuple] = {}
        best_size = 0
        seen_states = set()

        # DFS over callers: each picks a free uninformed neighbour or stays idle
        def rec(i: int, used: int, calls: tuple, size: int):
            nonlocal best_size
            if (i, used) in seen_states:
                return
            seen_states.add((i, used))
            if size + (len(callers) - i) < best_size:
                return
            if i == len(callers):
                if size > best_size:
                    best_size = size
                    best.clear()
                if size == best_size and used not in best:
                    best[used] = calls
                return
            v, c = callers[i]
            free = c & ~used
            while free:
                low = free & -free
                rec(i + 1, used | low, calls + ((v, low.bit_length() - 1),), size + 1)
                free ^= low
            rec(i + 1, used, calls, size)

        rec(0, 0, (), 0)
        out = sorted(best.items(), key=lambda kv: kv[0])
        self.moves_cache[mask] = out
        return out

    def solve(self, mask: int, budget: int, path: list) -> bool:
        if mask == self.full:
            return True
        if budget <= 0:
            return False
        if self.failed.get(mask, -1) >= budget:
            return False
        informed = mask.bit_count()
        if informed << budget < self.n or self._radius_bound(mask) > budget:
            self.failed[mask] = max(self.failed.get(mask, -1), budget)
            return False
        self.expanded += 1
        for new, calls in self.moves(mask):
            path.append(calls)
            if self.solve(mask | new, budget - 1, path):
                return True
            path.pop()
        self.failed[mask] = max(self.failed.get(mask, -1), budget)
        return False


def _trace_from_calls(n: int, origin: int, rounds: list[tuple]) -> SimulationTrace:
    time = {origin: 0}
    for r, calls in enumerate(rounds, 1):
        for _, v in calls:
            time.setdefault(v, r)
    done = len(time) == n
    return SimulationTrace(n, origin, tuple(tuple(c) for c in rounds), time, len(rounds) if done else None)


def exact_broadcast_time_from(g: Graph | CayleyGraph, origin: int, cap: int = DEFAULT_VERTEX_CAP) -> ExactResult:
    """Minimum broadcast time from ``origin`` with a witness schedule."""
    g = _as_graph(g)
    _check_size(g, cap)
    if not 0 <= origin < g.n:
        raise ValueError(f"origin {origin} out of range")
    solver = _Solver(g)
    start = 1 << origin
    budget = max(log2_lower_bound(g), max(g.distances_from(origin)))
    while True:
        path: list = []
        if solver.solve(start, budget, path):
            return ExactResult(origin, budget, _trace_from_calls(g.n, origin, path), solver.expanded)
        budget += 1


def exact_broadcast_time(g: Graph | CayleyGraph, cap: int = DEFAULT_VERTEX_CAP) -> int:
    """b(G): max over origins, or a single origin for vertex-transitive graphs."""
    g = _as_graph(g)
    _check_size(g, cap)
    if g.vertex_transitive:
        return exact_broadcast_time_from(g, 0, cap).rounds
    return max(exact_broadcast_time_from(g, v, cap).rounds for v in range(g.n))


def log2_lower_bound(g: Graph | CayleyGraph | int) -> int:
    n = g if isinstance(g, int) else _as_graph(g).n
    return math.ceil(math.log2(n)) if n > 1 else 0


def greedy_trace(g: Graph | CayleyGraph, origin: int, max_rounds: int | None = None) -> SimulationTrace:
    """Each round, a maximal informed->uninformed matching built greedily:
    callees with more uninformed neighbours first, ties by vertex index."""
    g = _as_graph(g)
    if not g.is_connected():
        raise ValueError("broadcast time of a disconnected graph is undefined")
    if max_rounds is None:
        max_rounds = g.n
    time = {origin: 0}
    rounds = []
    while len(time) < g.n and len(rounds) < max_rounds:
        r = len(rounds) + 1
        cand = []
        for v in range(g.n):
            if v in time:
                continue
            callers = [u for u in g.adj[v] if u in time]
            if callers:
                fresh = sum(1 for u in g.adj[v] if u not in time)
                cand.append((-fresh, v, callers))
        cand.sort(key=lambda c: (c[0], c[1]))
        busy: set[int] = set()
        calls = []
        for _, v, callers in cand:
            for u in callers:
                if u not in busy:
                    busy.add(u)
                    calls.append((u, v))
                    break
        for _, v in calls:
            time[v] = r
        rounds.append(tuple(sorted(calls)))
    done = len(time) == g.n
    return SimulationTrace(g.n, origin, tuple(rounds), time, len(rounds) if done else None)


def greedy_upper_bound(g: Graph | CayleyGraph, origin: int = 0) -> int:
    return greedy_trace(g, origin).completion_round
