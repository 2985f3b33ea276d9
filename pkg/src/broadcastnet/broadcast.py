"""Telephone-model broadcasting on Cayley graphs.

A scheme tells every informed vertex which generator to call along in each
round. Three kinds are supported:

* :class:`FixedOrder` -- the origin calls in generator-index order; any
  other vertex walks the same order cyclically, starting just after the
  generator it was called along.
* :class:`ReceiptPermutations` -- a vertex informed at time ``i`` calls in the
  order of the ``i``-th permutation (the origin uses the 0-th; vertices
  informed later than the list reaches use the last one).
* :class:`RoundGenerators` -- in round ``k`` every informed vertex calls along
  ``g_k``.

Simulation rules for the first two kinds: calls are blind, a vertex makes
one attempt per round and its pointer advances whether or not the attempt
succeeds, every generator is tried at most once, and the generator leading
back to the informer is dropped (unless ``keep_receipt=True``). Attempts are
resolved in priority order (earlier informed time, then smaller vertex
index); an attempt fails if its target is itself calling or was already
claimed this round. A successful call to an informed vertex transfers
nothing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence, Union

from .cayley import CayleyGraph, Graph
from .groups import Dihedral, Element, GroupError, GroupSpec, parse_elements

__all__ = [
    "FixedOrder",
    "ReceiptPermutations",
    "RoundGenerators",
    "BroadcastScheme",
    "SchemeError",
    "SimulationTrace",
    "TraceReport",
    "simulate",
    "broadcast_time_under_scheme",
    "theorem1_scheme",
    "validate_trace",
    "default_max_rounds",
    "parse_scheme",
    "format_scheme",
]


class SchemeError(ValueError):
    """Scheme does not fit the generator set of the graph."""


@dataclass(frozen=True)
class FixedOrder:
    def text(self, group: GroupSpec | None = None) -> str:
        return "fixed"


@dataclass(frozen=True)
class ReceiptPermutations:
    perms: tuple[tuple[int, ...], ...]  # 0-based generator indices

    def __post_init__(self):
        object.__setattr__(self, "perms", tuple(tuple(p) for p in self.perms))
        if not self.perms:
            raise SchemeError("ReceiptPermutations needs at least one permutation")
        k = len(self.perms[0])
        for p in self.perms:
            if sorted(p) != list(range(k)):
                raise SchemeError(f"{[i + 1 for i in p]} is not a permutation of 1..{k}")

    def order_for(self, receipt_time: int) -> tuple[int, ...]:
        return self.perms[min(receipt_time, len(self.perms) - 1)]

    def text(self, group: GroupSpec | None = None) -> str:
        return "perm: " + "; ".join(",".join(str(i + 1) for i in p) for p in self.perms)


@dataclass(frozen=True)
class RoundGenerators:
    generators: tuple[Element, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))

    def text(self, group: GroupSpec | None = None) -> str:
        fmt = group.format if group is not None else str
        return "rounds: " + ",".join(fmt(g) for g in self.generators)


BroadcastScheme = Union[FixedOrder, ReceiptPermutations, RoundGenerators]


@dataclass(frozen=True)
class SimulationTrace:
    """Per-round record of the calls that connected.

    ``informed_time`` maps each informed vertex to the round it learned the
    message (origin -> 0). ``completion_round`` is None when the broadcast
    did not finish.
    """

    n: int
    origin: int
    rounds: tuple[tuple[tuple[int, int], ...], ...]
    informed_time: dict = field(hash=False)
    completion_round: int | None

    @property
    def complete(self) -> bool:
        return self.completion_round is not None

    def informed_sets(self) -> list[frozenset[int]]:
        """T_0, T_1, ..., one set per round of the trace."""
        out = []
        for r in range(len(self.rounds) + 1):
            out.append(frozenset(v for v, t in self.informed_time.items() if t <= r))
        return out

    def export(self) -> str:
        return "\n".join(", ".join(f"{u}->{v}" for u, v in calls) for calls in self.rounds)


def default_max_rounds(n: int, k: int) -> int:
    return 2 * math.ceil(math.log2(n)) + k if n > 1 else k


def _check_scheme(cg: CayleyGraph, scheme: BroadcastScheme) -> None:
    k = cg.degree
    if isinstance(scheme, ReceiptPermutations):
        if len(scheme.perms[0]) != k:
            raise SchemeError(f"permutations act on {len(scheme.perms[0])} generators, graph has {k}")
    elif isinstance(scheme, RoundGenerators):
        for g in scheme.generators:
            if g not in cg.generators:
                raise SchemeError(f"round generator {cg.group.format(g) if cg.group.contains(g) else g!r} is not in S")
    elif not isinstance(scheme, FixedOrder):
        raise SchemeError(f"unknown scheme type {type(scheme).__name__}")


def simulate(cg: CayleyGraph, scheme: BroadcastScheme, origin: int | None = None,
             max_rounds: int | None = None, keep_receipt: bool = False) -> SimulationTrace:
    """Run ``scheme`` from ``origin`` (default: the identity vertex)."""
    _check_scheme(cg, scheme)
    n = cg.order
    if origin is None:
        origin = cg.identity_vertex
    if not 0 <= origin < n:
        raise ValueError(f"origin {origin} out of range 0..{n - 1}")
    if max_rounds is None:
        max_rounds = default_max_rounds(n, cg.degree)
    if isinstance(scheme, RoundGenerators):
        return _simulate_rounds(cg, scheme, origin, max_rounds)
    return _simulate_lists(cg, scheme, origin, max_rounds, keep_receipt)


def _simulate_rounds(cg, scheme, origin, max_rounds):
    table = cg.table
    cols = [cg.generator_index(g) for g in scheme.generators]
    time = {origin: 0}
    informed = [origin]
    rounds = []
    done = cg.order == 1
    for r, j in enumerate(cols[:max_rounds], 1):
        if done:
            break
        col = table[:, j]
        calls = []
        for v in informed:
            u = int(col[v])
            if u not in time:
                calls.append((v, u))
        for _, u in calls:
            time[u] = r
        informed.extend(u for _, u in calls)
        rounds.append(tuple(calls))
        done = len(informed) == cg.order
    return SimulationTrace(cg.order, origin, tuple(rounds), time, len(rounds) if done else None)


def _simulate_lists(cg, scheme, origin, max_rounds, keep_receipt):
    n = cg.order
    k = cg.degree
    table = cg.table.tolist()
    fixed = isinstance(scheme, FixedOrder)
    if fixed:
        def order_for(_t, via=-1):
            # cyclic order, starting just after the generator the call came along
            return tuple((via + 1 + i) % k for i in range(k))
    else:
        def order_for(t, via=-1):
            return scheme.order_for(t)

    time = [-1] * n
    time[origin] = 0
    lists: dict[int, tuple[int, ...]] = {origin: order_for(0)}
    ptr = {origin: 0}
    active = [origin]  # callers with calls left, in priority order
    count = 1
    rounds = []
    r = 0
    while count < n and r < max_rounds:
        r += 1
        attempts = []
        still = []
        for v in active:
            lst = lists[v]
            p = ptr[v]
            attempts.append((v, table[v][lst[p]], lst[p]))
            ptr[v] = p + 1
            if p + 1 < len(lst):
                still.append(v)
        callers = {v for v, _, _ in attempts}
        claimed = set()
        calls = []
        new = []
        for v, x, j in attempts:
            if x in callers or x in claimed:
                continue
            claimed.add(x)
            calls.append((v, x))
            if time[x] < 0:
                time[x] = r
                new.append(x)
                order = order_for(r, j)
                if not keep_receipt:
                    row = table[x]
                    order = tuple(j for j in order if row[j] != v)
                lists[x] = order
                ptr[x] = 0
        rounds.append(tuple(calls))
        count += len(new)
        new.sort()
        active = still + [x for x in new if lists[x]]
        if not active and count < n:
            break
    informed_time = {v: t for v, t in enumerate(time) if t >= 0}
    return SimulationTrace(n, origin, tuple(rounds), informed_time, r if count == n else None)


def broadcast_time_under_scheme(cg: CayleyGraph, scheme: BroadcastScheme,
                                max_rounds: int | None = None, keep_receipt: bool = False) -> int | None:
    """Completion round from the identity vertex, or None if the scheme never finishes.

    Cayley graphs are vertex-transitive, so this bounds the broadcast time of
    every vertex.
    """
    return simulate(cg, scheme, None, max_rounds, keep_receipt).completion_round


def theorem1_scheme(delta: int) -> RoundGenerators:
    """Round generators w, wx, wx^3, ..., wx^(2^(delta-1)-1), then w again."""
    if delta < 2:
        raise ValueError("theorem1_scheme needs delta >= 2")
    group = Dihedral(2**delta - 1)
    gens = [group.reflection(2 ** (k - 1) - 1) for k in range(1, delta + 1)]
    return RoundGenerators(tuple(gens) + (group.w,))


@dataclass(frozen=True)
class TraceReport:
    violations: tuple[str, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    @property
    def first(self) -> str | None:
        return self.violations[0] if self.violations else None


def validate_trace(g: Graph | CayleyGraph, trace: SimulationTrace) -> TraceReport:
    """Check every call is an edge, each round is a matching, callers were informed,
    informed times agree with the calls, and the informed set at most doubles."""
    if isinstance(g, CayleyGraph):
        g = g.graph
    out: list[str] = []
    if trace.n != g.n:
        out.append(f"trace is for {trace.n} vertices, graph has {g.n}")
        return TraceReport(tuple(out))
    if trace.informed_time.get(trace.origin) != 0:
        out.append("origin not informed at time 0")
    first_call: dict[int, int] = {}
    known = {trace.origin}
    for r, calls in enumerate(trace.rounds, 1):
        seen: set[int] = set()
        newly = set()
        for u, v in calls:
            if not g.has_edge(u, v):
                out.append(f"round {r}: call {u}->{v} is not along an edge")
            if u in seen or v in seen:
                out.append(f"round {r}: matching violated ({u}->{v} reuses a vertex)")
            seen.update((u, v))
            if u not in known:
                out.append(f"round {r}: caller uninformed ({u}->{v})")
            if v != trace.origin and v not in first_call:
                first_call[v] = r
                newly.add(v)
        if len(known) + len(newly) > 2 * len(known):
            out.append(f"round {r}: informed set more than doubled")
        known |= newly
    for v, t in trace.informed_time.items():
        if v != trace.origin and first_call.get(v) != t:
            out.append(f"vertex {v}: informed_time {t} but first called in round {first_call.get(v)}")
    for v, r in first_call.items():
        if v not in trace.informed_time:
            out.append(f"round {r}: vertex {v} called but missing from informed_time")
    if trace.completion_round is not None:
        if len(trace.informed_time) != g.n:
            out.append("completion claimed but not every vertex is informed")
        elif max(trace.informed_time.values()) != trace.completion_round:
            out.append("completion_round differs from the last informed time")
    return TraceReport(tuple(out))


# -- text format -------------------------------------------------------------


def parse_scheme(text: str, group: GroupSpec | None = None) -> BroadcastScheme:
    """``fixed`` | ``perm: 2,1,3; 1,3,2`` | ``rounds: (1,0),(1,1),(1,0)``."""
    s = text.strip()
    if s == "fixed":
        return FixedOrder()
    head, sep, body = s.partition(":")
    head = head.strip()
    if not sep or head not in ("perm", "rounds"):
        raise SchemeError(f"unrecognised scheme {text!r}")
    if head == "perm":
        try:
            perms = [tuple(int(x) - 1 for x in part.split(",")) for part in body.split(";") if part.strip()]
        except ValueError:
            raise SchemeError(f"bad permutation list in {text!r}") from None
        return ReceiptPermutations(tuple(perms))
    if group is None:
        raise SchemeError("a group is needed to read round generators")
    try:
        return RoundGenerators(tuple(parse_elements(group, body)))
    except GroupError as exc:
        raise SchemeError(str(exc)) from None


def format_scheme(scheme: BroadcastScheme, group: GroupSpec | None = None) -> str:
    return scheme.text(group)


def lift_scheme_to_product(scheme: BroadcastScheme, k: int) -> BroadcastScheme:
    """Scheme on the product with Z_2 whose extra generator has index ``k``.

    The origin first calls across, then both copies replay ``scheme`` in
    lockstep, one round late.
    """
    if isinstance(scheme, RoundGenerators):
        raise SchemeError("lift RoundGenerators with explicit product elements instead")
    if isinstance(scheme, FixedOrder):
        base: Sequence[tuple[int, ...]] = [tuple(range(k))]
    else:
        base = scheme.perms
    perms = [(k,) + tuple(base[0])] + [tuple(p) + (k,) for p in base]
    return ReceiptPermutations(tuple(perms))
