"""Experimental search for large Cayley broadcast networks.

Candidates are (group, generator set, scheme) triples. Each is simulated
from the identity; those finishing within ``t`` rounds become catalog
records. Groups are visited largest first, and by default a group is left
as soon as one witness is found for it, since every witness on a group has
the same order.

Results depend only on the space and the seed: each group draws from its
own RNG seeded with ``(seed, group)``, and per-group runs are merged in group
order against the global candidate budget, so ``jobs`` does not change them.
A wall-clock ``time_limit`` does, and is off by default.
"""

from __future__ import annotations

import itertools
import logging
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .bounds import moore_bound
from .broadcast import BroadcastScheme, FixedOrder, ReceiptPermutations, simulate
from .catalog import CatalogRecord
from .cayley import build_cayley
from .groups import (
    Cyclic,
    Dihedral,
    Element,
    GroupSpec,
    GroupSpecError,
    Semidirect,
    Z2Pow,
    validate_generators,
)

__all__ = [
    "SearchSpace",
    "SearchError",
    "SearchResult",
    "family_groups",
    "family_space",
    "inverse_closed_sets",
    "run_search",
    "search",
    "find_permutation_scheme",
]

log = logging.getLogger(__name__)

FAMILIES = ("dihedral", "cyclic", "z2pow", "semidirect")


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class SearchSpace:
    """What to try and how much of it.

    ``schemes`` is ``"fixed"`` (every ordering of the generators, or
    ``orderings`` random ones when k! > 720), ``"perm"`` (``perm_samples``
    random ReceiptPermutations per generator set) or ``"both"``.
    ``generator_sets`` pins the generator sets instead of enumerating them
    (one entry per group).
    """

    groups: tuple[GroupSpec, ...]
    delta: int
    t: int
    schemes: str = "fixed"
    perm_samples: int = 200
    orderings: int = 720
    generator_sets: tuple[tuple[tuple[Element, ...], ...], ...] | None = None
    budget: int = 10_000
    time_limit: float | None = None
    seed: int = 0
    first_hit_per_group: bool = True

    def __post_init__(self):
        if not self.groups:
            raise SearchError("search space has no groups")
        if self.delta < 1 or self.t < 1:
            raise SearchError("delta and t must be >= 1")
        if self.budget <= 0:
            raise SearchError("budget must be positive")
        if self.schemes not in ("fixed", "perm", "both"):
            raise SearchError(f"unknown scheme policy {self.schemes!r}")
        if self.generator_sets is not None and len(self.generator_sets) != len(self.groups):
            raise SearchError("generator_sets needs one entry per group")


@dataclass(frozen=True)
class SearchResult:
    records: tuple[CatalogRecord, ...]
    evaluated: int
    groups_visited: int
    # candidate index (1-based, global) at which each record was found
    found_at: tuple[int, ...] = field(default=())

    @property
    def best(self) -> CatalogRecord | None:
        return self.records[0] if self.records else None


def family_groups(family: str, max_order: int) -> list[GroupSpec]:
    """Groups of one family with order <= max_order, largest first."""
    out: list[GroupSpec] = []
    if family == "dihedral":
        out = [Dihedral(n) for n in range(1, max_order // 2 + 1)]
    elif family == "cyclic":
        out = [Cyclic(n) for n in range(2, max_order + 1)]
    elif family == "z2pow":
        out = [Z2Pow(r) for r in range(1, max_order.bit_length()) if 2**r <= max_order]
    elif family == "semidirect":
        for m in range(2, max_order // 2 + 1):
            for n in range(2, max_order // m + 1):
                for g in range(1, n):
                    if math.gcd(g, n) == 1 and pow(g, m, n) == 1:
                        out.append(Semidirect(m, n, g))
    else:
        raise SearchError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    out.sort(key=lambda G: (-G.order, G.text))
    return out


def family_space(family: str, delta: int, t: int, max_order: int | None = None, **kw) -> SearchSpace:
    """Search space over a whole family, capped at min(max_order, M(delta, t))."""
    cap = moore_bound(delta, t)
    if max_order is not None:
        cap = min(cap, max_order)
    groups = family_groups(family, cap)
    if not groups:
        raise SearchError(f"no {family} groups of order <= {cap}")
    return SearchSpace(tuple(groups), delta, t, **kw)


def _blocks(group: GroupSpec) -> list[tuple[Element, ...]]:
    """Involutions as singletons and {s, s^-1} pairs, canonical by rank."""
    e = group.identity()
    blocks = []
    for a in group.iter_elements():
        if a == e:
            continue
        ai = group.inv(a)
        if ai == a:
            blocks.append((a,))
        elif a < ai:
            blocks.append((a, ai))
    return blocks


def inverse_closed_sets(group: GroupSpec, max_size: int) -> Iterator[tuple[Element, ...]]:
    """Identity-free inverse-closed sets of size <= max_size, largest first,
    each sorted by rank and produced once."""
    blocks = _blocks(group)

    def rec(start: int, size: int):
        if size == 0:
            yield ()
            return
        for i in range(start, len(blocks)):
            b = blocks[i]
            if len(b) > size:
                continue
            if len(b) == size:
                yield b
            else:
                for rest in rec(i + 1, size - len(b)):
                    yield b + rest

    for size in range(max_size, 0, -1):
        for s in rec(0, size):
            yield tuple(sorted(s))


def _schemes_for(k: int, space: SearchSpace, rng: random.Random) -> Iterator[tuple[tuple[int, ...], BroadcastScheme]]:
    """(generator reordering, scheme) pairs for one generator set."""
    ident = tuple(range(k))
    if space.schemes in ("fixed", "both"):
        if math.factorial(k) <= 720:
            for p in itertools.permutations(range(k)):
                yield p, FixedOrder()
        else:
            for _ in range(space.orderings):
                p = list(range(k))
                rng.shuffle(p)
                yield tuple(p), FixedOrder()
    if space.schemes in ("perm", "both"):
        all_perms = list(itertools.permutations(range(k))) if k <= 6 else None
        for _ in range(space.perm_samples):
            if all_perms is not None:
                perms = tuple(rng.choice(all_perms) for _ in range(space.t))
            else:
                perms = tuple(tuple(rng.sample(range(k), k)) for _ in range(space.t))
            yield ident, ReceiptPermutations(perms)


def _search_group(args) -> tuple[list[tuple[int, CatalogRecord]], int]:
    """Evaluate one group; returns ([(local index, record)], evaluated)."""
    gi, space, cap, deadline = args
    group = space.groups[gi]
    rng = random.Random(f"{space.seed}:{group.text}")
    if group.order > moore_bound(space.delta, space.t):
        return [], 0
    if space.generator_sets is not None:
        gen_sets: Iterator = iter(space.generator_sets[gi])
    else:
        gen_sets = inverse_closed_sets(group, space.delta)
    hits: list[tuple[int, CatalogRecord]] = []
    evaluated = 0
    for gens in gen_sets:
        gens = tuple(gens)
        if len(gens) > space.delta:
            continue
        report = validate_generators(group, gens)
        if not report.valid:
            continue
        base = build_cayley(group, gens)
        for order_perm, scheme in _schemes_for(len(gens), space, rng):
            if evaluated >= cap or (deadline is not None and time.monotonic() > deadline):
                return hits, evaluated
            evaluated += 1
            ordered = tuple(gens[i] for i in order_perm)
            cg = base if ordered == gens else build_cayley(group, ordered)
            trace = simulate(cg, scheme, max_rounds=space.t)
            if trace.complete:
                rec = CatalogRecord.make(
                    delta=space.delta, t=space.t, order=group.order, group=group,
                    generators=ordered, scheme=scheme, rounds=trace.completion_round,
                    note=f"search seed={space.seed}",
                )
                hits.append((evaluated, rec))
                if space.first_hit_per_group:
                    return hits, evaluated
    return hits, evaluated


def run_search(space: SearchSpace, jobs: int = 1) -> SearchResult:
    """Evaluate the space within its budget; records sorted by order, largest first."""
    deadline = time.monotonic() + space.time_limit if space.time_limit else None
    remaining = space.budget
    found: list[tuple[int, CatalogRecord]] = []
    visited = 0
    n = len(space.groups)
    gi = 0
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        while gi < n and remaining > 0:
            batch = list(range(gi, min(n, gi + max(1, jobs))))
            tasks = [(i, space, remaining, deadline) for i in batch]
            results = list(pool.map(_search_group, tasks)) if pool else [_search_group(tasks[0])]
            batch = batch[: len(results)]
            for i, (hits, evaluated) in zip(batch, results):
                if remaining <= 0:
                    break
                used = space.budget - remaining
                # a run with a smaller cap is a prefix of this one
                found.extend((used + idx, rec) for idx, rec in hits if idx <= remaining)
                remaining -= min(evaluated, remaining)
                visited += 1
                log.info("%s: %d candidates, %d hits, %d budget left",
                         space.groups[i].text, evaluated, len(hits), remaining)
            gi = batch[-1] + 1
            if deadline is not None and time.monotonic() > deadline:
                break
    finally:
        if pool:
            pool.shutdown()
    found.sort(key=lambda h: (-h[1].order, h[0]))
    return SearchResult(
        tuple(r for _, r in found), space.budget - remaining, visited, tuple(i for i, _ in found)
    )


def search(family: str, delta: int, t: int, budget: int = 10_000, seed: int = 0,
           max_order: int | None = None, jobs: int = 1, **kw) -> SearchResult:
    """Shorthand for ``run_search(family_space(...))``."""
    try:
        space = family_space(family, delta, t, max_order, budget=budget, seed=seed, **kw)
    except GroupSpecError as exc:
        raise SearchError(str(exc)) from None
    return run_search(space, jobs=jobs)


def find_permutation_scheme(group: GroupSpec, gens: Sequence[Element], t: int,
                            budget: int = 10**6, seed: int = 0) -> tuple[ReceiptPermutations | None, int]:
    """Sample ReceiptPermutations on a fixed Cayley graph until one finishes
    within ``t`` rounds. Returns (scheme or None, samples drawn)."""
    cg = build_cayley(group, gens)
    k = len(gens)
    perms = list(itertools.permutations(range(k)))
    rng = random.Random(seed)
    for i in range(1, budget + 1):
        scheme = ReceiptPermutations(tuple(rng.choice(perms) for _ in range(t)))
        if simulate(cg, scheme, max_rounds=t).complete:
            return scheme, i
    return None, budget
