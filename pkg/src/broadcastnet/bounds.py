"""Moore-type upper bound on the order of (delta, t)-broadcast graphs.

f(d, 0) = 1, f(d, t) = 1 + sum_{i=1}^{min(d, t)} f(d, t - i), and the bound
is M(delta, t) = 2 f(delta - 1, t - 1). All arithmetic is on Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = ["f", "moore_bound", "BoundTable", "bound_table", "product_lower_bound"]


@lru_cache(maxsize=None)
def _f(d: int, t: int) -> int:
    if t == 0:
        return 1
    return 1 + sum(_f(d, t - i) for i in range(1, min(d, t) + 1))


def f(delta: int, t: int) -> int:
    """Maximum number of vertices informed within ``t`` rounds from a vertex
    that may use ``delta`` calls."""
    if delta < 0 or t < 0:
        raise ValueError("f(delta, t) needs delta >= 0 and t >= 0")
    # fill bottom-up so deep t does not hit the recursion limit
    for s in range(t):
        _f(delta, s)
    return _f(delta, t)


def moore_bound(delta: int, t: int) -> int:
    if delta < 1 or t < 1:
        raise ValueError("moore_bound needs delta >= 1 and t >= 1")
    return 2 * f(delta - 1, t - 1)


@dataclass(frozen=True)
class BoundTable:
    deltas: range
    times: range
    values: np.ndarray  # object dtype, rows = deltas, cols = times

    def __getitem__(self, key: tuple[int, int]) -> int:
        delta, t = key
        return self.values[delta - self.deltas.start, t - self.times.start]

    def rows(self) -> list[list[int]]:
        return self.values.tolist()

    def render(self, fmt: str = "pretty", full: bool = False) -> str:
        """``tsv`` or ``pretty``; ``pretty`` blanks entries with delta > t unless ``full``."""
        header = ["D\\t"] + [str(t) for t in self.times]
        lines = []
        for i, delta in enumerate(self.deltas):
            cells = []
            for j, t in enumerate(self.times):
                show = full or fmt == "tsv" or delta <= t
                cells.append(str(self.values[i, j]) if show else "")
            lines.append([str(delta)] + cells)
        if fmt == "tsv":
            return "\n".join("\t".join(row) for row in [header] + lines)
        if fmt != "pretty":
            raise ValueError(f"unknown table format {fmt!r}")
        width = max(len(c) for row in [header] + lines for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row).rstrip() for row in [header] + lines)


def bound_table(delta_max: int, t_max: int, delta_min: int = 2, t_min: int = 2) -> BoundTable:
    if delta_max < delta_min or t_max < t_min or delta_min < 1 or t_min < 1:
        raise ValueError("bound_table needs ranges starting at >= 1 and ending after they start")
    deltas = range(delta_min, delta_max + 1)
    times = range(t_min, t_max + 1)
    values = np.empty((len(deltas), len(times)), dtype=object)
    for i, d in enumerate(deltas):
        for j, t in enumerate(times):
            values[i, j] = moore_bound(d, t)
    return BoundTable(deltas, times, values)


def product_lower_bound(b_known: int) -> int:
    """Order at (delta + 1, t + 1) implied by a witness of order ``b_known`` at
    (delta, t), via the Cartesian product with K_2."""
    if b_known < 1:
        raise ValueError("b_known must be >= 1")
    return 2 * b_known
