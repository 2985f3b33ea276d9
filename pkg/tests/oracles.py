"""Independent reference computations used only by the tests.

None of these share code paths with the package: they use permutation or
matrix representations, plain exhaustive search, or explicit tree growth.
"""

from __future__ import annotations

from itertools import product

import numpy as np


# -- groups ------------------------------------------------------------------


def dihedral_perm(n: int, a: int, i: int) -> tuple[int, ...]:
    """w^a x^i acting on Z_n, with x: j -> j + 1, w: j -> -j, and composition
    rho(gh) = rho(g) o rho(h)."""
    return tuple(((-1) ** a * (j + i)) % n for j in range(n))


def dihedral_mul_oracle(n: int, g, h):
    pg = dihedral_perm(n, *g)
    ph = dihedral_perm(n, *h)
    composed = tuple(pg[ph[j]] for j in range(n))
    lookup = {dihedral_perm(n, a, i): (a, i) for a in (0, 1) for i in range(n)}
    return lookup[composed]


def semidirect_mul_oracle(m: int, n: int, g: int, p, q):
    """(a, x) -> (a mod m, [[g^a, 0], [x, 1]] mod n); matrices multiply."""
    def mat(a, x):
        return np.array([[pow(g, a, n), 0], [x, 1]], dtype=np.int64)

    prod = mat(*p) @ mat(*q) % n
    return ((p[0] + q[0]) % m, int(prod[1, 0]))


def brute_inverse(G, a):
    e = G.identity()
    found = [b for b in G.iter_elements() if G.mul(a, b) == e]
    assert len(found) == 1
    return found[0]


# -- broadcasting --------------------------------------------------------------


def _all_matchings(adj, informed: int, n: int):
    """Every set of informed->uninformed calls forming a matching (incl. empty)."""
    callers = [v for v in range(n) if informed >> v & 1]
    out = set()

    def rec(i, used, callees):
        if i == len(callers):
            out.add(callees)
            return
        rec(i + 1, used, callees)
        for u in adj[callers[i]]:
            if not (informed >> u & 1) and not (used >> u & 1):
                rec(i + 1, used | 1 << u, callees | 1 << u)

    rec(0, 0, 0)
    return out


def unpruned_broadcast_time(adj, origin: int) -> int:
    """Round-by-round reachable informed sets under all matchings."""
    n = len(adj)
    full = (1 << n) - 1
    states = {1 << origin}
    r = 0
    while full not in states:
        r += 1
        nxt = set()
        for s in states:
            for c in _all_matchings(adj, s, n):
                nxt.add(s | c)
        states = nxt
        assert r <= n
    return r


def brute_force_schedules(adj, origin: int, rounds: int) -> bool:
    """Does any sequence of ``rounds`` call rounds (each a matching) inform everyone?"""
    n = len(adj)
    full = (1 << n) - 1

    def go(s, r):
        if s == full:
            return True
        if r == 0:
            return False
        return any(go(s | c, r - 1) for c in _all_matchings(adj, s, n))

    return go(1 << origin, rounds)


# -- bounds ------------------------------------------------------------------


def tree_growth_f(d: int, t: int) -> int:
    """Grow the best calling tree explicitly: every node may place up to d
    calls, one per round, each creating a new node."""
    nodes = [d]  # remaining calls per node; root has d
    for _ in range(t):
        new = []
        for i, left in enumerate(nodes):
            if left > 0:
                nodes[i] = left - 1
                new.append(d)
        nodes.extend(new)
    return len(nodes)


PUBLISHED_BOUNDS = {
    2: [4, 6, 8, 10, 12, 14, 16, 18, 20],
    3: [4, 8, 14, 24, 40, 66, 108, 176, 286],
    4: [4, 8, 16, 30, 56, 104, 192, 354, 652],
    5: [4, 8, 16, 32, 62, 120, 232, 448, 864],
    6: [4, 8, 16, 32, 64, 126, 248, 488, 960],
    7: [4, 8, 16, 32, 64, 128, 254, 504, 1000],
    8: [4, 8, 16, 32, 64, 128, 256, 510, 1016],
    9: [4, 8, 16, 32, 64, 128, 256, 512, 1022],
    10: [4, 8, 16, 32, 64, 128, 256, 512, 1024],
}
"""Upper bounds on B(delta, t) for t = 2..10, as published."""


def dihedral_informed_sets(delta: int, k: int) -> set:
    """Informed set after round k <= delta of the dihedral family broadcast."""
    n = 2**delta - 1
    return {(a, i % n) for a in (0, 1) for i in range(2 ** (k - 1))}


def cartesian(xs, r):
    return list(product(xs, repeat=r))
