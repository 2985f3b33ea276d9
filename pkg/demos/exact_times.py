"""
Exact broadcast times of small graphs
=====================================
"""

import math

from broadcastnet.cayley import named_graph, product_with_k2
from broadcastnet.exact import (
    exact_broadcast_time,
    exact_broadcast_time_from,
    greedy_upper_bound,
    log2_lower_bound,
)

# the Petersen graph meets the log2 lower bound: ceil(log2 10) = 4
g = named_graph("petersen")
res = exact_broadcast_time_from(g, 0)
print("b(petersen) =", res.rounds, "after", res.nodes_expanded, "expanded states")
print(res.witness.export())

# cycles: ceil(n / 2)
for n in range(3, 13):
    b = exact_broadcast_time(named_graph(f"cycle({n})"))
    print(f"C{n}: b = {b}", "ok" if b == math.ceil(n / 2) else "MISMATCH")

# taking the product with K2 costs at most one extra round
for name in ("cycle(4)", "cycle(5)", "petersen"):
    h = named_graph(name)
    print(name, exact_broadcast_time(h), "->", exact_broadcast_time(product_with_k2(h)))

# lower bound, exact value and greedy schedule side by side
for name in ("star(4)", "complete(6)", "cycle(9)", "petersen"):
    h = named_graph(name)
    print(f"{name:12s} {log2_lower_bound(h)} <= {exact_broadcast_time(h)} <= {greedy_upper_bound(h)}")
