"""
Upper bounds on broadcast network size
======================================
"""

from broadcastnet.bounds import bound_table, f, moore_bound

# f(d, t): vertices reachable in t rounds when each vertex places at most d calls
print([f(2, t) for t in range(8)])

# the bound doubles f(d - 1, t - 1)
print("M(3,4) =", moore_bound(3, 4), " M(5,8) =", moore_bound(5, 8))

tab = bound_table(10, 10)
print(tab.render("pretty"))

# the table is a numpy object array, so exact big integers survive
big = bound_table(40, 60)
print(big.values.dtype, big[40, 60])
