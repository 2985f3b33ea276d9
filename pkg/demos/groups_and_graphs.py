"""
Cayley graphs from small groups
===============================
"""

from broadcastnet import build_cayley
from broadcastnet.groups import parse_elements, parse_group_spec, validate_generators
from broadcastnet.cayley import diameter, export_graph

# a group is named by a short spec string
G = parse_group_spec("semidirect(12,13,2)")
print(G.text, "has order", G.order)

# elements are tuples; the twisted product shows up in the second slot
a, b = parse_elements(G, "(7,1),(6,0)")
print("(7,1)*(6,0) =", G.format(G.mul(a, b)))
print("inverse of (7,1) =", G.format(G.inv(a)))

# a generator set must be inverse-closed and generate the group
S = parse_elements(G, "(7,1),(5,7),(6,0)")
print(validate_generators(G, S))

cg = build_cayley(G, S)
print("vertices", cg.order, "degree", cg.degree, "diameter", diameter(cg.graph))

# the neighbour table is a plain numpy array: row = vertex, column = generator
print(cg.table[:4])

# small graphs export as edge lists or DOT
small = build_cayley(parse_group_spec("cyclic(6)"), [1, 5])
print(export_graph(small.graph, "dot"))
