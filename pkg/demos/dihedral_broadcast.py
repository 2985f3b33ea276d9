"""
Broadcasting on the dihedral family
===================================
"""

from broadcastnet import build_cayley, simulate, validate_trace
from broadcastnet.bounds import moore_bound
from broadcastnet.broadcast import theorem1_scheme
from broadcastnet.families import dihedral_family, verify_family_witness

# delta = 3: seven rotations, three reflections as generators
w = dihedral_family(3)
print(w.group.text, w.generator_text)
print("scheme:", w.scheme_text)

cg = build_cayley(w.group, w.generators)
trace = simulate(cg, theorem1_scheme(3))

# every round, each informed vertex calls along the same generator
for r, calls in enumerate(trace.rounds, 1):
    print(f"round {r}:", ", ".join(f"{cg.element(u)}->{cg.element(v)}" for u, v in calls))

# the informed set doubles until the last round
print([len(s) for s in trace.informed_sets()])
print("valid:", validate_trace(cg.graph, trace).valid)

# order meets the upper bound at (delta, delta + 1) for every delta checked
for delta in range(2, 11):
    rep = verify_family_witness(dihedral_family(delta))
    print(rep.summary(), "| M =", moore_bound(delta, delta + 1))
