"""Cayley-graph constructions of broadcast networks under the telephone model."""

from .bounds import bound_table, f, moore_bound, product_lower_bound
from .broadcast import (
    FixedOrder,
    ReceiptPermutations,
    RoundGenerators,
    SimulationTrace,
    broadcast_time_under_scheme,
    simulate,
    theorem1_scheme,
    validate_trace,
)
from .cayley import CayleyGraph, Graph, build_cayley, diameter, export_graph, hypercube, named_graph, product_with_k2
from .exact import exact_broadcast_time, exact_broadcast_time_from, greedy_upper_bound, log2_lower_bound
from .families import dihedral_family, hypercube_family, verify_family_witness
from .groups import (
    enumerate_elements,
    identity,
    inverse,
    multiply,
    parse_elements,
    parse_group_spec,
    validate_generators,
)

__version__ = "0.1.0"
