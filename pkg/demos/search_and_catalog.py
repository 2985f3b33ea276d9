"""
Searching for witnesses and keeping a catalog
=============================================
"""

import tempfile
from pathlib import Path

from broadcastnet.catalog import catalog_update, catalog_verify, load_catalog, render_catalog, seed_catalog
from broadcastnet.groups import Semidirect, parse_elements
from broadcastnet.search import find_permutation_scheme, search

# dihedral groups, largest first, until one finishes in 4 rounds with degree 3
res = search("dihedral", 3, 4, budget=10_000, seed=20240101)
print(res.evaluated, "candidates;", "best order", res.best.order, "found at", res.found_at[0])
print(res.best.to_json())

# order 156 with degree 3: sample per-receipt-time generator orders
G = Semidirect(12, 13, 2)
S = parse_elements(G, "(7,1),(5,7),(6,0)")
scheme, samples = find_permutation_scheme(G, S, 10, seed=0)
print(f"after {samples} samples:", scheme.text(G))

path = Path(tempfile.mkdtemp()) / "catalog.jsonl"
seed_catalog(path, max_delta=8, max_time=10)
print(catalog_update(path, res.best), "(an equal record does not replace the stored one)")

report = catalog_verify(path)
print(sum(r.ok for r in report.reports), "of", len(report.reports), "records replay")
print(render_catalog(load_catalog(path)))
