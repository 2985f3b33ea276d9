import dataclasses

import pytest

from broadcastnet.bounds import moore_bound
from broadcastnet.broadcast import simulate
from broadcastnet.cayley import build_cayley
from broadcastnet.families import (
    cycle_family,
    dihedral_family,
    hypercube_family,
    product_witness,
    verify_family_witness,
)
from broadcastnet.groups import Dihedral, GroupError

from oracles import dihedral_informed_sets


def test_dihedral_examples():
    w = dihedral_family(3)
    assert w.group == Dihedral(7) and len(w.generators) == 3
    assert (w.expected_order, w.expected_round) == (14, 4)
    w = dihedral_family(4)
    assert w.group == Dihedral(15) and w.expected_order == 30 and w.expected_round == 5
    w = dihedral_family(2)
    assert w.group == Dihedral(3) and w.generators == ((1, 0), (1, 1))
    assert (w.expected_order, w.expected_round) == (6, 3)


@pytest.mark.parametrize("delta", range(2, 11))
def test_dihedral_family_verifies(delta):
    w = dihedral_family(delta)
    rep = verify_family_witness(w)
    assert rep.ok, rep.failures()
    assert rep.completion_round == delta + 1
    assert w.expected_order == moore_bound(delta, delta + 1) == 2 * (2**delta - 1)
    G = w.group
    assert all(G.mul(s, s) == G.identity() for s in w.generators)


@pytest.mark.parametrize("delta", range(2, 11))
def test_dihedral_informed_sets(delta):
    w = dihedral_family(delta)
    cg = build_cayley(w.group, w.generators)
    tr = simulate(cg, w.scheme)
    sets = tr.informed_sets()
    for k in range(1, delta + 1):
        assert {cg.element(v) for v in sets[k]} == dihedral_informed_sets(delta, k)
    assert len(sets[delta + 1]) == cg.order


def test_dihedral_10_order():
    rep = verify_family_witness(dihedral_family(10))
    assert rep.witness.expected_order == 2046 and rep.completion_round == 11 and rep.ok


def test_tampered_witness_fails_degree():
    w = dihedral_family(3)
    bad = dataclasses.replace(w, generators=w.generators[:2])
    rep = verify_family_witness(bad)
    assert not rep.ok
    assert "degree" in {c.name for c in rep.failures()}


def test_hypercube_examples():
    rep = verify_family_witness(hypercube_family(3))
    assert rep.ok and rep.witness.expected_order == 8 and rep.completion_round == 3
    rep = verify_family_witness(hypercube_family(1))
    assert rep.ok and rep.witness.expected_order == 2 and rep.completion_round == 1
    rep = verify_family_witness(hypercube_family(9))
    assert rep.ok and rep.witness.expected_order == 512 and rep.completion_round == 9


@pytest.mark.parametrize("delta", range(1, 11))
def test_hypercube_family_optimal(delta):
    rep = verify_family_witness(hypercube_family(delta))
    assert rep.ok
    assert 2**delta == moore_bound(delta, delta)


@pytest.mark.parametrize("t", range(2, 11))
def test_cycle_family(t):
    rep = verify_family_witness(cycle_family(t))
    assert rep.ok and rep.completion_round == t


@pytest.mark.parametrize("make", [
    lambda: hypercube_family(3), lambda: dihedral_family(3), lambda: cycle_family(4),
    lambda: product_witness(cycle_family(3)), lambda: product_witness(dihedral_family(2)),
])
def test_product_witness_verifies(make):
    w = make()
    lifted = product_witness(w)
    rep = verify_family_witness(lifted)
    assert rep.ok, rep.failures()
    assert lifted.expected_order == 2 * w.expected_order
    assert (lifted.delta, lifted.t) == (w.delta + 1, w.t + 1)


def test_limits():
    with pytest.raises(GroupError):
        dihedral_family(12, limit=4000)
    with pytest.raises(ValueError):
        dihedral_family(1)


def test_summary_text():
    assert verify_family_witness(dihedral_family(5)).summary() == \
        "dihedral(31): order 62 = M(5,6), completes in 6 - OPTIMAL"
