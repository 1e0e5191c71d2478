"""Finite-lattice layer: order closure, joins/meets against brute force,
and the shape reports."""
from itertools import combinations

import pytest

from qcat.errors import StructureError
from qcat.lattice import HomLattice, chain_lattice, powerset_lattice, subset_name


def test_chain_basics():
    lat = chain_lattice(["0", "1", "2"])
    assert lat.bottom() == "0" and lat.top() == "2"
    assert lat.le("0", "2") and not lat.le("2", "1")
    assert lat.join2("0", "1") == "1"
    assert lat.meet2("1", "2") == "1"
    assert lat.join([]) == "0" and lat.meet([]) == "2"


def test_powerset_is_boolean():
    lat = powerset_lattice(["p", "q"])
    assert set(lat.elements) == {"0", "p", "q", "p+q"}
    assert lat.join2("p", "q") == "p+q"
    assert lat.meet2("p", "p+q") == "p"
    assert lat.meet2("p", "q") == "0"


def test_subset_name():
    assert subset_name(frozenset()) == "0"
    assert subset_name(frozenset({"b", "a"})) == "a+b"


def test_join_meet_against_bruteforce():
    lat = powerset_lattice(["x", "y", "z"])
    els = lat.elements
    for r in range(len(els) + 1):
        for xs in combinations(els, r):
            j = lat.join(xs)
            # least upper bound, the long way
            ubs = [u for u in els if all(lat.le(x, u) for x in xs)]
            assert j in ubs
            assert all(lat.le(j, u) for u in ubs)


def test_duplicate_elements_rejected():
    with pytest.raises(StructureError):
        HomLattice(["a", "a"], [("a", "a")])


def test_poset_report_catches_broken_antisymmetry():
    lat = HomLattice(["a", "b"], [("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")])
    rep = lat.poset_report()
    assert not rep.flags["antisymmetric"]


def test_lattice_report_catches_missing_joins():
    # two incomparable points, no top: not a lattice
    lat = HomLattice(["a", "b"], [("a", "a"), ("b", "b")])
    rep = lat.lattice_report()
    assert not rep.ok()


def test_pentagon_is_not_distributive():
    # N5: 0 < a < c < 1 and 0 < b < 1 with b incomparable to a, c
    pairs = [("0", x) for x in "0abc1"] + [(x, "1") for x in "0abc1"]
    pairs += [("a", "a"), ("b", "b"), ("c", "c"), ("a", "c")]
    n5 = HomLattice(list("0abc1"), pairs)
    assert n5.lattice_report().ok()
    assert n5.is_distributive() is not None


def test_chain_is_distributive():
    assert chain_lattice(["0", "1", "2", "3"]).is_distributive() is None


def test_same_lattice():
    a = chain_lattice(["0", "1"])
    b = chain_lattice(["0", "1"])
    c = chain_lattice(["1", "0"])
    assert a.same_lattice(b)
    assert not a.same_lattice(c)
