"""The shared example corpus: small quantaloids, enriched categories over
them, and partial metric spaces, exactly as the test suite and the CLI
`fixtures` command use them.

All builders are cached and their results are treated as immutable.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Dict, List, Tuple

from .category import EnrichedCategory, EnrichedFunctor, full_subcategory, unit_category
from .diagonals import diagonal_quantaloid
from .errors import StructureError
from .extval import INF
from .lattice import HomLattice, chain_lattice, powerset_lattice, subset_name
from .pms import PartialMetricSpace, terminal_sample, word_space
from .quantaloid import FiniteQuantaloid, truncated_addition_chain

O = "*"


def _quantale(lat: HomLattice, prod, unit: str, name: str) -> FiniteQuantaloid:
    """One-object quantaloid with the identity involution (all corpus
    quantales are commutative, for which the identity is legitimately
    order- and composition-reversing)."""
    comp = {(O, O, O): {(g, f): prod(g, f)
                        for g in lat.elements for f in lat.elements}}
    inv = {(O, O): {e: e for e in lat.elements}}
    return FiniteQuantaloid([O], {(O, O): lat}, comp, {O: unit}, inv, name=name)


@lru_cache(maxsize=None)
def q2() -> FiniteQuantaloid:
    """Two-element chain, composition = meet, unit = top."""
    lat = chain_lattice(["0", "1"])
    return _quantale(lat, lat.meet2, "1", "q2")


@lru_cache(maxsize=None)
def c3() -> FiniteQuantaloid:
    """Three-element chain locale."""
    lat = chain_lattice(["0", "1", "2"])
    return _quantale(lat, lat.meet2, "2", "c3")


@lru_cache(maxsize=None)
def diamond() -> FiniteQuantaloid:
    """Four-element Boolean locale 0 < a,b < 1; the top is the join of
    the two incomparable middles, so identities are not join-irreducible."""
    els = ["0", "a", "b", "1"]
    pairs = [(e, e) for e in els] + [("0", "a"), ("0", "b"), ("0", "1"),
                                     ("a", "1"), ("b", "1")]
    lat = HomLattice(els, pairs)
    return _quantale(lat, lat.meet2, "1", "diamond")


def _renamed_chain(n: int, name: str) -> FiniteQuantaloid:
    q = truncated_addition_chain(n)
    q.name = name
    return q


@lru_cache(maxsize=None)
def l2() -> FiniteQuantaloid:
    return _renamed_chain(1, "l2")


@lru_cache(maxsize=None)
def l3() -> FiniteQuantaloid:
    return _renamed_chain(2, "l3")


@lru_cache(maxsize=None)
def l4() -> FiniteQuantaloid:
    return _renamed_chain(3, "l4")


def _group_quantale(atoms: List[str], mul: Dict[Tuple[str, str], str],
                    name: str) -> FiniteQuantaloid:
    lat = powerset_lattice(atoms)
    toset = {subset_name(s): frozenset(s)
             for r in range(len(atoms) + 1)
             for s in _subsets(atoms, r)}

    def prod(gn: str, fn: str) -> str:
        return subset_name({mul[(s, t)] for s in toset[gn] for t in toset[fn]})

    return _quantale(lat, prod, "e", name)


def _subsets(atoms: List[str], r: int):
    from itertools import combinations
    return combinations(atoms, r)


@lru_cache(maxsize=None)
def pz2() -> FiniteQuantaloid:
    """Subsets of the two-element group under complex product."""
    mul = {("e", "e"): "e", ("e", "g"): "g", ("g", "e"): "g", ("g", "g"): "e"}
    return _group_quantale(["e", "g"], mul, "pz2")


@lru_cache(maxsize=None)
def pz3() -> FiniteQuantaloid:
    """Subsets of the three-element group; gg stands for the square of g."""
    names = {0: "e", 1: "g", 2: "gg"}
    mul = {(names[a], names[b]): names[(a + b) % 3]
           for a in range(3) for b in range(3)}
    return _group_quantale(["e", "g", "gg"], mul, "pz3")


@lru_cache(maxsize=None)
def dl3() -> FiniteQuantaloid:
    return diagonal_quantaloid(l3())


def corpus_quantaloids() -> List[FiniteQuantaloid]:
    return [q2(), c3(), diamond(), l2(), l3(), l4(), pz2(), pz3()]


# ---------------------------------------------------------------------------
# Enriched categories
# ---------------------------------------------------------------------------

def _lab(e: str) -> str:
    """D(chain) object for a chain element."""
    return f"{O}->{O}:{e}"


@lru_cache(maxsize=None)
def cat_l3_pair() -> EnrichedCategory:
    """Two points at asymmetric distance over the 3-element chain: a
    strict order (skeletal; x below y but not conversely)."""
    return EnrichedCategory(l3(), ["x", "y"], {"x": O, "y": O},
                            {("x", "x"): "0", ("y", "y"): "0",
                             ("x", "y"): "0", ("y", "x"): "2"},
                            name="l3-pair")


@lru_cache(maxsize=None)
def cat_l3_bad() -> EnrichedCategory:
    """Same shape but the self-hom misses the unit (identity-law breaker)."""
    return EnrichedCategory(l3(), ["x", "y"], {"x": O, "y": O},
                            {("x", "x"): "1", ("y", "y"): "0",
                             ("x", "y"): "0", ("y", "x"): "2"},
                            name="l3-bad")


@lru_cache(maxsize=None)
def pz3cat() -> EnrichedCategory:
    """The closure/symmetrization separating example: one-step homs are
    the singletons {g} and {gg}, whose product contains the unit even
    though the two singletons never meet their opposites."""
    return EnrichedCategory(pz3(), ["i", "x"], {"i": O, "x": O},
                            {("i", "i"): "e", ("x", "x"): "e",
                             ("i", "x"): "g", ("x", "i"): "gg"},
                            name="pz3cat")


@lru_cache(maxsize=None)
def diamond3() -> EnrichedCategory:
    """Three objects over the diamond locale: y is glued to {x, z}
    jointly (a join reaching the top) but to neither alone."""
    hom = {(a, b): "1" for a in "xyz" for b in "xyz"}
    hom[("x", "y")] = "a"
    hom[("y", "z")] = "b"
    hom[("x", "z")] = "0"
    return EnrichedCategory(diamond(), ["x", "y", "z"],
                            {o: O for o in "xyz"}, hom, name="diamond3")


@lru_cache(maxsize=None)
def cat_q2_iso() -> EnrichedCategory:
    """Two isomorphic points (unit homs everywhere): not skeletal."""
    return EnrichedCategory(q2(), ["x", "y"], {"x": O, "y": O},
                            {(a, b): "1" for a in "xy" for b in "xy"},
                            name="q2-iso")


@lru_cache(maxsize=None)
def cat_q2_pair() -> EnrichedCategory:
    """Skeletal order x < y over the two-element chain."""
    return EnrichedCategory(q2(), ["x", "y"], {"x": O, "y": O},
                            {("x", "x"): "1", ("y", "y"): "1",
                             ("x", "y"): "1", ("y", "x"): "0"},
                            name="q2-pair")


@lru_cache(maxsize=None)
def cat_c3_pair() -> EnrichedCategory:
    return EnrichedCategory(c3(), ["x", "y"], {"x": O, "y": O},
                            {("x", "x"): "2", ("y", "y"): "2",
                             ("x", "y"): "1", ("y", "x"): "0"},
                            name="c3-pair")


@lru_cache(maxsize=None)
def cat_dl3_unit0() -> EnrichedCategory:
    c = unit_category(dl3(), _lab("0"))
    c.name = "dl3-unit0"
    return c


@lru_cache(maxsize=None)
def cat_dl3_unit2() -> EnrichedCategory:
    c = unit_category(dl3(), _lab("2"))
    c.name = "dl3-unit2"
    return c


@lru_cache(maxsize=None)
def cat_dl3_pair() -> EnrichedCategory:
    """The two-point strict order, housed over the diagonal quantaloid."""
    t = _lab("0")
    return EnrichedCategory(dl3(), ["x", "y"], {"x": t, "y": t},
                            {("x", "x"): "0", ("y", "y"): "0",
                             ("x", "y"): "0", ("y", "x"): "2"},
                            name="dl3-pair")


@lru_cache(maxsize=None)
def cat_dl3_mixed() -> EnrichedCategory:
    """One ordinary point and one point of the degenerate (zero) type;
    all homs touching the degenerate type are forced."""
    return EnrichedCategory(dl3(), ["u", "z"],
                            {"u": _lab("0"), "z": _lab("2")},
                            {("u", "u"): "0", ("z", "z"): "2",
                             ("u", "z"): "2", ("z", "u"): "2"},
                            name="dl3-mixed")


def test_categories() -> List[EnrichedCategory]:
    """Every (valid) category fixture; all have at most 4 objects."""
    return [cat_l3_pair(), pz3cat(), diamond3(), cat_q2_iso(),
            cat_q2_pair(), cat_c3_pair(), cat_dl3_unit0(), cat_dl3_unit2(),
            cat_dl3_pair(), cat_dl3_mixed()]


def corpus_functors() -> List[EnrichedFunctor]:
    out = [EnrichedFunctor(c, c, {o: o for o in c.objs}, name=f"id[{c.name}]")
           for c in test_categories()]
    out.append(EnrichedFunctor(full_subcategory(pz3cat(), ["i"]), pz3cat(),
                               {"i": "i"}, name="include-i"))
    out.append(EnrichedFunctor(cat_l3_pair(), cat_l3_pair(),
                               {"x": "y", "y": "y"}, name="collapse"))
    out.append(EnrichedFunctor(cat_q2_pair(), cat_q2_iso(),
                               {"x": "x", "y": "y"}, name="order-to-iso"))
    return out


# ---------------------------------------------------------------------------
# Partial metric spaces
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def twopoint() -> PartialMetricSpace:
    """Ordinary two-point metric space: zero weights, distance one."""
    d = {("a", "a"): 0, ("b", "b"): 0, ("a", "b"): 1, ("b", "a"): 1}
    return PartialMetricSpace(["a", "b"], d, name="twopoint")


@lru_cache(maxsize=None)
def all1() -> PartialMetricSpace:
    """Every distance (weights included) equal to one: the two points
    present the same limit behaviour and collapse under completion."""
    d = {(a, b): 1 for a in "ab" for b in "ab"}
    return PartialMetricSpace(["a", "b"], d, name="all1")


@lru_cache(maxsize=None)
def ab_space() -> PartialMetricSpace:
    """A weight-0 and a weight-1 point at distance one."""
    d = {("a", "a"): 0, ("b", "b"): 1, ("a", "b"): 1, ("b", "a"): 1}
    return PartialMetricSpace(["a", "b"], d, name="ab")


@lru_cache(maxsize=None)
def one_point() -> PartialMetricSpace:
    return PartialMetricSpace(["a"], {("a", "a"): 0}, name="point")


@lru_cache(maxsize=None)
def empty_space() -> PartialMetricSpace:
    return PartialMetricSpace([], {}, name="empty")


@lru_cache(maxsize=None)
def inf_singleton() -> PartialMetricSpace:
    return PartialMetricSpace(["a"], {("a", "a"): INF}, name="inf-point")


def pms_fixtures() -> List[PartialMetricSpace]:
    return [twopoint(), all1(), ab_space(), one_point()]


@lru_cache(maxsize=None)
def wordspace(k: int) -> PartialMetricSpace:
    return word_space(("a", "b"), k)


@lru_cache(maxsize=None)
def terminal(k: int) -> PartialMetricSpace:
    if k < 1:
        raise StructureError("terminal sample size must be positive")
    return terminal_sample([str(i) for i in range(k)] + ["inf"])
