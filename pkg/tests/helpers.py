"""Shared test-only structures that don't belong in the package corpus."""
from itertools import combinations

from qcat.lattice import powerset_lattice, subset_name
from qcat.quantaloid import FiniteQuantaloid


def left_zero_quantale() -> FiniteQuantaloid:
    """Subsets of the unit-extended left-zero semigroup (a∘b = a, b∘a = b):
    the smallest noncommutative base in the suite."""
    atoms = ["e", "a", "b"]
    toset = {subset_name(frozenset(s)): frozenset(s)
             for r in range(4) for s in combinations(atoms, r)}
    mul = {("e", x): x for x in atoms}
    mul.update({(x, "e"): x for x in atoms})
    mul.update({("a", "a"): "a", ("a", "b"): "a",
                ("b", "a"): "b", ("b", "b"): "b"})
    lat = powerset_lattice(atoms)

    def prod(gn, fn):
        return subset_name({mul[(u, v)] for u in toset[gn] for v in toset[fn]})

    comp = {("*", "*", "*"): {(g, f): prod(g, f)
                              for g in lat.elements for f in lat.elements}}
    return FiniteQuantaloid(["*"], {("*", "*"): lat}, comp, {"*": "e"}, None,
                            name="leftzero")
