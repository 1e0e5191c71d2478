"""Finite lattices given by explicit element lists and order pairs.

Nothing is inferred: the order relation is exactly the set of pairs
supplied (so reflexivity itself is a checkable law, not an assumption).
A finite poset with a bottom element and all binary joins is a complete
lattice; meets are computed as joins of lower bounds.
"""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import StructureError
from .report import PropertyReport


class HomLattice:
    __slots__ = ("elements", "pairs", "_up", "_down", "_join2", "_meet2",
                 "_bottom", "_top", "_eset")

    def __init__(self, elements: Sequence[str], leq: Iterable[tuple[str, str]]):
        self.elements = tuple(elements)
        self._eset = frozenset(self.elements)
        if len(self._eset) != len(self.elements):
            raise StructureError(f"duplicate lattice elements: {self.elements}")
        self.pairs = frozenset((str(a), str(b)) for a, b in leq)
        for a, b in self.pairs:
            if a not in self._eset or b not in self._eset:
                raise StructureError(f"order pair ({a!r}, {b!r}) mentions unknown element")
        self._up = {a: frozenset(b for b in self.elements if (a, b) in self.pairs)
                    for a in self.elements}
        self._down = {b: frozenset(a for a in self.elements if (a, b) in self.pairs)
                      for b in self.elements}
        self._join2: dict[tuple[str, str], str] = {}
        self._meet2: dict[tuple[str, str], str] = {}
        self._bottom: Optional[str] = None
        self._top: Optional[str] = None

    # -- basic order -------------------------------------------------------
    def __contains__(self, e: str) -> bool:
        return e in self._eset

    def check_element(self, e: str) -> str:
        if e not in self._eset:
            raise StructureError(f"element {e!r} not in lattice {sorted(self._eset)}")
        return e

    def le(self, a: str, b: str) -> bool:
        return (a, b) in self.pairs

    def up(self, a: str) -> frozenset[str]:
        return self._up[a]

    def down(self, b: str) -> frozenset[str]:
        return self._down[b]

    # -- law checks ---------------------------------------------------------
    def poset_report(self) -> PropertyReport:
        rep = PropertyReport()
        refl = next((a for a in self.elements if not self.le(a, a)), None)
        rep.set("reflexive", refl is None, refl)
        anti = next(((a, b) for (a, b) in self.pairs
                     if a != b and (b, a) in self.pairs), None)
        rep.set("antisymmetric", anti is None, anti)
        trans = None
        for (a, b) in self.pairs:
            for c in self._up[b]:
                if (a, c) not in self.pairs:
                    trans = (a, b, c)
                    break
            if trans:
                break
        rep.set("transitive", trans is None, trans)
        return rep

    def lattice_report(self) -> PropertyReport:
        """Assumes poset laws hold; checks bottom + all binary joins exist."""
        rep = PropertyReport()
        bottoms = [a for a in self.elements if len(self._up[a]) == len(self.elements)]
        rep.set("has-bottom", len(bottoms) == 1,
                tuple(bottoms) if len(bottoms) != 1 else None)
        missing = None
        for a in self.elements:
            for b in self.elements:
                if self._lub(a, b) is None:
                    missing = (a, b)
                    break
            if missing:
                break
        rep.set("binary-joins", missing is None, missing)
        return rep

    def is_distributive(self) -> Optional[tuple[str, str, str]]:
        """None if distributive, else a witness triple (a, b, c) with
        a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c)."""
        for a in self.elements:
            for b in self.elements:
                for c in self.elements:
                    lhs = self.meet2(a, self.join2(b, c))
                    rhs = self.join2(self.meet2(a, b), self.meet2(a, c))
                    if lhs != rhs:
                        return (a, b, c)
        return None

    # -- joins and meets ----------------------------------------------------
    def _lub(self, a: str, b: str) -> Optional[str]:
        ub = self._up[a] & self._up[b]
        for u in ub:
            if all((u, v) in self.pairs for v in ub):
                return u
        return None

    def join2(self, a: str, b: str) -> str:
        key = (a, b)
        got = self._join2.get(key)
        if got is None:
            got = self._lub(a, b)
            if got is None:
                raise StructureError(f"no least upper bound for {a!r}, {b!r}")
            self._join2[key] = got
        return got

    def meet2(self, a: str, b: str) -> str:
        key = (a, b)
        got = self._meet2.get(key)
        if got is None:
            got = self.meet([a, b])
            self._meet2[key] = got
        return got

    def bottom(self) -> str:
        if self._bottom is None:
            for a in self.elements:
                if all((a, b) in self.pairs for b in self.elements):
                    self._bottom = a
                    break
            else:
                raise StructureError("lattice has no bottom element")
        return self._bottom

    def top(self) -> str:
        if self._top is None:
            for a in self.elements:
                if all((b, a) in self.pairs for b in self.elements):
                    self._top = a
                    break
            else:
                raise StructureError("lattice has no top element")
        return self._top

    def join(self, xs: Iterable[str]) -> str:
        """Supremum; the empty join is the bottom element."""
        acc = None
        for x in xs:
            self.check_element(x)
            acc = x if acc is None else self.join2(acc, x)
        return self.bottom() if acc is None else acc

    def meet(self, xs: Iterable[str]) -> str:
        """Infimum, computed as the join of common lower bounds; the empty
        meet is the top element."""
        xs = list(xs)
        for x in xs:
            self.check_element(x)
        lower = [a for a in self.elements if all((a, x) in self.pairs for x in xs)]
        return self.join(lower)

    # -- structural comparison ----------------------------------------------
    def same_lattice(self, other: "HomLattice") -> bool:
        return self._eset == other._eset and self.pairs == other.pairs

    def __eq__(self, other) -> bool:
        return isinstance(other, HomLattice) and self.same_lattice(other)

    def __hash__(self) -> int:
        return hash((self._eset, self.pairs))

    def __repr__(self) -> str:
        return f"HomLattice({list(self.elements)!r})"


def chain_lattice(elements: Sequence[str]) -> HomLattice:
    """Total order in the listed direction: elements[0] is the bottom."""
    els = list(elements)
    pairs = [(els[i], els[j]) for i in range(len(els)) for j in range(i, len(els))]
    return HomLattice(els, pairs)


def powerset_lattice(atoms: Sequence[str], name=None) -> HomLattice:
    """Subset lattice of the given atoms, elements named by sorted join
    with '+' ('0' for the empty set)."""
    from itertools import combinations

    subsets = []
    for k in range(len(atoms) + 1):
        for combo in combinations(sorted(atoms), k):
            subsets.append(frozenset(combo))
    namer = name or subset_name
    els = [namer(s) for s in subsets]
    pairs = [(namer(a), namer(b)) for a in subsets for b in subsets if a <= b]
    return HomLattice(els, pairs)


def subset_name(s: frozenset[str]) -> str:
    return "+".join(sorted(s)) if s else "0"
