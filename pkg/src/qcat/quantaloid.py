"""Finite quantaloids as explicit composition tables.

A quantaloid here is: a finite set of objects, a finite lattice of arrows
for every ordered pair of objects, a composition table for every triple,
a chosen identity for every object, and optionally an involution.

For f: A -> B and g: B -> C the composite g.f: A -> C is looked up under
key (g, f) in ``comp[(A, B, C)]``.  Residuals are brute-force joins:

    lifting(g, d)   = largest x with g.x <= d     (d: A -> C, x: A -> B)
    extension(d, f) = largest y with y.f <= d     (d: A -> C, y: B -> C)

so ``g.x <= d  iff  x <= lifting(g, d)`` and ``y.f <= d  iff
y <= extension(d, f)`` once the quantaloid laws hold.  Empty joins are
bottom, empty meets are top.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import PreconditionError, StructureError
from .lattice import HomLattice
from .report import PropertyReport

CompKey = Tuple[str, str, str]
CompTable = Dict[Tuple[str, str], str]


@dataclass(frozen=True)
class Arrow:
    src: str
    tgt: str
    elem: str

    def label(self) -> str:
        return f"{self.src}->{self.tgt}:{self.elem}"

    def __repr__(self) -> str:
        return self.label()


class FiniteQuantaloid:
    """Composition tables over a finite object set.

    homs[(A, B)]            lattice of arrows A -> B
    comp[(A, B, C)][(g, f)] composite in Q(A, C) of g in Q(B, C) after
                            f in Q(A, B)
    ids[A]                  element of Q(A, A)
    inv[(A, B)][f]          element of Q(B, A); optional
    """

    def __init__(self,
                 objects: Sequence[str],
                 homs: Dict[Tuple[str, str], HomLattice],
                 comp: Dict[CompKey, CompTable],
                 ids: Dict[str, str],
                 inv: Optional[Dict[Tuple[str, str], Dict[str, str]]] = None,
                 name: str = ""):
        self.name = name
        self.objects = tuple(str(o) for o in objects)
        oset = set(self.objects)
        if len(oset) != len(self.objects):
            raise StructureError(f"duplicate objects: {self.objects}")
        self.homs = dict(homs)
        self.comp = {k: dict(v) for k, v in comp.items()}
        self.ids = dict(ids)
        self.inv = None if inv is None else {k: dict(v) for k, v in inv.items()}
        self._lift: Dict[Tuple[Arrow, Arrow], Arrow] = {}
        self._ext: Dict[Tuple[Arrow, Arrow], Arrow] = {}
        self._check_shape()

    # -- shape (well-formedness, not laws) -----------------------------------
    def _check_shape(self) -> None:
        want_pairs = set(product(self.objects, self.objects))
        if set(self.homs) != want_pairs:
            missing = want_pairs - set(self.homs)
            extra = set(self.homs) - want_pairs
            raise StructureError(
                f"hom lattices mismatch (missing {sorted(missing)}, extra {sorted(extra)})")
        want_triples = set(product(self.objects, repeat=3))
        if set(self.comp) != want_triples:
            raise StructureError("composition tables must cover exactly all object triples")
        for (a, b, c), table in self.comp.items():
            lab, lbc, lac = self.homs[(a, b)], self.homs[(b, c)], self.homs[(a, c)]
            want = set(product(lbc.elements, lab.elements))
            if set(table) != want:
                raise StructureError(
                    f"composition table for ({a},{b},{c}) must cover all (g, f) pairs")
            for (g, f), r in table.items():
                if r not in lac:
                    raise StructureError(
                        f"composite {g}.{f} = {r!r} is not an element of hom({a},{c})")
        if set(self.ids) != set(self.objects):
            raise StructureError("identity table must name exactly the objects")
        for a, e in self.ids.items():
            if e not in self.homs[(a, a)]:
                raise StructureError(f"identity {e!r} is not an element of hom({a},{a})")
        if self.inv is not None:
            if set(self.inv) != want_pairs:
                raise StructureError("involution must cover exactly all object pairs")
            for (a, b), m in self.inv.items():
                if set(m) != set(self.homs[(a, b)].elements):
                    raise StructureError(f"involution on hom({a},{b}) must be total")
                for f, g in m.items():
                    if g not in self.homs[(b, a)]:
                        raise StructureError(
                            f"involution sends {f!r} outside hom({b},{a})")

    # -- arrows ---------------------------------------------------------------
    def hom(self, a: str, b: str) -> HomLattice:
        got = self.homs.get((a, b))
        if got is None:
            raise StructureError(f"no hom ({a!r}, {b!r}); objects are {list(self.objects)}")
        return got

    def arrow(self, src: str, tgt: str, elem: str) -> Arrow:
        self.hom(src, tgt).check_element(elem)
        return Arrow(src, tgt, elem)

    def arrows(self, a: str, b: str) -> List[Arrow]:
        return [Arrow(a, b, e) for e in self.hom(a, b).elements]

    def all_arrows(self) -> Iterable[Arrow]:
        for a in self.objects:
            for b in self.objects:
                yield from self.arrows(a, b)

    def identity(self, a: str) -> Arrow:
        return Arrow(a, a, self.ids[a])

    # -- order and composition ------------------------------------------------
    def le(self, f: Arrow, g: Arrow) -> bool:
        if (f.src, f.tgt) != (g.src, g.tgt):
            raise StructureError(f"cannot compare {f} with {g}")
        return self.hom(f.src, f.tgt).le(f.elem, g.elem)

    def compose(self, g: Arrow, f: Arrow) -> Arrow:
        if f.tgt != g.src:
            raise StructureError(f"cannot compose {g} after {f}")
        r = self.comp[(f.src, f.tgt, g.tgt)][(g.elem, f.elem)]
        return Arrow(f.src, g.tgt, r)

    def bottom(self, a: str, b: str) -> Arrow:
        return Arrow(a, b, self.hom(a, b).bottom())

    def top(self, a: str, b: str) -> Arrow:
        return Arrow(a, b, self.hom(a, b).top())

    def join(self, arrows: Iterable[Arrow], src: Optional[str] = None,
             tgt: Optional[str] = None) -> Arrow:
        arrows = list(arrows)
        if not arrows:
            if src is None or tgt is None:
                raise StructureError("empty join needs explicit endpoints")
            return self.bottom(src, tgt)
        a, b = arrows[0].src, arrows[0].tgt
        for f in arrows:
            if (f.src, f.tgt) != (a, b):
                raise StructureError(f"join of arrows with mixed endpoints: {arrows}")
        return Arrow(a, b, self.hom(a, b).join(f.elem for f in arrows))

    def meet(self, arrows: Iterable[Arrow], src: Optional[str] = None,
             tgt: Optional[str] = None) -> Arrow:
        arrows = list(arrows)
        if not arrows:
            if src is None or tgt is None:
                raise StructureError("empty meet needs explicit endpoints")
            return self.top(src, tgt)
        a, b = arrows[0].src, arrows[0].tgt
        for f in arrows:
            if (f.src, f.tgt) != (a, b):
                raise StructureError(f"meet of arrows with mixed endpoints: {arrows}")
        return Arrow(a, b, self.hom(a, b).meet(f.elem for f in arrows))

    # -- residuals --------------------------------------------------------------
    def lifting(self, g: Arrow, d: Arrow) -> Arrow:
        """Largest x: A -> B with g.x <= d, for g: B -> C and d: A -> C."""
        if g.tgt != d.tgt:
            raise StructureError(f"lifting needs matching targets: {g} vs {d}")
        key = (g, d)
        got = self._lift.get(key)
        if got is None:
            a, b, c = d.src, g.src, g.tgt
            table = self.comp[(a, b, c)]
            lab, lac = self.hom(a, b), self.hom(a, c)
            cands = [x for x in lab.elements if lac.le(table[(g.elem, x)], d.elem)]
            got = Arrow(a, b, lab.join(cands))
            self._lift[key] = got
        return got

    def extension(self, d: Arrow, f: Arrow) -> Arrow:
        """Largest y: B -> C with y.f <= d, for f: A -> B and d: A -> C."""
        if f.src != d.src:
            raise StructureError(f"extension needs matching sources: {d} vs {f}")
        key = (d, f)
        got = self._ext.get(key)
        if got is None:
            a, b, c = f.src, f.tgt, d.tgt
            table = self.comp[(a, b, c)]
            lbc, lac = self.hom(b, c), self.hom(a, c)
            cands = [y for y in lbc.elements if lac.le(table[(y, f.elem)], d.elem)]
            got = Arrow(b, c, lbc.join(cands))
            self._ext[key] = got
        return got

    # -- involution ---------------------------------------------------------------
    @property
    def has_involution(self) -> bool:
        return self.inv is not None

    def involute(self, f: Arrow) -> Arrow:
        if self.inv is None:
            raise PreconditionError("quantaloid carries no involution")
        return Arrow(f.tgt, f.src, self.inv[(f.src, f.tgt)][f.elem])

    # -- comparison ----------------------------------------------------------------
    def _key(self):
        return (frozenset(self.objects), self.homs, self.comp, self.ids, self.inv)

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteQuantaloid) and self._key() == other._key()

    def __repr__(self) -> str:
        return f"FiniteQuantaloid({self.name or len(self.objects)} objects={len(self.objects)})"


# ---------------------------------------------------------------------------
# Law checking
# ---------------------------------------------------------------------------

def validate_quantaloid(q: FiniteQuantaloid) -> PropertyReport:
    """Check the quantaloid laws and report each as a flag with a witness
    on failure.  Later stages that would crash on broken earlier ones are
    skipped rather than reported."""
    rep = PropertyReport()

    bad = None
    for (a, b) in sorted(q.homs):
        sub = q.homs[(a, b)].poset_report()
        if not sub.ok():
            flag = sub.failed()[0]
            bad = (a, b, flag, sub.witnesses.get(flag))
            break
    rep.set("poset-laws", bad is None, bad)

    complete = None
    if bad is None:
        for (a, b) in sorted(q.homs):
            sub = q.homs[(a, b)].lattice_report()
            if not sub.ok():
                flag = sub.failed()[0]
                complete = (a, b, flag, sub.witnesses.get(flag))
                break
        rep.set("lattice-complete", complete is None, complete)
    order_ok = bad is None and complete is None

    idw = None
    for a, b in product(q.objects, q.objects):
        ea, eb = q.ids[a], q.ids[b]
        for f in q.hom(a, b).elements:
            left = q.comp[(a, b, b)][(eb, f)]
            right = q.comp[(a, a, b)][(f, ea)]
            if left != f or right != f:
                idw = (a, b, f, left, right)
                break
        if idw:
            break
    rep.set("identity-laws", idw is None, idw)

    aw = None
    for a, b, c, d in product(q.objects, repeat=4):
        tab_ab_c = q.comp[(a, b, c)]
        tab_ac_d = q.comp[(a, c, d)]
        tab_bc_d = q.comp[(b, c, d)]
        tab_ab_d = q.comp[(a, b, d)]
        for f in q.hom(a, b).elements:
            for g in q.hom(b, c).elements:
                gf = tab_ab_c[(g, f)]
                for h in q.hom(c, d).elements:
                    hg = tab_bc_d[(h, g)]
                    if tab_ac_d[(h, gf)] != tab_ab_d[(hg, f)]:
                        aw = (a, b, c, d, f, g, h,
                              tab_ac_d[(h, gf)], tab_ab_d[(hg, f)])
                        break
                if aw:
                    break
            if aw:
                break
        if aw:
            break
    rep.set("associativity", aw is None, aw)

    if order_ok:
        jw = None
        for (a, b, c), table in sorted(q.comp.items()):
            lab, lbc, lac = q.hom(a, b), q.hom(b, c), q.hom(a, c)
            for g in lbc.elements:
                if table[(g, lab.bottom())] != lac.bottom():
                    jw = ("bottom-right", a, b, c, g)
                    break
                for x, y in product(lab.elements, lab.elements):
                    if table[(g, lab.join2(x, y))] != lac.join2(table[(g, x)], table[(g, y)]):
                        jw = ("join-right", a, b, c, g, x, y)
                        break
                if jw:
                    break
            if jw:
                break
            for f in lab.elements:
                if table[(lbc.bottom(), f)] != lac.bottom():
                    jw = ("bottom-left", a, b, c, f)
                    break
                for x, y in product(lbc.elements, lbc.elements):
                    if table[(lbc.join2(x, y), f)] != lac.join2(table[(x, f)], table[(y, f)]):
                        jw = ("join-left", a, b, c, f, x, y)
                        break
                if jw:
                    break
            if jw:
                break
        rep.set("join-continuity", jw is None, jw)

    if q.inv is not None:
        iw = None
        for (a, b) in sorted(q.inv):
            m = q.inv[(a, b)]
            back = q.inv[(b, a)]
            lab = q.hom(a, b)
            for f in lab.elements:
                if back[m[f]] != f:
                    iw = ("not-involutive", a, b, f)
                    break
            if iw:
                break
            if order_ok:
                for f, g in product(lab.elements, lab.elements):
                    if lab.le(f, g) and not q.hom(b, a).le(m[f], m[g]):
                        iw = ("not-monotone", a, b, f, g)
                        break
            if iw:
                break
        if iw is None:
            for a in q.objects:
                if q.inv[(a, a)][q.ids[a]] != q.ids[a]:
                    iw = ("identity-moved", a)
                    break
        if iw is None:
            for a, b, c in product(q.objects, repeat=3):
                table = q.comp[(a, b, c)]
                other = q.comp[(c, b, a)]
                for (g, f), r in table.items():
                    fo = q.inv[(a, b)][f]
                    go = q.inv[(b, c)][g]
                    if q.inv[(a, c)][r] != other[(fo, go)]:
                        iw = ("not-antimultiplicative", a, b, c, f, g)
                        break
                if iw:
                    break
        rep.set("involution-laws", iw is None, iw)

    return rep


def is_commutative(q: FiniteQuantaloid) -> bool:
    if len(q.objects) != 1:
        return False
    o = q.objects[0]
    table = q.comp[(o, o, o)]
    return all(table[(x, y)] == table[(y, x)] for (x, y) in table)


def symmetry_witness(q: FiniteQuantaloid):
    """None if hom(A,B) = hom(B,A) as lattices and composition commutes
    across the swap (comp(g,f) in (A,B,C) = comp(f,g) in (C,B,A));
    otherwise a witness tuple."""
    for a, b in product(q.objects, q.objects):
        if not q.homs[(a, b)].same_lattice(q.homs[(b, a)]):
            return ("hom-mismatch", a, b)
    for a, b, c in product(q.objects, repeat=3):
        table = q.comp[(a, b, c)]
        flipped = q.comp[(c, b, a)]
        for (g, f), r in table.items():
            if flipped[(f, g)] != r:
                return ("not-commutative", a, b, c, f, g)
    return None


# -- the operation surface, with the argument order used throughout --------

def join(q: FiniteQuantaloid, a: str, b: str, els: Iterable[str]) -> str:
    return q.hom(a, b).join(els)


def meet(q: FiniteQuantaloid, a: str, b: str, els: Iterable[str]) -> str:
    return q.hom(a, b).meet(els)


def lifting(q: FiniteQuantaloid, g: Arrow, d: Arrow) -> Arrow:
    return q.lifting(g, d)


def extension(q: FiniteQuantaloid, f: Arrow, d: Arrow) -> Arrow:
    return q.extension(d, f)


def is_diagonal(q: FiniteQuantaloid, f: Arrow, g: Arrow, d: Arrow) -> bool:
    """d: src(f) -> tgt(g) splits through both f and g:
    g.(lifting(g, d)) = d = (extension(d, f)).f"""
    if d.src != f.src or d.tgt != g.tgt:
        raise StructureError(f"{d} cannot be a diagonal of {f} and {g}")
    left = q.compose(g, q.lifting(g, d))
    if left != d:
        return False
    right = q.compose(q.extension(d, f), f)
    return right == d


# ---------------------------------------------------------------------------
# Property analysis
# ---------------------------------------------------------------------------

def _hom_pairs(q: FiniteQuantaloid):
    for a in q.objects:
        for b in q.objects:
            yield a, b, q.hom(a, b)


def analyze_properties(q: FiniteQuantaloid) -> PropertyReport:
    """Structural properties of a (law-abiding) quantaloid."""
    rep = PropertyReport()

    w = None
    for a in q.objects:
        laa = q.hom(a, a)
        if q.ids[a] != laa.top():
            w = (a, q.ids[a], laa.top())
            break
    rep.set("integral", w is None, w)

    w = None
    for a, b, lab in _hom_pairs(q):
        bad = lab.is_distributive()
        if bad is not None:
            w = (a, b) + bad
            break
    rep.set("locally-localic", w is None, w)

    w = None
    for a in q.objects:
        laa = q.hom(a, a)
        e = q.ids[a]
        if e == laa.bottom():
            # 1_a sits below the empty join, with nothing to witness it
            w = (a, "identity-is-bottom")
            break
        prime = next(((x, y) for x, y in product(laa.elements, laa.elements)
                      if laa.le(e, laa.join2(x, y))
                      and not laa.le(e, x) and not laa.le(e, y)), None)
        if prime is not None:
            w = (a,) + prime
            break
    rep.set("identities-join-irreducible", w is None, w)

    rep.set("divisible-1", *_tag(_div1(q)))
    rep.set("divisible-2", *_tag(_div2(q)))
    rep.set("divisible-3", *_tag(_div3(q)))
    rep.set("divisible-4", *_tag(_div4(q)))
    rep.set("divisible-5", *_tag(_div5(q)))
    rep.set("divisible",
            all(rep.flags[f"divisible-{i}"] for i in range(1, 6)))

    sw = symmetry_witness(q)
    rep.set("symmetric", sw is None, sw)

    rep.info["objects"] = len(q.objects)
    rep.info["arrows"] = sum(len(l.elements) for _, _, l in _hom_pairs(q))
    rep.info["zero-objects"] = sorted(
        a for a in q.objects if q.ids[a] == q.hom(a, a).bottom())
    return rep


def _tag(w):
    return (w is None, w)


def _div1(q):
    # d <= e  iff  d = e.x for some x and d = y.e for some y
    for a, b, lab in _hom_pairs(q):
        t_right = q.comp[(a, a, b)]   # e.x with x: A -> A
        t_left = q.comp[(a, b, b)]    # y.e with y: B -> B
        xs = q.hom(a, a).elements
        ys = q.hom(b, b).elements
        for d, e in product(lab.elements, lab.elements):
            got = (any(t_right[(e, x)] == d for x in xs)
                   and any(t_left[(y, e)] == d for y in ys))
            if got != lab.le(d, e):
                return (a, b, d, e)
    return None


def _div2(q):
    # d <= e  iff  e.(e\d) = d = (d/e).e
    for a, b, lab in _hom_pairs(q):
        for d, e in product(lab.elements, lab.elements):
            da, ea = Arrow(a, b, d), Arrow(a, b, e)
            got = (q.compose(ea, q.lifting(ea, da)) == da
                   and q.compose(q.extension(da, ea), ea) == da)
            if got != lab.le(d, e):
                return (a, b, d, e)
    return None


def _div3(q):
    # e.(e\d) = d meet e = (d/e).e, with no order hypothesis on d, e
    for a, b, lab in _hom_pairs(q):
        for d, e in product(lab.elements, lab.elements):
            da, ea = Arrow(a, b, d), Arrow(a, b, e)
            m = lab.meet2(d, e)
            if q.compose(ea, q.lifting(ea, da)).elem != m:
                return (a, b, d, e)
            if q.compose(q.extension(da, ea), ea).elem != m:
                return (a, b, d, e)
    return None


def _div4(q):
    # the diagonals of (e, e) are exactly the arrows below e
    for a, b, lab in _hom_pairs(q):
        for e in lab.elements:
            ea = Arrow(a, b, e)
            for c in lab.elements:
                if is_diagonal(q, ea, ea, Arrow(a, b, c)) != lab.le(c, e):
                    return (a, b, e, c)
    return None


def _div5(q):
    # the diagonals of (d, e) are exactly the arrows below d meet e
    for a, b, lab in _hom_pairs(q):
        for d, e in product(lab.elements, lab.elements):
            da, ea = Arrow(a, b, d), Arrow(a, b, e)
            m = lab.meet2(d, e)
            for c in lab.elements:
                if is_diagonal(q, da, ea, Arrow(a, b, c)) != lab.le(c, m):
                    return (a, b, d, e, c)
    return None


# ---------------------------------------------------------------------------
# Cauchy-bilateral checks
# ---------------------------------------------------------------------------

def _sym_composite(q: FiniteQuantaloid, f: Arrow, g: Arrow) -> Arrow:
    """(g meet f*).(g* meet f): src(f) -> src(f), for f: X -> Y, g: Y -> X."""
    left = q.meet([g, q.involute(f)])
    right = q.meet([q.involute(g), f])
    return q.compose(left, right)


def _pairs_at(q: FiniteQuantaloid, x: str) -> List[Tuple[Arrow, Arrow]]:
    out = []
    for y in q.objects:
        for f in q.hom(x, y).elements:
            for g in q.hom(y, x).elements:
                out.append((Arrow(x, y, f), Arrow(y, x, g)))
    return out


def check_strong_cauchy_bilateral(q: FiniteQuantaloid) -> PropertyReport:
    """Fails exactly when some v in Q(X, X) with 1_X not below v satisfies
    1_X <= join of g.f over all pairs whose symmetrised composite is below
    v; that pair family is then itself a counterexample."""
    if q.inv is None:
        raise PreconditionError("Cauchy-bilateral checks need an involution")
    rep = PropertyReport()
    witness = None
    for x in q.objects:
        lxx = q.hom(x, x)
        one = q.ids[x]
        pairs = _pairs_at(q, x)
        syms = [(f, g, _sym_composite(q, f, g), q.compose(g, f)) for f, g in pairs]
        for v in lxx.elements:
            if lxx.le(one, v):
                continue
            fam = [(f, g) for f, g, s, _ in syms if lxx.le(s.elem, v)]
            join = lxx.join(q.compose(g, f).elem for f, g in fam)
            if lxx.le(one, join):
                witness = {"object": x, "v": v,
                           "family": [(f.label(), g.label()) for f, g in fam]}
                break
        if witness:
            break
    rep.set("strongly-cauchy-bilateral", witness is None, witness)
    return rep


def cauchy_family_report(q: FiniteQuantaloid, x: str,
                         family: Sequence[Tuple[Arrow, Arrow]]) -> Dict[str, bool]:
    """Re-check one family of pairs (f_i: X -> Y_i, g_i: Y_i -> X) against
    the three hypotheses and the symmetrised conclusion."""
    lxx = q.hom(x, x)
    one = q.ids[x]
    gfs = [q.compose(g, f) for f, g in family]
    hyp1 = all(q.le(q.compose(fk, gf), fk)
               for (fk, _) in family for gf in gfs)
    hyp2 = all(q.le(q.compose(gf, gk), gk)
               for (_, gk) in family for gf in gfs)
    hyp3 = lxx.le(one, lxx.join(gf.elem for gf in gfs))
    concl = lxx.le(one, lxx.join(
        _sym_composite(q, f, g).elem for f, g in family))
    return {"hyp-right": hyp1, "hyp-left": hyp2, "hyp-unit": hyp3,
            "conclusion": concl}


def check_cauchy_bilateral(q: FiniteQuantaloid, cap: int = 4) -> PropertyReport:
    """Search families of distinct pairs, at most `cap` per base object,
    satisfying the three hypotheses but not the symmetrised conclusion.
    Repeating a pair never changes any join, so distinct pairs suffice and
    the search is exhaustive when cap covers every pair at each object."""
    if q.inv is None:
        raise PreconditionError("Cauchy-bilateral checks need an involution")
    if cap < 1:
        raise PreconditionError("family-size cap must be at least 1")
    rep = PropertyReport()
    witness = None
    max_pairs = 0
    for x in q.objects:
        lxx = q.hom(x, x)
        one = q.ids[x]
        pairs = _pairs_at(q, x)
        max_pairs = max(max_pairs, len(pairs))
        gfs = [q.compose(g, f) for f, g in pairs]
        syms = [_sym_composite(q, f, g) for f, g in pairs]
        n = len(pairs)

        def compatible(i: int, chosen: List[int]) -> bool:
            fi, gi = pairs[i]
            for j in chosen + [i]:
                fj, gj = pairs[j]
                if not (q.le(q.compose(fi, gfs[j]), fi)
                        and q.le(q.compose(gfs[j], gi), gi)
                        and q.le(q.compose(fj, gfs[i]), fj)
                        and q.le(q.compose(gfs[i], gj), gj)):
                    return False
            return True

        def dfs(start: int, chosen: List[int], join_el: str, sym_el: str):
            nonlocal witness
            if chosen:
                if lxx.le(one, join_el):
                    if lxx.le(one, sym_el):
                        return  # conclusion holds for every extension too
                    witness = {
                        "object": x,
                        "family": [(pairs[i][0].label(), pairs[i][1].label())
                                   for i in chosen],
                        "unit-join": join_el,
                        "symmetrised-join": sym_el,
                    }
                    return
            if len(chosen) >= cap or witness is not None:
                return
            for i in range(start, n):
                if not compatible(i, chosen):
                    continue
                dfs(i + 1, chosen + [i],
                    lxx.join2(join_el, gfs[i].elem),
                    lxx.join2(sym_el, syms[i].elem))
                if witness is not None:
                    return

        dfs(0, [], lxx.bottom(), lxx.bottom())
        if witness:
            break
    rep.set("cauchy-bilateral", witness is None, witness)
    rep.info["cap"] = cap
    rep.info["exact"] = cap >= max_pairs
    rep.info["max-pairs"] = max_pairs
    return rep


# ---------------------------------------------------------------------------
# Derived quantaloids
# ---------------------------------------------------------------------------

def restrict_objects(q: FiniteQuantaloid, keep: Sequence[str],
                     name: str = "") -> FiniteQuantaloid:
    """Full subquantaloid on the listed objects."""
    keep = [o for o in q.objects if o in set(keep)]
    homs = {(a, b): q.homs[(a, b)] for a, b in product(keep, keep)}
    comp = {t: q.comp[t] for t in product(keep, repeat=3)}
    ids = {a: q.ids[a] for a in keep}
    inv = None
    if q.inv is not None:
        inv = {(a, b): q.inv[(a, b)] for a, b in product(keep, keep)}
    return FiniteQuantaloid(keep, homs, comp, ids, inv,
                            name=name or f"{q.name}.sub")


def non_zero_part(q: FiniteQuantaloid) -> FiniteQuantaloid:
    """Drop the objects whose identity is the bottom endo-arrow (at such an
    object every in- and out-arrow is forced to bottom)."""
    keep = [a for a in q.objects if q.ids[a] != q.hom(a, a).bottom()]
    return restrict_objects(q, keep, name=f"{q.name}.nz")


def underlying_locale(q: FiniteQuantaloid) -> FiniteQuantaloid:
    """The meet/top locale on the same carrier; defined for one-object,
    commutative, divisible quantales."""
    if len(q.objects) != 1:
        raise PreconditionError("underlying locale needs a one-object quantaloid")
    if not is_commutative(q):
        raise PreconditionError("underlying locale needs a commutative quantale")
    props = analyze_properties(q)
    if not props.flags["divisible"]:
        failing = [f for f in props.failed() if f.startswith("divisible-")]
        raise PreconditionError(
            f"underlying locale needs a divisible quantale; failing "
            f"conditions: {failing}, witness {props.witnesses[failing[0]]}")
    o = q.objects[0]
    lat = q.hom(o, o)
    table = {(x, y): lat.meet2(x, y)
             for x, y in product(lat.elements, lat.elements)}
    inv = {(o, o): {x: x for x in lat.elements}}
    return FiniteQuantaloid([o], {(o, o): lat}, {(o, o, o): table},
                            {o: lat.top()}, inv,
                            name=f"{q.name}.locale" if q.name else "locale")


def truncated_addition_chain(n: int) -> FiniteQuantaloid:
    """One-object quantale on {0, ..., n}: composition is addition capped
    at n, the unit is 0, and larger numbers sit lower in the lattice."""
    if n < 0:
        raise StructureError("chain needs n >= 0")
    els = [str(i) for i in range(n + 1)]
    pairs = [(str(i), str(j)) for i in range(n + 1) for j in range(n + 1) if i >= j]
    lat = HomLattice(els, pairs)
    o = "*"
    table = {(str(a), str(b)): str(min(a + b, n))
             for a in range(n + 1) for b in range(n + 1)}
    inv = {(o, o): {e: e for e in els}}
    return FiniteQuantaloid([o], {(o, o): lat}, {(o, o, o): table},
                            {o: "0"}, inv, name=f"plus-chain-{n}")
