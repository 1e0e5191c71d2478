"""The quantaloid of diagonals of a quantaloid, and lax functors.

An arrow d: A -> D is a *diagonal* of f: A -> B and g: C -> D when it
splits exactly through both: g.(lifting(g, d)) = d = (extension(d, f)).f.
Diagonals form a new quantaloid whose objects are the arrows of the base:

    hom(f, g) = diagonals of (f, g), ordered as in the base hom
    e . d     = extension(e, g) . d          (for d: f -> g, e: g -> h)
    id on f   = f itself

Object names are arrow labels, e.g. "*->*:0".
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .errors import PreconditionError, StructureError
from .lattice import HomLattice
from .quantaloid import (Arrow, FiniteQuantaloid, is_commutative, is_diagonal,
                         symmetry_witness)
from .report import PropertyReport


def diagonal_hom(q: FiniteQuantaloid, f: Arrow, g: Arrow) -> List[str]:
    """Elements of Q(src f, tgt g) that are diagonals of (f, g), in base
    lattice order."""
    base = q.hom(f.src, g.tgt)
    return [d for d in base.elements
            if is_diagonal(q, f, g, Arrow(f.src, g.tgt, d))]


def dq_object_map(q: FiniteQuantaloid) -> Dict[str, Arrow]:
    """Object names of the diagonal quantaloid back to base arrows."""
    return {f.label(): f for f in q.all_arrows()}


def diagonal_quantaloid(q: FiniteQuantaloid, name: str = "") -> FiniteQuantaloid:
    arrows = list(q.all_arrows())
    labels = [f.label() for f in arrows]
    homs: Dict[Tuple[str, str], HomLattice] = {}
    for f in arrows:
        for g in arrows:
            base = q.hom(f.src, g.tgt)
            els = diagonal_hom(q, f, g)
            keep = set(els)
            pairs = [(x, y) for (x, y) in base.pairs if x in keep and y in keep]
            homs[(f.label(), g.label())] = HomLattice(els, pairs)

    comp: Dict[Tuple[str, str, str], Dict[Tuple[str, str], str]] = {}
    for f in arrows:
        fl = f.label()
        for g in arrows:
            gl = g.label()
            dfg = homs[(fl, gl)].elements
            for h in arrows:
                hl = h.label()
                table: Dict[Tuple[str, str], str] = {}
                for e in homs[(gl, hl)].elements:
                    # e behaves like extension(e, g) once composed onto a
                    # diagonal of (f, g); that reduces e.d to base arithmetic
                    ext = q.extension(Arrow(g.src, h.tgt, e), g)
                    for d in dfg:
                        table[(e, d)] = q.compose(ext, Arrow(f.src, g.tgt, d)).elem
                comp[(fl, gl, hl)] = table

    ids = {f.label(): f.elem for f in arrows}

    # a symmetric base (identity involution) hands its identity involution
    # down to the diagonals; no other case gets an involution
    inv = None
    if symmetry_witness(q) is None:
        for f in arrows:
            for g in arrows:
                a = set(homs[(f.label(), g.label())].elements)
                b = set(homs[(g.label(), f.label())].elements)
                if a != b:
                    raise StructureError(
                        f"diagonal homs of ({f}, {g}) are not symmetric "
                        f"although the base is")
        inv = {(fl, gl): {d: d for d in homs[(fl, gl)].elements}
               for fl in labels for gl in labels}

    return FiniteQuantaloid(labels, homs, comp, ids, inv,
                            name=name or (f"D({q.name})" if q.name else "D"))


# ---------------------------------------------------------------------------
# Lax functors
# ---------------------------------------------------------------------------

@dataclass
class LaxFunctor:
    source: FiniteQuantaloid
    target: FiniteQuantaloid
    obj_map: Dict[str, str]
    arr_map: Dict[Arrow, Arrow]
    name: str = ""

    def on_obj(self, a: str) -> str:
        return self.obj_map[a]

    def on_arr(self, f: Arrow) -> Arrow:
        return self.arr_map[f]


def check_lax_functor(fun: LaxFunctor) -> PropertyReport:
    """Flags: typing, monotone, is-lax, is-normal, is-homomorphism.
    Later flags only appear once typing holds."""
    rep = PropertyReport()
    src, tgt = fun.source, fun.target

    bad = None
    if set(fun.obj_map) != set(src.objects):
        bad = ("object-map-domain", sorted(fun.obj_map))
    else:
        for a, fa in fun.obj_map.items():
            if fa not in tgt.objects:
                bad = ("object-map-value", a, fa)
                break
    if bad is None:
        want = set(src.all_arrows())
        if set(fun.arr_map) != want:
            bad = ("arrow-map-domain",
                   sorted(x.label() for x in want.symmetric_difference(fun.arr_map)))
    if bad is None:
        for f, ff in fun.arr_map.items():
            if (ff.src, ff.tgt) != (fun.obj_map[f.src], fun.obj_map[f.tgt]) \
                    or ff.elem not in tgt.hom(ff.src, ff.tgt):
                bad = ("arrow-map-value", f.label(), ff.label())
                break
    rep.set("typing", bad is None, bad)
    if bad is not None:
        return rep

    w = None
    for a in src.objects:
        for b in src.objects:
            lab = src.hom(a, b)
            for x in lab.elements:
                for y in lab.elements:
                    if lab.le(x, y) and not tgt.le(fun.arr_map[Arrow(a, b, x)],
                                                   fun.arr_map[Arrow(a, b, y)]):
                        w = (a, b, x, y)
                        break
                if w:
                    break
            if w:
                break
        if w:
            break
    rep.set("monotone", w is None, w)

    unit_lax = None
    unit_eq = True
    for a in src.objects:
        fa = fun.obj_map[a]
        f_one = fun.arr_map[src.identity(a)]
        if not tgt.le(tgt.identity(fa), f_one):
            unit_lax = (a, f_one.label())
        if f_one != tgt.identity(fa):
            unit_eq = False
        if unit_lax:
            break

    comp_lax = None
    comp_eq = True
    for a in src.objects:
        for b in src.objects:
            for c in src.objects:
                for f in src.arrows(a, b):
                    ff = fun.arr_map[f]
                    for g in src.arrows(b, c):
                        lhs = tgt.compose(fun.arr_map[g], ff)
                        rhs = fun.arr_map[src.compose(g, f)]
                        if not tgt.le(lhs, rhs):
                            comp_lax = (f.label(), g.label(),
                                        lhs.label(), rhs.label())
                        if lhs != rhs:
                            comp_eq = False
                        if comp_lax:
                            break
                    if comp_lax:
                        break
                if comp_lax:
                    break
            if comp_lax:
                break
        if comp_lax:
            break
    rep.set("is-lax", unit_lax is None and comp_lax is None,
            unit_lax or comp_lax)

    rep.set("is-normal", rep.flags["is-lax"] and unit_eq,
            None if unit_eq else "identity-not-preserved")

    joins_ok = None
    if rep.flags["is-normal"] and comp_eq:
        for a in src.objects:
            for b in src.objects:
                lab = src.hom(a, b)
                fa, fb = fun.obj_map[a], fun.obj_map[b]
                ltg = tgt.hom(fa, fb)
                if fun.arr_map[Arrow(a, b, lab.bottom())].elem != ltg.bottom():
                    joins_ok = (a, b, "bottom")
                    break
                for x in lab.elements:
                    for y in lab.elements:
                        got = fun.arr_map[Arrow(a, b, lab.join2(x, y))].elem
                        want = ltg.join2(fun.arr_map[Arrow(a, b, x)].elem,
                                         fun.arr_map[Arrow(a, b, y)].elem)
                        if got != want:
                            joins_ok = (a, b, x, y)
                            break
                    if joins_ok:
                        break
                if joins_ok:
                    break
            if joins_ok:
                break
    rep.set("is-homomorphism",
            rep.flags["is-normal"] and comp_eq and joins_ok is None,
            joins_ok if joins_ok else
            (None if comp_eq else "composition-not-preserved"))
    return rep


def lax_full_faithful(fun: LaxFunctor) -> PropertyReport:
    """Is each hom map injective (faithful) and onto the target hom (full)?"""
    rep = PropertyReport()
    src, tgt = fun.source, fun.target
    not_faith = None
    not_full = None
    for a in src.objects:
        for b in src.objects:
            lab = src.hom(a, b)
            image = {}
            for x in lab.elements:
                fx = fun.arr_map[Arrow(a, b, x)].elem
                if fx in image and not_faith is None:
                    not_faith = (a, b, image[fx], x)
                image[fx] = x
            ltg = tgt.hom(fun.obj_map[a], fun.obj_map[b])
            miss = next((e for e in ltg.elements if e not in image), None)
            if miss is not None and not_full is None:
                not_full = (a, b, miss)
    rep.set("faithful", not_faith is None, not_faith)
    rep.set("full", not_full is None, not_full)
    return rep


def identity_lax(q: FiniteQuantaloid) -> LaxFunctor:
    return LaxFunctor(q, q, {a: a for a in q.objects},
                      {f: f for f in q.all_arrows()}, name="id")


def compose_lax(outer: LaxFunctor, inner: LaxFunctor) -> LaxFunctor:
    if outer.source is not inner.target and outer.source != inner.target:
        raise StructureError("lax functors do not compose: middle quantaloids differ")
    return LaxFunctor(
        inner.source, outer.target,
        {a: outer.obj_map[fa] for a, fa in inner.obj_map.items()},
        {f: outer.arr_map[ff] for f, ff in inner.arr_map.items()},
        name=f"{outer.name}.{inner.name}")


# ---------------------------------------------------------------------------
# The canonical functors around D(Q)
# ---------------------------------------------------------------------------

def embed_I(q: FiniteQuantaloid,
            dq: Optional[FiniteQuantaloid] = None) -> LaxFunctor:
    """A |-> the identity arrow on A, f |-> f as a diagonal of identities.
    A homomorphism, full and faithful."""
    dq = dq if dq is not None else diagonal_quantaloid(q)
    obj = {a: q.identity(a).label() for a in q.objects}
    arr = {f: dq.arrow(obj[f.src], obj[f.tgt], f.elem) for f in q.all_arrows()}
    return LaxFunctor(q, dq, obj, arr, name="embed-identities")


def project_J0(q: FiniteQuantaloid,
               dq: Optional[FiniteQuantaloid] = None) -> LaxFunctor:
    """f |-> src f on objects; a diagonal d: f -> g goes to lifting(g, d):
    src f -> src g.  Lax and normal."""
    dq = dq if dq is not None else diagonal_quantaloid(q)
    base = dq_object_map(q)
    obj = {lbl: base[lbl].src for lbl in dq.objects}
    arr = {}
    for fl in dq.objects:
        f = base[fl]
        for gl in dq.objects:
            g = base[gl]
            for d in dq.hom(fl, gl).elements:
                arr[Arrow(fl, gl, d)] = q.lifting(g, Arrow(f.src, g.tgt, d))
    return LaxFunctor(dq, q, obj, arr, name="src-projection")


def project_J1(q: FiniteQuantaloid,
               dq: Optional[FiniteQuantaloid] = None) -> LaxFunctor:
    """f |-> tgt f on objects; a diagonal d: f -> g goes to extension(d, f):
    tgt f -> tgt g.  Lax and normal."""
    dq = dq if dq is not None else diagonal_quantaloid(q)
    base = dq_object_map(q)
    obj = {lbl: base[lbl].tgt for lbl in dq.objects}
    arr = {}
    for fl in dq.objects:
        f = base[fl]
        for gl in dq.objects:
            g = base[gl]
            for d in dq.hom(fl, gl).elements:
                arr[Arrow(fl, gl, d)] = q.extension(Arrow(f.src, g.tgt, d), f)
    return LaxFunctor(dq, q, obj, arr, name="tgt-projection")


def project_K(q: FiniteQuantaloid,
              dq: Optional[FiniteQuantaloid] = None) -> LaxFunctor:
    """For a one-object commutative base: d: f -> g goes to
    (residual of d by g) . (residual of d by f)."""
    if len(q.objects) != 1 or not is_commutative(q):
        raise PreconditionError(
            "this projection needs a one-object commutative base")
    dq = dq if dq is not None else diagonal_quantaloid(q)
    base = dq_object_map(q)
    o = q.objects[0]
    obj = {lbl: o for lbl in dq.objects}
    arr = {}
    for fl in dq.objects:
        f = base[fl]
        for gl in dq.objects:
            g = base[gl]
            for d in dq.hom(fl, gl).elements:
                da = Arrow(o, o, d)
                arr[Arrow(fl, gl, d)] = q.compose(q.lifting(g, da),
                                                  q.lifting(f, da))
    return LaxFunctor(dq, q, obj, arr, name="two-sided-projection")
