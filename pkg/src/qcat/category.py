"""Categories enriched in a finite quantaloid, with functors, distributors,
presheaves, Cauchy completion, and the categorical closure operator.

Conventions (fixed throughout):
  - every object x carries a type tx = typ(x), an object of the base;
  - hom(x, y) is an arrow  typ(y) -> typ(x)  of the base;
  - composition law:  hom(x,y) . hom(y,z) <= hom(x,z);
  - units:            1_{tx} <= hom(x,x);
  - a distributor Phi from A to B has mat(y, x): tx -> ty for y in B, x in A;
  - a presheaf of type X on C is a vector phi(y): X -> ty satisfying the
    one-legged distributor law  C(y',y) . phi(y) <= phi(y').
"""
from __future__ import annotations

from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .diagonals import LaxFunctor
from .errors import EnumerationBoundError, PreconditionError, StructureError
from .quantaloid import Arrow, FiniteQuantaloid
from .report import PropertyReport

DEFAULT_ENUM_BOUND = 4096


class EnrichedCategory:
    def __init__(self, base: FiniteQuantaloid, objs: Sequence[str],
                 typ: Dict[str, str], hom: Dict[Tuple[str, str], str],
                 name: str = ""):
        self.base = base
        self.objs = tuple(str(o) for o in objs)
        self.name = name
        if len(set(self.objs)) != len(self.objs):
            raise StructureError(f"duplicate objects: {self.objs}")
        self.typ = dict(typ)
        self.hom = dict(hom)
        if set(self.typ) != set(self.objs):
            raise StructureError("typ must assign a type to exactly the objects")
        for x, t in self.typ.items():
            if t not in base.objects:
                raise StructureError(f"type {t!r} of {x!r} is not a base object")
        want = set(product(self.objs, self.objs))
        if set(self.hom) != want:
            raise StructureError("hom must cover exactly all object pairs")
        for (x, y), e in self.hom.items():
            if e not in base.hom(self.typ[y], self.typ[x]):
                raise StructureError(
                    f"hom({x},{y}) = {e!r} is not in base hom"
                    f"({self.typ[y]},{self.typ[x]})")

    def harr(self, x: str, y: str) -> Arrow:
        return Arrow(self.typ[y], self.typ[x], self.hom[(x, y)])

    def _key(self):
        return (self.base, frozenset(self.objs), self.typ, self.hom)

    def __eq__(self, other) -> bool:
        return isinstance(other, EnrichedCategory) and self._key() == other._key()

    def __repr__(self) -> str:
        return f"EnrichedCategory({self.name or ''} {len(self.objs)} objects)"


def validate_category(c: EnrichedCategory) -> PropertyReport:
    rep = PropertyReport()
    w = None
    for x, y, z in product(c.objs, repeat=3):
        got = c.base.compose(c.harr(x, y), c.harr(y, z))
        if not c.base.le(got, c.harr(x, z)):
            w = (x, y, z, got.label(), c.harr(x, z).label())
            break
    rep.set("composition-law", w is None, w)
    w = None
    for x in c.objs:
        tx = c.typ[x]
        if not c.base.le(c.base.identity(tx), c.harr(x, x)):
            w = (x, c.hom[(x, x)])
            break
    rep.set("identity-law", w is None, w)
    return rep


def validate(entity) -> PropertyReport:
    """Law-by-law verdicts for a category, functor, or distributor."""
    if isinstance(entity, EnrichedCategory):
        return validate_category(entity)
    if isinstance(entity, EnrichedFunctor):
        return validate_functor(entity)
    if isinstance(entity, EnrichedDistributor):
        return validate_distributor(entity)
    raise StructureError(f"nothing to validate in {type(entity).__name__}")


def unit_category(base: FiniteQuantaloid, x: str, obj: str = "*") -> EnrichedCategory:
    """The one-object category at base object x, hom = 1_x."""
    return EnrichedCategory(base, [obj], {obj: x},
                            {(obj, obj): base.ids[x]}, name=f"unit@{x}")


# ---------------------------------------------------------------------------
# Functors
# ---------------------------------------------------------------------------

class EnrichedFunctor:
    def __init__(self, dom: EnrichedCategory, cod: EnrichedCategory,
                 map: Dict[str, str], name: str = ""):
        if dom.base != cod.base:
            raise StructureError("functor endpoints live over different bases")
        self.dom = dom
        self.cod = cod
        self.map = dict(map)
        self.name = name
        if set(self.map) != set(dom.objs):
            raise StructureError("functor map must cover exactly the domain objects")
        for x, fx in self.map.items():
            if fx not in cod.objs:
                raise StructureError(f"functor sends {x!r} to unknown object {fx!r}")

    def __call__(self, x: str) -> str:
        return self.map[x]

    def __eq__(self, other) -> bool:
        return (isinstance(other, EnrichedFunctor) and self.dom == other.dom
                and self.cod == other.cod and self.map == other.map)


def validate_functor(f: EnrichedFunctor) -> PropertyReport:
    rep = PropertyReport()
    w = next(((x, f(x)) for x in f.dom.objs
              if f.dom.typ[x] != f.cod.typ[f(x)]), None)
    rep.set("type-preserving", w is None, w)
    if w is None:
        w = None
        for x, y in product(f.dom.objs, f.dom.objs):
            if not f.dom.base.le(f.dom.harr(x, y), f.cod.harr(f(x), f(y))):
                w = (x, y, f.dom.hom[(x, y)], f.cod.hom[(f(x), f(y))])
                break
        rep.set("hom-inequality", w is None, w)
    return rep


def identity_functor(c: EnrichedCategory) -> EnrichedFunctor:
    return EnrichedFunctor(c, c, {x: x for x in c.objs}, name="id")


def compose_functors(outer: EnrichedFunctor, inner: EnrichedFunctor) -> EnrichedFunctor:
    if inner.cod != outer.dom:
        raise StructureError("functors do not compose: middle categories differ")
    return EnrichedFunctor(inner.dom, outer.cod,
                           {x: outer(inner(x)) for x in inner.dom.objs},
                           name=f"{outer.name}.{inner.name}")


def enumerate_functors(dom: EnrichedCategory,
                       cod: EnrichedCategory) -> List[EnrichedFunctor]:
    """All maps satisfying the functor laws, in lexicographic object order."""
    out = []
    pools = []
    for x in dom.objs:
        pools.append([y for y in cod.objs if cod.typ[y] == dom.typ[x]])
    for combo in product(*pools):
        m = dict(zip(dom.objs, combo))
        ok = all(dom.base.le(dom.harr(x, y), cod.harr(m[x], m[y]))
                 for x, y in product(dom.objs, dom.objs))
        if ok:
            out.append(EnrichedFunctor(dom, cod, m))
    return out


# ---------------------------------------------------------------------------
# Distributors
# ---------------------------------------------------------------------------

class EnrichedDistributor:
    def __init__(self, dom: EnrichedCategory, cod: EnrichedCategory,
                 mat: Dict[Tuple[str, str], str], name: str = ""):
        if dom.base != cod.base:
            raise StructureError("distributor endpoints live over different bases")
        self.dom = dom
        self.cod = cod
        self.mat = dict(mat)
        self.name = name
        want = set(product(cod.objs, dom.objs))
        if set(self.mat) != want:
            raise StructureError("matrix must cover exactly cod-objs x dom-objs")
        for (y, x), e in self.mat.items():
            if e not in dom.base.hom(dom.typ[x], cod.typ[y]):
                raise StructureError(
                    f"mat({y},{x}) = {e!r} is not in base hom"
                    f"({dom.typ[x]},{cod.typ[y]})")

    def marr(self, y: str, x: str) -> Arrow:
        return Arrow(self.dom.typ[x], self.cod.typ[y], self.mat[(y, x)])

    def __eq__(self, other) -> bool:
        return (isinstance(other, EnrichedDistributor) and self.dom == other.dom
                and self.cod == other.cod and self.mat == other.mat)


def validate_distributor(d: EnrichedDistributor) -> PropertyReport:
    rep = PropertyReport()
    base = d.dom.base
    w = None
    for (y, x) in d.mat:
        for y2 in d.cod.objs:
            got = base.compose(d.cod.harr(y2, y), d.marr(y, x))
            if not base.le(got, d.marr(y2, x)):
                w = ("left", y2, y, x)
                break
        if w:
            break
    rep.set("left-action", w is None, w)
    w = None
    for (y, x) in d.mat:
        for x2 in d.dom.objs:
            got = base.compose(d.marr(y, x), d.dom.harr(x, x2))
            if not base.le(got, d.marr(y, x2)):
                w = ("right", y, x, x2)
                break
        if w:
            break
    rep.set("right-action", w is None, w)
    return rep


def dist_id(c: EnrichedCategory) -> EnrichedDistributor:
    return EnrichedDistributor(c, c, dict(c.hom), name=f"id[{c.name}]")


def dist_compose(psi: EnrichedDistributor,
                 phi: EnrichedDistributor) -> EnrichedDistributor:
    """psi after phi: (psi . phi)(z, x) = join over y of psi(z,y) . phi(y,x)."""
    if phi.cod != psi.dom:
        raise StructureError("distributors do not compose: middle categories differ")
    base = phi.dom.base
    mat = {}
    for z in psi.cod.objs:
        for x in phi.dom.objs:
            terms = [base.compose(psi.marr(z, y), phi.marr(y, x))
                     for y in phi.cod.objs]
            mat[(z, x)] = base.join(terms, src=phi.dom.typ[x],
                                    tgt=psi.cod.typ[z]).elem
    return EnrichedDistributor(phi.dom, psi.cod, mat)


def dist_le(phi: EnrichedDistributor, psi: EnrichedDistributor) -> bool:
    if phi.dom != psi.dom or phi.cod != psi.cod:
        raise StructureError("cannot compare distributors with different endpoints")
    return all(phi.dom.base.le(phi.marr(y, x), psi.marr(y, x))
               for (y, x) in phi.mat)


def dist_lift(psi: EnrichedDistributor,
              phi: EnrichedDistributor) -> EnrichedDistributor:
    """Largest Xi with psi . Xi <= phi.  psi: B -|-> C, phi: A -|-> C;
    result A -|-> B, entry (y, x) = meet over z of psi(z,y) \\ phi(z,x)."""
    if psi.cod != phi.cod:
        raise StructureError("lifting needs matching codomain categories")
    base = phi.dom.base
    a, b, c = phi.dom, psi.dom, psi.cod
    mat = {}
    for y in b.objs:
        for x in a.objs:
            terms = [base.lifting(psi.marr(z, y), phi.marr(z, x))
                     for z in c.objs]
            mat[(y, x)] = base.meet(terms, src=a.typ[x], tgt=b.typ[y]).elem
    return EnrichedDistributor(a, b, mat)


def dist_ext(phi: EnrichedDistributor,
             psi: EnrichedDistributor) -> EnrichedDistributor:
    """Largest Xi with Xi . phi <= psi.  phi: A -|-> B, psi: A -|-> C;
    result B -|-> C, entry (y, x) = meet over z of psi(y,z) / phi(x,z)."""
    if phi.dom != psi.dom:
        raise StructureError("extension needs matching domain categories")
    base = phi.dom.base
    a, b, c = phi.dom, phi.cod, psi.cod
    mat = {}
    for y in c.objs:
        for x in b.objs:
            terms = [base.extension(psi.marr(y, z), phi.marr(x, z))
                     for z in a.objs]
            mat[(y, x)] = base.meet(terms, src=b.typ[x], tgt=c.typ[y]).elem
    return EnrichedDistributor(b, c, mat)


def graph_cograph(f: EnrichedFunctor) -> Tuple[EnrichedDistributor,
                                               EnrichedDistributor]:
    """(F_*, F^*): F_*(b, a) = cod(b, Fa) and F^*(a, b) = cod(Fa, b)."""
    a, b = f.dom, f.cod
    lower = {(y, x): b.hom[(y, f(x))] for y in b.objs for x in a.objs}
    upper = {(x, y): b.hom[(f(x), y)] for x in a.objs for y in b.objs}
    return (EnrichedDistributor(a, b, lower, name=f"{f.name}_*"),
            EnrichedDistributor(b, a, upper, name=f"{f.name}^*"))


def check_adjoint(phi: EnrichedDistributor, psi: EnrichedDistributor) -> bool:
    """phi: C -|-> D left adjoint to psi: D -|-> C."""
    if phi.dom != psi.cod or phi.cod != psi.dom:
        raise StructureError("adjointness needs opposed endpoints")
    return (dist_le(dist_id(phi.dom), dist_compose(psi, phi))
            and dist_le(dist_compose(phi, psi), dist_id(phi.cod)))


def functor_le(f: EnrichedFunctor, g: EnrichedFunctor) -> bool:
    if f.dom != g.dom or f.cod != g.cod:
        raise StructureError("cannot compare non-parallel functors")
    return dist_le(graph_cograph(f)[0], graph_cograph(g)[0])


def functor_iso(f: EnrichedFunctor, g: EnrichedFunctor) -> bool:
    return functor_le(f, g) and functor_le(g, f)


# ---------------------------------------------------------------------------
# Order, symmetrization, density
# ---------------------------------------------------------------------------

def underlying_order(c: EnrichedCategory) -> FrozenSet[Tuple[str, str]]:
    """x <= y iff the types agree and 1_{tx} <= hom(x, y)."""
    out = set()
    for x, y in product(c.objs, c.objs):
        if c.typ[x] == c.typ[y] and \
                c.base.le(c.base.identity(c.typ[x]), c.harr(x, y)):
            out.add((x, y))
    return frozenset(out)

def is_skeletal(c: EnrichedCategory) -> bool:
    order = underlying_order(c)
    return not any(x != y and (y, x) in order for (x, y) in order)


def symmetrize(c: EnrichedCategory) -> EnrichedCategory:
    """hom_s(y, x) = hom(y, x) meet hom(x, y)-involuted."""
    if not c.base.has_involution:
        raise PreconditionError("symmetrization needs a base involution")
    hom = {}
    for y, x in product(c.objs, c.objs):
        hom[(y, x)] = c.base.meet(
            [c.harr(y, x), c.base.involute(c.harr(x, y))]).elem
    return EnrichedCategory(c.base, c.objs, c.typ, hom,
                            name=f"{c.name}.sym" if c.name else "sym")


def is_fully_faithful(f: EnrichedFunctor) -> bool:
    return all(f.dom.hom[(y, x)] == f.cod.hom[(f(y), f(x))]
               for y, x in product(f.dom.objs, f.dom.objs))


def is_fully_dense(f: EnrichedFunctor) -> bool:
    """cod(y, x) is recovered as the join over c of cod(y, Fc) . cod(Fc, x)."""
    b = f.cod
    base = b.base
    for y, x in product(b.objs, b.objs):
        through = [base.compose(b.harr(y, f(cc)), b.harr(f(cc), x))
                   for cc in f.dom.objs]
        got = base.join(through, src=b.typ[x], tgt=b.typ[y])
        if got != b.harr(y, x):
            return False
    return True


# ---------------------------------------------------------------------------
# Closure
# ---------------------------------------------------------------------------

def closure(c: EnrichedCategory, s: Iterable[str]) -> FrozenSet[str]:
    """cl(S) = set of x with 1_{tx} <= join over s of hom(x,s) . hom(s,x)."""
    s = list(s)
    for p in s:
        if p not in c.objs:
            raise StructureError(f"{p!r} is not an object of the category")
    out = set()
    for x in c.objs:
        tx = c.typ[x]
        terms = [c.base.compose(c.harr(x, p), c.harr(p, x)) for p in s]
        total = c.base.join(terms, src=tx, tgt=tx)
        if c.base.le(c.base.identity(tx), total):
            out.add(x)
    return frozenset(out)


def _closure_join(c: EnrichedCategory, s: Sequence[str], x: str) -> Arrow:
    tx = c.typ[x]
    terms = [c.base.compose(c.harr(x, p), c.harr(p, x)) for p in s]
    return c.base.join(terms, src=tx, tgt=tx)


def closure_report(c: EnrichedCategory, bound: int = 5) -> PropertyReport:
    """Closure-operator laws checked over every subset (and subset pair),
    guarded by an object-count bound since the sweep is 4^n."""
    if len(c.objs) > bound:
        raise EnumerationBoundError(
            f"closure report over {len(c.objs)} objects exceeds bound {bound}")
    objs = list(c.objs)
    subsets: List[Tuple[str, ...]] = []
    for r in range(len(objs) + 1):
        from itertools import combinations
        subsets.extend(combinations(objs, r))
    cl = {s: closure(c, s) for s in subsets}

    rep = PropertyReport()
    w = next((s for s in subsets if not set(s) <= cl[s]), None)
    rep.set("increasing", w is None, w)
    w = None
    for s in subsets:
        for t in subsets:
            if set(s) <= set(t) and not cl[s] <= cl[t]:
                w = (s, t)
                break
        if w:
            break
    rep.set("monotone", w is None, w)
    w = next((s for s in subsets if closure(c, cl[s]) != cl[s]), None)
    rep.set("idempotent", w is None, w)
    rep.set("grounded", cl[()] == frozenset(),
            sorted(cl[()]) if cl[()] else None)
    w = None
    for s in subsets:
        for t in subsets:
            union = tuple(o for o in objs if o in set(s) | set(t))
            if cl[union] != (cl[s] | cl[t]):
                w = (s, t, sorted(cl[union] - (cl[s] | cl[t])))
                break
        if w:
            break
    rep.set("additive", w is None, w)
    # membership is equivalent to the join reaching hom(x,x) exactly
    w = None
    for s in subsets:
        for x in objs:
            eq = _closure_join(c, s, x).elem == c.hom[(x, x)]
            if eq != (x in cl[s]):
                w = (s, x)
                break
        if w:
            break
    rep.set("membership-equality", w is None, w)
    return rep


# ---------------------------------------------------------------------------
# Presheaves
# ---------------------------------------------------------------------------

class Presheaf:
    """A type and a vector; vec[y]: typ -> ty in the base."""
    __slots__ = ("typ", "vec")

    def __init__(self, typ: str, vec: Dict[str, str]):
        self.typ = typ
        self.vec = dict(vec)

    def key(self, c: EnrichedCategory) -> Tuple:
        return (self.typ, tuple(self.vec[y] for y in c.objs))

    def arr(self, c: EnrichedCategory, y: str) -> Arrow:
        return Arrow(self.typ, c.typ[y], self.vec[y])

    def __repr__(self) -> str:
        return f"Presheaf({self.typ}, {self.vec})"


def presheaf_ok(c: EnrichedCategory, ph: Presheaf) -> bool:
    for y, y2 in product(c.objs, c.objs):
        got = c.base.compose(c.harr(y2, y), ph.arr(c, y))
        if not c.base.le(got, ph.arr(c, y2)):
            return False
    return True


def all_presheaves(c: EnrichedCategory,
                   bound: int = DEFAULT_ENUM_BOUND) -> List[Presheaf]:
    """Every presheaf of every type, by filtered enumeration of vectors.
    The candidate count per type is the product of hom-lattice sizes."""
    out = []
    for x in c.base.objects:
        pools = [c.base.hom(x, c.typ[y]).elements for y in c.objs]
        count = 1
        for p in pools:
            count *= len(p)
        if count > bound:
            raise EnumerationBoundError(
                f"presheaf enumeration for type {x!r} needs {count} "
                f"candidates, over the bound {bound}")
        for combo in product(*pools):
            ph = Presheaf(x, dict(zip(c.objs, combo)))
            if presheaf_ok(c, ph):
                out.append(ph)
    return out


def presheaf_hom(c: EnrichedCategory, psi: Presheaf, phi: Presheaf) -> Arrow:
    """Single hom arrow of the presheaf category: meet over z of
    psi(z) \\ phi(z), an arrow typ(phi) -> typ(psi)."""
    terms = [c.base.lifting(psi.arr(c, z), phi.arr(c, z)) for z in c.objs]
    return c.base.meet(terms, src=phi.typ, tgt=psi.typ)


def yoneda_presheaf(c: EnrichedCategory, x: str) -> Presheaf:
    return Presheaf(c.typ[x], {z: c.hom[(z, x)] for z in c.objs})


def presheaf_category(c: EnrichedCategory,
                      bound: int = DEFAULT_ENUM_BOUND) -> EnrichedCategory:
    """Objects named ph0, ph1, ... in enumeration order; carries the
    name -> Presheaf table as attribute `presheaves`."""
    phs = all_presheaves(c, bound)
    names = [f"ph{i}" for i in range(len(phs))]
    table = dict(zip(names, phs))
    typ = {n: table[n].typ for n in names}
    hom = {}
    for a in names:
        for b in names:
            hom[(a, b)] = presheaf_hom(c, table[a], table[b]).elem
    pc = EnrichedCategory(c.base, names, typ, hom,
                          name=f"P[{c.name}]" if c.name else "P")
    pc.presheaves = table  # type: ignore[attr-defined]
    return pc


def yoneda(c: EnrichedCategory,
           pc: Optional[EnrichedCategory] = None) -> EnrichedFunctor:
    if pc is None:
        pc = presheaf_category(c)
    table = pc.presheaves  # type: ignore[attr-defined]
    keys = {ph.key(c): n for n, ph in table.items()}
    m = {}
    for x in c.objs:
        k = yoneda_presheaf(c, x).key(c)
        if k not in keys:
            raise StructureError(
                f"representable presheaf of {x!r} missing from the target")
        m[x] = keys[k]
    return EnrichedFunctor(c, pc, m, name="yoneda")


def adjoint_candidate(c: EnrichedCategory, phi: Presheaf) -> Dict[str, str]:
    """The only possible right adjoint vector: psi(x) = meet over z of
    phi(z) \\ hom(z, x), an arrow tx -> typ(phi)."""
    out = {}
    for x in c.objs:
        terms = [c.base.lifting(phi.arr(c, z), c.harr(z, x)) for z in c.objs]
        out[x] = c.base.meet(terms, src=c.typ[x], tgt=phi.typ).elem
    return out


def is_cauchy_presheaf(c: EnrichedCategory, phi: Presheaf) -> bool:
    """Adjointness of (phi, its canonical candidate): the unit inequality
    at the single domain object plus the counit at every object pair."""
    psi = adjoint_candidate(c, phi)
    x0 = phi.typ
    unit_terms = [c.base.compose(Arrow(c.typ[x], x0, psi[x]), phi.arr(c, x))
                  for x in c.objs]
    unit = c.base.join(unit_terms, src=x0, tgt=x0)
    if not c.base.le(c.base.identity(x0), unit):
        return False
    for y, x in product(c.objs, c.objs):
        got = c.base.compose(phi.arr(c, y), Arrow(c.typ[x], x0, psi[x]))
        if not c.base.le(got, c.harr(y, x)):
            return False
    return True


def cauchy_completion(c: EnrichedCategory,
                      bound: int = DEFAULT_ENUM_BOUND) -> EnrichedCategory:
    pc = presheaf_category(c, bound)
    table = pc.presheaves  # type: ignore[attr-defined]
    keep = [n for n in pc.objs if is_cauchy_presheaf(c, table[n])]
    cc = full_subcategory(pc, keep, name=f"cc[{c.name}]" if c.name else "cc")
    cc.presheaves = {n: table[n] for n in keep}  # type: ignore[attr-defined]
    return cc


def is_cauchy_complete(c: EnrichedCategory,
                       bound: int = DEFAULT_ENUM_BOUND) -> bool:
    reps = {yoneda_presheaf(c, x).key(c) for x in c.objs}
    return all(ph.key(c) in reps
               for ph in all_presheaves(c, bound) if is_cauchy_presheaf(c, ph))


# ---------------------------------------------------------------------------
# Change of base, sums, parts
# ---------------------------------------------------------------------------

def change_of_base(lax: LaxFunctor, c: EnrichedCategory) -> EnrichedCategory:
    if c.base != lax.source:
        raise StructureError("category base does not match the functor source")
    typ = {x: lax.obj_map[t] for x, t in c.typ.items()}
    hom = {(x, y): lax.arr_map[c.harr(x, y)].elem
           for x, y in product(c.objs, c.objs)}
    return EnrichedCategory(lax.target, c.objs, typ, hom,
                            name=f"{lax.name}[{c.name}]")


def category_sum(c: EnrichedCategory, d: EnrichedCategory) -> EnrichedCategory:
    """Disjoint union with bottom cross-homs; objects get l./r. prefixes
    only when the name sets collide."""
    if c.base != d.base:
        raise StructureError("sum needs categories over one base")
    base = c.base
    clash = set(c.objs) & set(d.objs)
    lname = (lambda o: f"l.{o}" if clash else o)
    rname = (lambda o: f"r.{o}" if clash else o)
    objs = [lname(o) for o in c.objs] + [rname(o) for o in d.objs]
    typ = {lname(o): c.typ[o] for o in c.objs}
    typ.update({rname(o): d.typ[o] for o in d.objs})
    hom = {}
    for x, y in product(c.objs, c.objs):
        hom[(lname(x), lname(y))] = c.hom[(x, y)]
    for x, y in product(d.objs, d.objs):
        hom[(rname(x), rname(y))] = d.hom[(x, y)]
    for x in c.objs:
        for y in d.objs:
            hom[(lname(x), rname(y))] = base.hom(typ[rname(y)], typ[lname(x)]).bottom()
            hom[(rname(y), lname(x))] = base.hom(typ[lname(x)], typ[rname(y)]).bottom()
    return EnrichedCategory(base, objs, typ, hom,
                            name=f"{c.name}+{d.name}")


def full_subcategory(c: EnrichedCategory, objs: Sequence[str],
                     name: str = "") -> EnrichedCategory:
    keep = [o for o in c.objs if o in set(objs)]
    return EnrichedCategory(
        c.base, keep, {o: c.typ[o] for o in keep},
        {(x, y): c.hom[(x, y)] for x, y in product(keep, keep)},
        name=name or f"{c.name}.full")


def nz_part(c: EnrichedCategory) -> EnrichedCategory:
    """Drop the objects typed by zero objects of the base (identity = bottom)."""
    keep = [o for o in c.objs
            if c.base.ids[c.typ[o]] != c.base.hom(c.typ[o], c.typ[o]).bottom()]
    return full_subcategory(c, keep, name=f"{c.name}.nz")


def with_base(c: EnrichedCategory, q: FiniteQuantaloid) -> EnrichedCategory:
    """Re-house the same object/hom data over another quantaloid (e.g. a
    full subquantaloid or its ambient); shapes are re-checked."""
    return EnrichedCategory(q, c.objs, c.typ, c.hom, name=c.name)


def find_isomorphism(c: EnrichedCategory,
                     d: EnrichedCategory) -> Optional[Dict[str, str]]:
    """A type-preserving bijection with exactly equal homs, or None."""
    if c.base != d.base or len(c.objs) != len(d.objs):
        return None

    remaining = list(c.objs)

    def extend(assign: Dict[str, str], used: set) -> Optional[Dict[str, str]]:
        if len(assign) == len(remaining):
            return dict(assign)
        x = remaining[len(assign)]
        for y in d.objs:
            if y in used or d.typ[y] != c.typ[x]:
                continue
            ok = all(c.hom[(x, z)] == d.hom[(y, assign[z])]
                     and c.hom[(z, x)] == d.hom[(assign[z], y)]
                     for z in assign)
            if ok and c.hom[(x, x)] == d.hom[(y, y)]:
                assign[x] = y
                used.add(y)
                got = extend(assign, used)
                if got is not None:
                    return got
                del assign[x]
                used.discard(y)
        return None

    return extend({}, set())
