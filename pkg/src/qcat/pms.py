"""Partial metric spaces with exact extended-rational distances.

A partial metric on X assigns p(x, y) in [0, inf] with

    p(x, y) >= p(x, x) max p(y, y)                 (self-distances bound)
    p(z, x) <= p(z, y) - p(y, y) + p(y, x)         (sharp triangle)

where the right side is the `tri` combination of extval.  Self-distance
p(x, x) plays the role of the weight (type) of the point x; points of a
classical metric space all have weight zero.

The module covers validation, the derived (quasi-)metrics, the closure
formula, sampled sequences with exact/approximate limit verdicts, limit
pairs and the finite completion, Hausdorff distance on subsets, the grid
test for exponentiability, and generators (word spaces, terminal samples,
and the discretization into a category over a diagonal quantaloid).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from .category import EnrichedCategory
from .diagonals import diagonal_quantaloid
from .errors import EnumerationBoundError, PreconditionError, StructureError
from .extval import INF, ZERO, ExtVal, fmt_ext, tri
from .quantaloid import FiniteQuantaloid, truncated_addition_chain
from .report import PropertyReport

DistSpec = Union[Callable[[str, str], ExtVal], Dict[Tuple[str, str], object]]


def emax(a: ExtVal, b: ExtVal) -> ExtVal:
    return a if b <= a else b


def emin(a: ExtVal, b: ExtVal) -> ExtVal:
    return a if a <= b else b


def absdiff(a: ExtVal, b: ExtVal) -> ExtVal:
    return emax(a - b, b - a)


class PartialMetricSpace:
    """Finite point set with distances given by a table or a function.

    Function-backed spaces (large generated ones) are never materialized;
    operations that need the full matrix say so in their docstrings.
    """

    def __init__(self, points: Sequence[str], dist: DistSpec, name: str = ""):
        self.points = tuple(str(x) for x in points)
        self.name = name
        if len(set(self.points)) != len(self.points):
            raise StructureError(f"duplicate points in {name or 'space'}")
        self._index = {x: i for i, x in enumerate(self.points)}
        if callable(dist):
            self._fn: Optional[Callable[[str, str], ExtVal]] = dist
            self._tab: Optional[Dict[Tuple[str, str], ExtVal]] = None
        else:
            tab = {(str(x), str(y)): ExtVal(v) for (x, y), v in dist.items()}
            want = set(product(self.points, self.points))
            if set(tab) != want:
                missing = sorted(want - set(tab))[:3]
                extra = sorted(set(tab) - want)[:3]
                raise StructureError(
                    f"distance table must cover exactly all point pairs "
                    f"(missing {missing}, extra {extra})")
            self._fn = None
            self._tab = tab

    @property
    def explicit(self) -> bool:
        return self._tab is not None

    def p(self, x: str, y: str) -> ExtVal:
        if x not in self._index or y not in self._index:
            raise StructureError(f"unknown point in distance query: {x!r}, {y!r}")
        if self._tab is not None:
            return self._tab[(x, y)]
        return ExtVal(self._fn(x, y))

    def values(self) -> List[ExtVal]:
        """Sorted distinct distance values; walks the full matrix."""
        seen = {self.p(x, y) for x in self.points for y in self.points}
        return sorted(seen)

    def __repr__(self) -> str:
        return f"PartialMetricSpace({self.name or ''} {len(self.points)} points)"


def validate_pms(x: PartialMetricSpace,
                 points: Optional[Sequence[str]] = None) -> PropertyReport:
    """Axiom check, cubic in the number of points (restrictable)."""
    pts = list(points) if points is not None else list(x.points)
    rep = PropertyReport()
    w = None
    for a, b in product(pts, pts):
        if not x.p(a, b) >= emax(x.p(a, a), x.p(b, b)):
            w = (a, b, fmt_ext(x.p(a, b)), fmt_ext(x.p(a, a)), fmt_ext(x.p(b, b)))
            break
    rep.set("self-distances-bound", w is None, w)
    w = None
    for z, y, a in product(pts, pts, pts):
        lhs = x.p(z, a)
        rhs = tri(x.p(z, y), x.p(y, y), x.p(y, a))
        if not lhs <= rhs:
            w = (z, y, a, fmt_ext(lhs), fmt_ext(rhs))
            break
    rep.set("sharp-triangle", w is None, w)
    rep.info["points"] = len(pts)
    return rep


def derived_metrics(x: PartialMetricSpace) -> Dict[str, PartialMetricSpace]:
    """The classical (quasi-)metrics induced by a partial metric:

      p0(a, b)    = p(a, b) - p(a, a)
      p1(a, b)    = p(a, b) - p(b, b)
      pK(a, b)    = 2 p(a, b) - p(a, a) - p(b, b)
      p-sym(a, b) = (p(a, b) - p(b, b)) max (p(b, a) - p(a, a))

    All have zero self-distances; subtraction is the truncated one."""
    def p0(a, b):
        return x.p(a, b) - x.p(a, a)

    def p1(a, b):
        return x.p(a, b) - x.p(b, b)

    def pk(a, b):
        v = x.p(a, b)
        if v.is_inf:
            return INF
        return (v + v) - (x.p(a, a) + x.p(b, b))

    def psym(a, b):
        return emax(x.p(a, b) - x.p(b, b), x.p(b, a) - x.p(a, a))

    out = {}
    for tag, fn in (("p0", p0), ("p1", p1), ("pK", pk), ("p-sym", psym)):
        out[tag] = PartialMetricSpace(x.points, fn,
                                      name=f"{tag}[{x.name}]" if x.name else tag)
    return out


# ---------------------------------------------------------------------------
# Closure
# ---------------------------------------------------------------------------

def _require_finite_types(x: PartialMetricSpace) -> None:
    for t in x.points:
        if x.p(t, t).is_inf:
            raise PreconditionError(
                f"point {t!r} has infinite self-distance; the closure "
                f"formula only applies to finitely-weighted points")


def closure_membership(x: PartialMetricSpace, s: Iterable[str], pt: str) -> bool:
    """pt lies in the closure of s iff some member is at two-sided
    vanishing distance:  min over m of
    (p(pt,m) - p(m,m)) + (p(m,pt) - p(pt,pt))  equals 0."""
    _require_finite_types(x)
    if pt not in x.points:
        raise StructureError(f"{pt!r} is not a point of the space")
    best = INF
    for m in s:
        if m not in x.points:
            raise StructureError(f"{m!r} is not a point of the space")
        gap = (x.p(pt, m) - x.p(m, m)) + (x.p(m, pt) - x.p(pt, pt))
        best = emin(best, gap)
    return best == ZERO


def closure_set(x: PartialMetricSpace, s: Iterable[str]) -> FrozenSet[str]:
    s = list(s)
    return frozenset(pt for pt in x.points if closure_membership(x, s, pt))


# ---------------------------------------------------------------------------
# Sampled sequences
# ---------------------------------------------------------------------------

class SampledSequence:
    """A sequence observed up to a horizon, with a tolerance for the
    approximate verdicts and an optional index from which it is constant
    (checked; this is what makes exact verdicts possible)."""

    def __init__(self, space: PartialMetricSpace,
                 gen: Union[Callable[[int], str], Sequence[str]],
                 horizon: int, eps: object = "0",
                 constant_from: Optional[int] = None, name: str = ""):
        if horizon < 2:
            raise PreconditionError(f"horizon must be at least 2, got {horizon}")
        self.space = space
        self.horizon = int(horizon)
        self.eps = ExtVal(eps)
        if self.eps.is_inf:
            raise PreconditionError("tolerance must be finite")
        self.name = name
        if callable(gen):
            self._gen = gen
        else:
            seq = [str(p) for p in gen]
            if len(seq) < horizon + 1:
                raise PreconditionError(
                    f"need {horizon + 1} samples, got {len(seq)}")
            self._gen = seq.__getitem__
        self.constant_from = constant_from
        pts = set(space.points)
        for n in range(horizon + 1):
            if self.pt(n) not in pts:
                raise StructureError(f"sample x_{n} = {self.pt(n)!r} "
                                     f"is not a point of the space")
        if constant_from is not None:
            if constant_from < 0:
                raise PreconditionError("constant_from must be nonnegative")
            c = self.pt(min(constant_from, horizon))
            for n in range(min(constant_from, horizon), horizon + 1):
                if self.pt(n) != c:
                    raise StructureError(
                        f"declared constant from {constant_from} but "
                        f"x_{n} = {self.pt(n)!r} differs from {c!r}")

    def pt(self, n: int) -> str:
        return str(self._gen(n))

    @property
    def exact(self) -> bool:
        return self.constant_from is not None and self.constant_from <= self.horizon

    def window(self) -> range:
        return range((self.horizon + 1) // 2, self.horizon + 1)

    def __repr__(self) -> str:
        return f"SampledSequence({self.name or ''} N={self.horizon})"


class Verdict:
    """Outcome of a limit question: a boolean, its mode ("exact" when the
    sequence tail is constant, "approximate" otherwise), the estimated
    value when one is meaningful, and the index from which the guarantee
    holds."""

    def __init__(self, ok: bool, mode: str, value: Optional[ExtVal] = None,
                 index: Optional[int] = None,
                 detail: Optional[Dict[str, object]] = None):
        self.ok = bool(ok)
        self.mode = mode
        self.value = value
        self.index = index
        self.detail = dict(detail or {})

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        v = "" if self.value is None else f" value={fmt_ext(self.value)}"
        return f"Verdict({'ok' if self.ok else 'FAIL'} {self.mode}{v})"


def _spread(vals: Sequence[ExtVal]) -> ExtVal:
    return max(vals) - min(vals)


def _own(space: PartialMetricSpace, *seqs: SampledSequence) -> None:
    for s in seqs:
        if s.space is not space:
            raise StructureError("sequence was sampled in a different space")


def seq_type(space: PartialMetricSpace, xs: SampledSequence) -> Verdict:
    """Limit of the self-distances p(x_n, x_n)."""
    _own(space, xs)
    p = xs.space.p
    if xs.exact:
        c = xs.pt(xs.constant_from)
        return Verdict(True, "exact", p(c, c), xs.constant_from)
    w = xs.window()
    vals = [p(xs.pt(n), xs.pt(n)) for n in w]
    spread = _spread(vals)
    return Verdict(spread <= xs.eps, "approximate", vals[-1], w.start,
                   {"spread": fmt_ext(spread)})


def seq_cauchy(space: PartialMetricSpace, xs: SampledSequence) -> Verdict:
    """Does p(x_n, x_m) settle?  The value reported is the (estimated)
    joint limit, the weight of the ideal limit point."""
    _own(space, xs)
    p = xs.space.p
    if xs.exact:
        c = xs.pt(xs.constant_from)
        return Verdict(True, "exact", p(c, c), xs.constant_from)
    w = xs.window()
    vals = [p(xs.pt(n), xs.pt(m)) for n in w for m in w]
    spread = _spread(vals)
    last = p(xs.pt(xs.horizon), xs.pt(xs.horizon))
    return Verdict(spread <= xs.eps, "approximate", last, w.start,
                   {"spread": fmt_ext(spread)})


def seq_equivalent(space: PartialMetricSpace, xs: SampledSequence,
                   ys: SampledSequence) -> Verdict:
    """One pooled test: both mixed nets and both self nets must settle on
    a single common value."""
    _own(space, xs, ys)
    p = xs.space.p
    if xs.exact and ys.exact:
        a = xs.pt(xs.constant_from)
        b = ys.pt(ys.constant_from)
        vals = [p(a, b), p(b, a), p(a, a), p(b, b)]
        ok = len(set(vals)) == 1
        return Verdict(ok, "exact", vals[0],
                       max(xs.constant_from, ys.constant_from),
                       {"net-values": [fmt_ext(v) for v in vals]})
    wx, wy = xs.window(), ys.window()
    pool: List[ExtVal] = []
    pool += [p(xs.pt(n), ys.pt(m)) for n in wx for m in wy]
    pool += [p(ys.pt(n), xs.pt(m)) for n in wy for m in wx]
    pool += [p(xs.pt(n), xs.pt(m)) for n in wx for m in wx]
    pool += [p(ys.pt(n), ys.pt(m)) for n in wy for m in wy]
    spread = _spread(pool)
    eps = emax(xs.eps, ys.eps)
    return Verdict(spread <= eps, "approximate",
                   p(xs.pt(xs.horizon), ys.pt(ys.horizon)),
                   max(wx.start, wy.start), {"spread": fmt_ext(spread)})


def converges_to(space: PartialMetricSpace, xs: SampledSequence,
                 target: str) -> Verdict:
    """x_n -> target iff p(target, x_n), p(x_n, target) and p(x_n, x_n)
    all tend to p(target, target); from the reported index on, every
    sampled value is within the tolerance (equal, in exact mode)."""
    _own(space, xs)
    if target not in xs.space.points:
        raise StructureError(f"{target!r} is not a point of the space")
    p = xs.space.p
    want = p(target, target)
    if xs.exact:
        c = xs.pt(xs.constant_from)
        vals = {"to": p(target, c), "from": p(c, target), "self": p(c, c)}
        ok = all(v == want for v in vals.values())
        return Verdict(ok, "exact", want, xs.constant_from,
                       {k: fmt_ext(v) for k, v in vals.items()})
    w = xs.window()
    worst = ZERO
    for n in w:
        xn = xs.pt(n)
        for v in (p(target, xn), p(xn, target), p(xn, xn)):
            worst = emax(worst, absdiff(v, want))
    return Verdict(worst <= xs.eps, "approximate", want, w.start,
                   {"worst-gap": fmt_ext(worst)})


# ---------------------------------------------------------------------------
# Limit pairs and completion
# ---------------------------------------------------------------------------

class CauchyPair:
    """An ideal limit point presented by its distances to and from the
    space: q is the weight, phi(y) the distance from y into the limit,
    psi(y) the distance from the limit back to y."""

    def __init__(self, space: PartialMetricSpace, q: object,
                 phi: Dict[str, object], psi: Dict[str, object],
                 name: str = ""):
        self.space = space
        self.q = ExtVal(q)
        if self.q.is_inf:
            raise StructureError("the weight q of a limit pair must be finite")
        self.name = name
        if set(phi) != set(space.points) or set(psi) != set(space.points):
            raise StructureError("phi and psi must cover exactly the points")
        self.phi = {k: ExtVal(v) for k, v in phi.items()}
        self.psi = {k: ExtVal(v) for k, v in psi.items()}

    def key(self) -> Tuple:
        return (tuple(self.phi[p] for p in self.space.points),
                tuple(self.psi[p] for p in self.space.points))

    def __repr__(self) -> str:
        return f"CauchyPair({self.name or ''} q={fmt_ext(self.q)})"


def pair_self_distance(space: PartialMetricSpace,
                       psi: Dict[str, ExtVal], phi: Dict[str, ExtVal]) -> ExtVal:
    """min over z of (psi(z) - p(z,z)) + phi(z); INF on the empty space."""
    best = INF
    for z in space.points:
        best = emin(best, (psi[z] - space.p(z, z)) + phi[z])
    return best


def pair_distance(c1: CauchyPair, c2: CauchyPair) -> ExtVal:
    if c1.space is not c2.space:
        raise StructureError("limit pairs live over different spaces")
    return pair_self_distance(c1.space, c1.psi, c2.phi)


def validate_cauchy_pair(cp: CauchyPair) -> PropertyReport:
    x, q, phi, psi = cp.space, cp.q, cp.phi, cp.psi
    p = x.p
    rep = PropertyReport()
    w = None
    for y, a in product(x.points, x.points):
        if not phi[y] <= tri(p(y, a), p(a, a), phi[a]):
            w = (y, a)
            break
    rep.set("phi-action", w is None, w)
    w = next((y for y in x.points if not emax(q, p(y, y)) <= phi[y]), None)
    rep.set("phi-floor", w is None, w)
    w = None
    for y, a in product(x.points, x.points):
        if not psi[y] <= tri(psi[a], p(a, a), p(a, y)):
            w = (y, a)
            break
    rep.set("psi-action", w is None, w)
    w = next((y for y in x.points if not emax(q, p(y, y)) <= psi[y]), None)
    rep.set("psi-floor", w is None, w)
    unit = pair_self_distance(x, psi, phi)
    rep.set("unit", unit <= q, None if unit <= q else fmt_ext(unit))
    w = None
    for y, a in product(x.points, x.points):
        if not p(y, a) <= (phi[y] - q) + psi[a]:
            w = (y, a)
            break
    rep.set("counit", w is None, w)
    return rep


def seq_to_cauchy_pair(space: PartialMetricSpace,
                       xs: SampledSequence) -> CauchyPair:
    """Extract (q, phi, psi) from the tail.  Exact when the tail is
    constant; otherwise the horizon estimates are used and validated,
    and a failing estimate raises rather than returning a bogus pair.
    Intended for small explicit spaces (builds full vectors)."""
    _own(space, xs)
    verdict = seq_cauchy(space, xs)
    if not verdict.ok:
        raise PreconditionError(
            "sequence is not Cauchy at the sampled tolerance; "
            "no limit pair to extract")
    p = xs.space.p
    anchor = xs.pt(xs.constant_from if xs.exact else xs.horizon)
    q = p(anchor, anchor)
    phi = {y: p(y, anchor) for y in xs.space.points}
    psi = {y: p(anchor, y) for y in xs.space.points}
    cp = CauchyPair(xs.space, q, phi, psi, name=f"lim[{xs.name}]")
    rep = validate_cauchy_pair(cp)
    if not rep.ok():
        raise StructureError(
            f"tail estimates violate the limit-pair laws: {rep.failed()}")
    return cp


def reconstruct_sequence(cp: CauchyPair, horizon: int = 4) -> SampledSequence:
    """A sequence with the given limit pair: on a finite space the
    minimizer of (psi(z) - p(z,z)) + phi(z) realizes the weight, and the
    constant sequence there is equivalent to any sequence presenting the
    pair."""
    x = cp.space
    if not x.points:
        raise PreconditionError("cannot reconstruct over an empty space")
    best, best_pt = None, None
    for z in x.points:
        v = (cp.psi[z] - x.p(z, z)) + cp.phi[z]
        if best is None or v < best:
            best, best_pt = v, z
    return SampledSequence(x, lambda n: best_pt, horizon, "0",
                           constant_from=0, name=f"rep[{cp.name}]")


def complete_finite(x: PartialMetricSpace,
                    bound: int = 300000) -> PartialMetricSpace:
    """All limit pairs over a finite space, deduplicated, plus the point
    at infinite weight; distances between pairs are
    min over z of (psi1(z) - p(z,z)) + phi2(z).

    Vector entries can be searched over the occurring distance values
    (plus infinity) without loss: over a finite space every limit vector
    is realized by an eventually constant sequence.  The candidate count
    per vector is values**points and is guarded by `bound`.

    The result carries `pairs` (name -> (phi, psi)) and `embedding`
    (point -> name of its representable pair)."""
    p = x.p
    pts = list(x.points)
    vals = sorted(set(x.values()) | {INF})
    count = len(vals) ** len(pts)
    if count > bound:
        raise EnumerationBoundError(
            f"completion needs {count} candidate vectors per side, "
            f"over the bound {bound}")

    def phis() -> List[Dict[str, ExtVal]]:
        out = []
        for combo in product(vals, repeat=len(pts)):
            v = dict(zip(pts, combo))
            if any(not p(y, y) <= v[y] for y in pts):
                continue
            if all(v[y] <= tri(p(y, a), p(a, a), v[a])
                   for y in pts for a in pts):
                out.append(v)
        return out

    def psis() -> List[Dict[str, ExtVal]]:
        out = []
        for combo in product(vals, repeat=len(pts)):
            v = dict(zip(pts, combo))
            if any(not p(y, y) <= v[y] for y in pts):
                continue
            if all(v[y] <= tri(v[a], p(a, a), p(a, y))
                   for y in pts for a in pts):
                out.append(v)
        return out

    pairs: List[Tuple[Tuple, Dict[str, ExtVal], Dict[str, ExtVal]]] = []
    for phi in phis():
        for psi in psis():
            q = pair_self_distance(x, psi, phi)
            if q.is_inf:
                continue
            if any(not q <= phi[y] or not q <= psi[y] for y in pts):
                continue
            if not all(p(y, a) <= (phi[y] - q) + psi[a]
                       for y in pts for a in pts):
                continue
            key = (tuple(phi[t] for t in pts), tuple(psi[t] for t in pts))
            pairs.append((key, phi, psi))
    pairs.sort(key=lambda t: t[0])

    names = [f"c{i}" for i in range(len(pairs))]
    table: Dict[str, Tuple[Dict[str, ExtVal], Dict[str, ExtVal]]] = {}
    for nm, (_, phi, psi) in zip(names, pairs):
        table[nm] = (phi, psi)
    inf_vec = {t: INF for t in pts}
    table["inf"] = (dict(inf_vec), dict(inf_vec))
    names.append("inf")

    dist = {}
    for a in names:
        for b in names:
            dist[(a, b)] = pair_self_distance(x, table[a][1], table[b][0])
    out = PartialMetricSpace(names, dist,
                             name=f"complete[{x.name}]" if x.name else "complete")
    out.pairs = table  # type: ignore[attr-defined]
    embedding = {}
    bykey = {(tuple(phi[t] for t in pts), tuple(psi[t] for t in pts)): nm
             for nm, (phi, psi) in table.items()}
    for t in pts:
        k = (tuple(p(z, t) for z in pts), tuple(p(t, z) for z in pts))
        if k not in bykey:
            raise StructureError(f"representable pair of {t!r} missing "
                                 f"from the completion")
        embedding[t] = bykey[k]
    out.embedding = embedding  # type: ignore[attr-defined]
    return out


# ---------------------------------------------------------------------------
# Hausdorff distance
# ---------------------------------------------------------------------------

def subset_name(members: Iterable[str]) -> str:
    return "{" + ",".join(sorted(str(m) for m in members)) + "}"


def hausdorff(x: PartialMetricSpace,
              subsets: Optional[Sequence[Iterable[str]]] = None,
              bound: int = 4096) -> PartialMetricSpace:
    """p_H(T, S) = max over t of min over s of p(t, s).

    With no explicit subsets, all nonempty subsets whose members share
    one self-distance are used (on those, p_H is again a partial
    metric).  Arbitrary subsets may violate the axioms; pass them
    explicitly to inspect that."""
    if subsets is None:
        groups: List[Tuple[str, ...]] = []
        for r in range(1, len(x.points) + 1):
            for combo in combinations(x.points, r):
                weights = {x.p(t, t) for t in combo}
                if len(weights) == 1:
                    groups.append(combo)
        if len(groups) > bound:
            raise EnumerationBoundError(
                f"{len(groups)} typed subsets exceed the bound {bound}")
    else:
        groups = []
        for s in subsets:
            members = tuple(str(m) for m in s)
            if not members:
                raise PreconditionError(
                    "the empty subset has no Hausdorff distance")
            for m in members:
                if m not in x.points:
                    raise StructureError(f"{m!r} is not a point of the space")
            groups.append(members)
    names = [subset_name(g) for g in groups]
    if len(set(names)) != len(names):
        raise StructureError("duplicate subsets")
    byname = dict(zip(names, groups))
    dist = {}
    for na, nb in product(names, names):
        ta, tb = byname[na], byname[nb]
        dist[(na, nb)] = max(min(x.p(t, s) for s in tb) for t in ta)
    return PartialMetricSpace(names, dist,
                              name=f"hausdorff[{x.name}]" if x.name else "hausdorff")


def hausdorff_violations(x: PartialMetricSpace,
                         subsets: Sequence[Iterable[str]]) -> PropertyReport:
    return validate_pms(hausdorff(x, subsets))


# ---------------------------------------------------------------------------
# Exponentiability
# ---------------------------------------------------------------------------

EXPONENTIABLE_EXACT = "EXPONENTIABLE_EXACT"
NOT_EXPONENTIABLE = "NOT_EXPONENTIABLE"
NO_VIOLATION_ON_GRID = "NO_VIOLATION_ON_GRID"


def exponentiable(x: PartialMetricSpace, step: object, cap: object
                  ) -> Tuple[str, Optional[Dict[str, str]], Dict[str, object]]:
    """Search a rational grid for failures of between-point interpolation:
    a violation is a grid triple (u, v, w) and points x0, x2 with

        p(x0, x2) <= u - v + w,   p(x0,x0) max v <= u,   p(x2,x2) max v <= w

    but no x1 of weight exactly v with p(x0,x1) <= u and p(x1,x2) <= w.
    A finite-distance-free space is exponentiable outright; otherwise a
    found violation is definitive and absence of one certifies the grid
    only (exact when every finite distance is a step multiple below the
    cap, as noted in the info)."""
    step_e, cap_e = ExtVal(step), ExtVal(cap)
    if step_e.is_inf or step_e == ZERO:
        raise PreconditionError("grid step must be finite and positive")
    if cap_e.is_inf or cap_e == ZERO:
        raise PreconditionError("grid cap must be finite and positive")
    d, m = step_e.frac, cap_e.frac
    grid = [d * i for i in range(int(m / d) + 1)]

    finite_vals = [v for v in x.values() if not v.is_inf] if x.points else []
    info: Dict[str, object] = {
        "grid-size": len(grid), "step": fmt_ext(step_e), "cap": fmt_ext(cap_e),
    }
    if not x.points or not finite_vals:
        info["reason"] = ("empty space" if not x.points
                          else "no finite distances")
        return (EXPONENTIABLE_EXACT, None, info)
    on_grid = all(v.frac <= m and (v.frac / d).denominator == 1
                  for v in finite_vals)
    info["distances-on-grid"] = on_grid
    info["note"] = ("grid elimination is exact: every finite distance is "
                    "a step multiple within the cap" if on_grid else
                    "distances off the grid: absence of a violation "
                    "certifies the grid only")

    pts = list(x.points)
    best_key = None
    best = None
    for v, u, w in product(grid, grid, grid):
        ue, ve, we = ExtVal(u), ExtVal(v), ExtVal(w)
        rhs = u - v + w
        for i0, x0 in enumerate(pts):
            if not emax(x.p(x0, x0), ve) <= ue:
                continue
            for i2, x2 in enumerate(pts):
                if not emax(x.p(x2, x2), ve) <= we:
                    continue
                p02 = x.p(x0, x2)
                if p02.is_inf or p02.frac > rhs:
                    continue
                found = any(
                    x.p(x1, x1) == ve and x.p(x0, x1) <= ue and x.p(x1, x2) <= we
                    for x1 in pts)
                if found:
                    continue
                slack = ((u - emax(x.p(x0, x0), ve).frac)
                         + (w - emax(x.p(x2, x2), ve).frac)
                         + (rhs - p02.frac))
                key = (slack, v, u, w, i0, i2)
                if best_key is None or key < best_key:
                    best_key = key
                    best = {"u": fmt_ext(ExtVal(u)), "v": fmt_ext(ve),
                            "w": fmt_ext(ExtVal(w)), "x0": x0, "x2": x2,
                            "slack": fmt_ext(ExtVal(slack))}
    if best is not None:
        return (NOT_EXPONENTIABLE, best, info)
    return (NO_VIOLATION_ON_GRID, None, info)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def word_space(alphabet: Iterable[str], max_len: int) -> PartialMetricSpace:
    """Nonempty words of length <= max_len; p(v, w) = 2^-k with k the
    first position (1-based) where the words disagree, counting past the
    end of a prefix; so p(w, w) = 2^-(len(w)+1).  Function-backed: the
    point list is full but no matrix is stored."""
    letters = sorted(set(str(a) for a in alphabet))
    if not letters or any(len(a) != 1 for a in letters):
        raise PreconditionError("alphabet must be nonempty single characters")
    if max_len < 1:
        raise PreconditionError("max_len must be at least 1")
    points: List[str] = []
    frontier = [""]
    for _ in range(max_len):
        frontier = [w + a for w in frontier for a in letters]
        points.extend(frontier)
    points.sort(key=lambda w: (len(w), w))

    def dist(v: str, w: str) -> ExtVal:
        k = len(v) + 1 if len(v) == len(w) else min(len(v), len(w)) + 1
        for i, (a, b) in enumerate(zip(v, w)):
            if a != b:
                k = i + 1
                break
        return ExtVal(Fraction(1, 2 ** k))

    return PartialMetricSpace(points, dist,
                              name=f"words({''.join(letters)},{max_len})")


def terminal_sample(values: Iterable[object]) -> PartialMetricSpace:
    """Finite sample of the one-point-space presheaves: points are
    weights themselves, p(a, b) = a max b."""
    vals = sorted({ExtVal(v) for v in values})
    if not vals:
        raise PreconditionError("need at least one value")
    names = [fmt_ext(v) for v in vals]
    byname = dict(zip(names, vals))
    dist = {(a, b): emax(byname[a], byname[b])
            for a, b in product(names, names)}
    return PartialMetricSpace(names, dist, name=f"terminal({len(vals)})")


@lru_cache(maxsize=32)
def _diag_chain(n: int) -> FiniteQuantaloid:
    return diagonal_quantaloid(truncated_addition_chain(n))


def discretize_to_category(x: PartialMetricSpace, denominator: int,
                           cap: object) -> EnrichedCategory:
    """View a space with distances in (1/denominator) * Z as a category
    over the diagonal quantaloid of a truncated addition chain: the type
    of a point is its scaled self-distance, hom(a, b) its scaled
    distance; values at or above the cap (and infinity) land on the top
    truncation element."""
    if denominator < 1:
        raise PreconditionError("denominator must be a positive integer")
    cap_e = ExtVal(cap)
    if cap_e.is_inf:
        raise PreconditionError("cap must be finite")
    n_frac = cap_e.frac * denominator
    if n_frac.denominator != 1 or n_frac <= 0:
        raise PreconditionError(
            f"cap x denominator must be a positive integer, got {n_frac}")
    n = int(n_frac)
    for t in x.points:
        if not x.p(t, t) < cap_e:
            raise PreconditionError(
                f"cap must exceed every self-distance; point {t!r} "
                f"has weight {fmt_ext(x.p(t, t))}")

    def scale(v: ExtVal) -> int:
        if v.is_inf or v >= cap_e:
            return n
        f = v.frac * denominator
        if f.denominator != 1:
            raise StructureError(
                f"distance {fmt_ext(v)} is not a multiple of 1/{denominator}")
        return int(f)

    base = _diag_chain(n)
    label = lambda k: f"*->*:{k}"
    typ = {t: label(scale(x.p(t, t))) for t in x.points}
    hom = {(a, b): str(scale(x.p(a, b)))
           for a, b in product(x.points, x.points)}
    return EnrichedCategory(base, x.points, typ, hom,
                            name=f"disc[{x.name}]" if x.name else "disc")
