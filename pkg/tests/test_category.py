"""Enriched categories, functors, distributors, and the closure operator."""
from itertools import product

import pytest

from qcat import fixtures as F
from qcat.category import (EnrichedCategory, EnrichedDistributor,
                           EnrichedFunctor, category_sum, change_of_base,
                           check_adjoint, closure, closure_report,
                           compose_functors, dist_compose, dist_ext, dist_id,
                           dist_le, dist_lift, enumerate_functors,
                           find_isomorphism, full_subcategory, functor_iso,
                           functor_le, graph_cograph, identity_functor,
                           is_fully_dense, is_fully_faithful, is_skeletal,
                           nz_part, symmetrize, underlying_order, unit_category,
                           validate, validate_category, validate_distributor,
                           validate_functor, with_base)
from qcat.errors import StructureError
from qcat.quantaloid import non_zero_part

CATS = F.test_categories()


@pytest.mark.parametrize("c", CATS, ids=lambda c: c.name)
def test_fixture_categories_validate(c):
    rep = validate_category(c)
    assert rep.ok(), (c.name, rep.failed(), rep.witnesses)


def test_identity_law_violation_detected():
    rep = validate_category(F.cat_l3_bad())
    assert rep.failed() == ["identity-law"]
    assert rep.witnesses["identity-law"]


def test_composition_law_violation_detected():
    # g . f lands strictly above hom(x, z): composition law breaks
    c = EnrichedCategory(F.q2(), ["x", "y", "z"], {o: "*" for o in "xyz"},
                        {("x", "x"): "1", ("y", "y"): "1", ("z", "z"): "1",
                         ("x", "y"): "1", ("y", "z"): "1", ("x", "z"): "0",
                         ("y", "x"): "0", ("z", "y"): "0", ("z", "x"): "0"})
    rep = validate_category(c)
    assert "composition-law" in rep.failed()


def test_wrong_typed_hom_rejected_at_construction():
    with pytest.raises(StructureError):
        EnrichedCategory(F.q2(), ["x"], {"x": "*"}, {("x", "x"): "7"})


def test_validate_dispatcher():
    assert validate(F.cat_q2_pair()).ok()
    assert validate(identity_functor(F.cat_q2_pair())).ok()
    assert validate(dist_id(F.cat_q2_pair())).ok()
    assert validate(F.q2()).ok()
    with pytest.raises(StructureError):
        validate("not a structure")


def test_unit_category():
    c = unit_category(F.dl3(), "*->*:0")
    assert validate_category(c).ok()
    assert len(c.objs) == 1


# ---------------------------------------------------------------------------
# functors
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("f", F.corpus_functors(), ids=lambda f: f.name)
def test_corpus_functors_validate(f):
    rep = validate_functor(f)
    assert rep.ok(), (f.name, rep.failed())


def test_hom_inequality_violation():
    # sending the lower point up reverses a strict order: F1 fails
    c = F.cat_q2_pair()
    f = EnrichedFunctor(c, c, {"x": "y", "y": "x"})
    rep = validate_functor(f)
    assert "hom-inequality" in rep.failed()


def test_type_preservation_checked_first():
    f = EnrichedFunctor(F.cat_dl3_mixed(), F.cat_dl3_mixed(), {"u": "z", "z": "u"})
    rep = validate_functor(f)
    assert not rep.flags["type-preserving"]
    assert "hom-inequality" not in rep.flags


def test_enumerate_functors_counts_monotone_maps():
    c = F.cat_q2_pair()
    fs = enumerate_functors(c, c)
    assert len(fs) == 3   # the three order-preserving self-maps of a 2-chain
    maps = {tuple(sorted(f.map.items())) for f in fs}
    assert (("x", "y"), ("y", "x")) not in maps


def test_compose_functors():
    c = F.cat_q2_pair()
    up = EnrichedFunctor(c, c, {"x": "y", "y": "y"})
    assert compose_functors(up, identity_functor(c)).map == up.map


# ---------------------------------------------------------------------------
# distributors
# ---------------------------------------------------------------------------

def _all_matrices(a, b):
    """Every candidate matrix between two categories (possibly lawless)."""
    keys = [(y, x) for y in b.objs for x in a.objs]
    pools = [sorted(a.base.hom(a.typ[x], b.typ[y]).elements) for (y, x) in keys]
    for combo in product(*pools):
        yield dict(zip(keys, combo))


def _all_distributors(a, b):
    for mat in _all_matrices(a, b):
        d = EnrichedDistributor(a, b, mat)
        if validate_distributor(d).ok():
            yield d


def test_identity_distributor_is_unit():
    for c in [F.cat_q2_pair(), F.cat_l3_pair(), F.pz3cat()]:
        i = dist_id(c)
        assert validate_distributor(i).ok()
        for phi in _all_distributors(c, c):
            assert dist_compose(i, phi).mat == phi.mat
            assert dist_compose(phi, i).mat == phi.mat


def test_composition_is_associative():
    a, b = F.cat_q2_pair(), F.cat_q2_iso()
    ds_ab = list(_all_distributors(a, b))
    ds_ba = list(_all_distributors(b, a))
    for phi in ds_ab[:6]:
        for psi in ds_ba[:6]:
            for chi in ds_ab[:6]:
                lhs = dist_compose(chi, dist_compose(psi, phi))
                rhs = dist_compose(dist_compose(chi, psi), phi)
                assert lhs.mat == rhs.mat


def test_composite_of_lawful_distributors_is_lawful():
    a, b = F.cat_l3_pair(), F.cat_l3_pair()
    for phi in _all_distributors(a, b):
        for psi in _all_distributors(b, a):
            assert validate_distributor(dist_compose(psi, phi)).ok()


def test_lift_is_the_largest_solution():
    """dist_lift(psi, phi) is exactly the join of all Xi with psi.Xi <= phi,
    cross-checked by enumerating every Xi."""
    a = F.cat_q2_pair()
    b = F.cat_q2_iso()
    for psi in _all_distributors(b, b):
        for phi in _all_distributors(a, b):
            best = dist_lift(psi, phi)
            assert dist_le(dist_compose(psi, best), phi)
            for xi in _all_distributors(a, b):
                if dist_le(dist_compose(psi, xi), phi):
                    assert dist_le(xi, best)


def test_ext_is_the_largest_solution():
    a = F.cat_q2_pair()
    b = F.cat_q2_iso()
    for phi in _all_distributors(a, b):
        for psi in _all_distributors(a, a):
            best = dist_ext(phi, psi)
            assert dist_le(dist_compose(best, phi), psi)
            for xi in _all_distributors(b, a):
                if dist_le(dist_compose(xi, phi), psi):
                    assert dist_le(xi, best)


def test_graphs_are_adjoint():
    for f in F.corpus_functors():
        lower, upper = graph_cograph(f)
        assert validate_distributor(lower).ok(), f.name
        assert validate_distributor(upper).ok(), f.name
        assert check_adjoint(lower, upper), f.name


def test_bottom_matrix_is_not_adjoint_to_identity():
    c = F.cat_q2_pair()
    bottom = EnrichedDistributor(
        c, c, {(y, x): "0" for y in c.objs for x in c.objs})
    assert not check_adjoint(dist_id(c), bottom)
    assert not check_adjoint(bottom, dist_id(c))


def test_functor_order_and_iso():
    c = F.cat_q2_pair()
    ident = identity_functor(c)
    up = EnrichedFunctor(c, c, {"x": "y", "y": "y"})
    assert functor_le(ident, up)          # x <= y pointwise
    assert not functor_le(up, ident)
    assert not functor_iso(ident, up)
    swap = EnrichedFunctor(F.cat_q2_iso(), F.cat_q2_iso(), {"x": "y", "y": "x"})
    assert functor_iso(identity_functor(F.cat_q2_iso()), swap)


# ---------------------------------------------------------------------------
# order, symmetrization, density
# ---------------------------------------------------------------------------

def test_underlying_order_and_skeletality():
    c = F.cat_l3_pair()
    assert underlying_order(c) == frozenset(
        {("x", "x"), ("y", "y"), ("x", "y")})
    assert is_skeletal(c)
    assert not is_skeletal(F.cat_q2_iso())


def test_symmetrize_is_idempotent_fixed_point():
    for c in CATS:
        cs = symmetrize(c)
        assert validate_category(cs).ok(), c.name
        assert symmetrize(cs).hom == cs.hom
        # identity on objects is a functor C_s -> C
        f = EnrichedFunctor(cs, c, {o: o for o in c.objs})
        assert validate_functor(f).ok(), c.name


def test_symmetrize_l3_pair_is_numeric_max():
    cs = symmetrize(F.cat_l3_pair())
    assert cs.hom[("x", "y")] == "2"
    assert cs.hom[("y", "x")] == "2"
    assert cs.hom[("x", "x")] == "0"


def test_symmetrize_pz3cat_meets_opposites():
    cs = symmetrize(F.pz3cat())
    assert cs.hom[("i", "x")] == "0"   # {g} meet {gg} is empty
    assert cs.hom[("x", "i")] == "0"


def test_full_faithful_and_dense_inclusions():
    inc = EnrichedFunctor(full_subcategory(F.pz3cat(), ["i"]), F.pz3cat(),
                          {"i": "i"})
    assert is_fully_faithful(inc)
    assert is_fully_dense(inc)
    sym = symmetrize(F.pz3cat())
    inc_s = EnrichedFunctor(full_subcategory(sym, ["i"]), sym, {"i": "i"})
    assert is_fully_faithful(inc_s)
    assert not is_fully_dense(inc_s)


def _cancellable_on_the_right(f):
    """H.F iso K.F forces H iso K, for every pair into every small
    one/two-object target over the same base (brute force)."""
    base = f.cod.base
    unit = base.ids["*"]
    els = sorted(base.hom("*", "*").elements)
    targets = [unit_category(base, "*")]
    for a, b in product(els, els):
        hom = {("u", "u"): unit, ("v", "v"): unit, ("u", "v"): a, ("v", "u"): b}
        t = EnrichedCategory(base, ["u", "v"], {"u": "*", "v": "*"}, hom)
        if validate_category(t).ok():
            targets.append(t)
    for t in targets:
        hs = enumerate_functors(f.cod, t)
        for h in hs:
            for k in hs:
                hf = compose_functors(h, f)
                kf = compose_functors(k, f)
                if functor_iso(hf, kf) and not functor_iso(h, k):
                    return False
    return True


def test_fully_dense_iff_right_cancellable():
    c_iso, c_pair = F.cat_q2_iso(), F.cat_q2_pair()
    dense = EnrichedFunctor(full_subcategory(c_iso, ["x"]), c_iso, {"x": "x"})
    sparse = EnrichedFunctor(full_subcategory(c_pair, ["x"]), c_pair, {"x": "x"})
    assert is_fully_dense(dense)
    assert _cancellable_on_the_right(dense)
    assert not is_fully_dense(sparse)
    assert not _cancellable_on_the_right(sparse)


# ---------------------------------------------------------------------------
# closure
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("c", CATS, ids=lambda c: c.name)
def test_closure_laws(c):
    rep = closure_report(c)
    for law in ("increasing", "monotone", "idempotent", "membership-equality"):
        assert rep.flags[law], (c.name, law, rep.witnesses.get(law))


def test_closure_functoriality():
    # F(cl S) is inside cl(F S)
    for f in F.corpus_functors():
        objs = list(f.dom.objs)
        for r in range(len(objs) + 1):
            from itertools import combinations
            for s in combinations(objs, r):
                lhs = {f(x) for x in closure(f.dom, s)}
                rhs = closure(f.cod, [f(x) for x in s])
                assert lhs <= rhs, (f.name, s)


def test_closure_of_empty_set_collects_zero_typed_objects():
    assert closure(F.cat_q2_pair(), []) == frozenset()
    assert closure(F.cat_dl3_mixed(), []) == frozenset({"z"})


def test_closure_agrees_with_symmetrized_over_divisible_bases():
    # both directions of the comparison: equality over q2/c3/l3 ...
    for c in [F.cat_q2_pair(), F.cat_q2_iso(), F.cat_c3_pair(), F.cat_l3_pair()]:
        from itertools import combinations
        for r in range(len(c.objs) + 1):
            for s in combinations(c.objs, r):
                assert closure(c, s) == closure(symmetrize(c), s), (c.name, s)


def test_closure_separates_from_symmetrized_over_pz3():
    # ... and strict separation on the group-quantale witness
    c = F.pz3cat()
    assert closure(c, ["i"]) == frozenset({"i", "x"})
    assert closure(symmetrize(c), ["i"]) == frozenset({"i"})


def test_closure_additivity_split():
    rep = closure_report(F.diamond3())
    assert not rep.flags["additive"]
    x, z = "x", "z"
    cl_union = closure(F.diamond3(), [x, z])
    assert "y" in cl_union
    assert "y" not in closure(F.diamond3(), [x]) | closure(F.diamond3(), [z])
    # over the non-zero part of the diagonal base, closures stay additive
    nzq = non_zero_part(F.dl3())
    for c in [F.cat_dl3_unit0(), F.cat_dl3_pair()]:
        rep = closure_report(with_base(nz_part(c), nzq))
        assert rep.flags["grounded"] and rep.flags["additive"], c.name


def test_groundedness_split():
    assert closure_report(F.cat_q2_pair()).flags["grounded"]
    assert not closure_report(F.cat_dl3_mixed()).flags["grounded"]


# ---------------------------------------------------------------------------
# sums, parts, isomorphism
# ---------------------------------------------------------------------------

def test_category_sum_shape():
    s = category_sum(F.cat_dl3_pair(), F.cat_dl3_unit2())
    assert validate_category(s).ok()
    assert len(s.objs) == 3
    # cross homs are the bottom of their hom lattice
    assert s.hom[("x", "*")] == "2"


def test_category_sum_prefixes_on_clash():
    s = category_sum(F.cat_q2_pair(), F.cat_q2_pair())
    assert sorted(s.objs) == ["l.x", "l.y", "r.x", "r.y"]
    assert validate_category(s).ok()


def test_nz_part_drops_zero_typed_objects():
    c = F.cat_dl3_mixed()
    nz = nz_part(c)
    assert list(nz.objs) == ["u"]


def test_change_of_base_along_identity_is_identity():
    from qcat.diagonals import identity_lax
    c = F.cat_l3_pair()
    assert change_of_base(identity_lax(F.l3()), c).hom == c.hom


def test_find_isomorphism():
    c = F.cat_q2_iso()
    iso = find_isomorphism(c, c)
    assert iso is not None
    flipped = EnrichedCategory(F.q2(), ["a", "b"], {"a": "*", "b": "*"},
                               {("a", "a"): "1", ("b", "b"): "1",
                                ("a", "b"): "1", ("b", "a"): "1"})
    assert find_isomorphism(c, flipped) is not None
    assert find_isomorphism(c, F.cat_q2_pair()) is None
    assert find_isomorphism(c, unit_category(F.q2(), "*")) is None
