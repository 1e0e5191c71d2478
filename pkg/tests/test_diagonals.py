"""The diagonal construction D(Q) and the lax functors between Q, its
locale core, and D(Q)."""
from itertools import product

import pytest

from qcat import fixtures as F
from qcat.category import underlying_order, change_of_base
from qcat.diagonals import (LaxFunctor, check_lax_functor, compose_lax,
                            diagonal_hom, diagonal_quantaloid, embed_I,
                            identity_lax, lax_full_faithful, project_J0,
                            project_J1, project_K)
from qcat.errors import StructureError
from qcat.quantaloid import (Arrow, analyze_properties, symmetry_witness,
                             underlying_locale, validate_quantaloid)

CORPUS = F.corpus_quantaloids()


def _lab(e):
    return f"*->*:{e}"


def _arr(f, g, d):
    return Arrow(_lab(f), _lab(g), d)


# ---------------------------------------------------------------------------
# the construction itself
# ---------------------------------------------------------------------------

def test_dq2_homs():
    dq = diagonal_quantaloid(F.q2())
    assert sorted(dq.objects) == [_lab("0"), _lab("1")]
    assert sorted(dq.hom(_lab("1"), _lab("1")).elements) == ["0", "1"]
    for f, g in product(["0", "1"], ["0", "1"]):
        if (f, g) != ("1", "1"):
            assert sorted(dq.hom(_lab(f), _lab(g)).elements) == ["0"]


DL3_HOMS = {("0", "0"): ["0", "1", "2"], ("0", "1"): ["1", "2"],
            ("0", "2"): ["2"], ("1", "1"): ["1", "2"], ("1", "2"): ["2"],
            ("2", "2"): ["2"]}


def test_dl3_homs():
    dq = F.dl3()
    for (f, g), els in DL3_HOMS.items():
        assert sorted(dq.hom(_lab(f), _lab(g)).elements) == els
        assert sorted(dq.hom(_lab(g), _lab(f)).elements) == els  # symmetric base


def test_dl3_is_valid_and_has_unique_zero_object():
    dq = F.dl3()
    assert validate_quantaloid(dq).ok()
    zeros = [a for a in dq.objects if dq.ids[a] == dq.hom(a, a).bottom()]
    assert zeros == [_lab("2")]


def test_hom_membership_matches_the_splitting_predicate():
    from qcat.quantaloid import is_diagonal
    q, dq = F.l3(), F.dl3()
    for f, g in product("012", "012"):
        for d in "012":
            member = d in dq.hom(_lab(f), _lab(g))
            split = is_diagonal(q, Arrow("*", "*", f), Arrow("*", "*", g),
                                Arrow("*", "*", d))
            assert member == split


def test_dl3_composition_example():
    dq = F.dl3()
    d = _arr("0", "1", "1")
    e = _arr("1", "0", "1")
    assert dq.compose(e, d) == _arr("0", "0", "1")
    # through the zero object everything collapses to the bottom diagonal
    assert dq.compose(_arr("2", "0", "2"), _arr("0", "2", "2")).elem == "2"


def test_identity_diagonal_is_the_arrow_itself():
    dq = F.dl3()
    for e in "012":
        assert dq.ids[_lab(e)] == e


@pytest.mark.parametrize("q", CORPUS, ids=lambda q: q.name)
def test_diagonal_quantaloid_validates(q):
    dq = diagonal_quantaloid(q)
    rep = validate_quantaloid(dq)
    assert rep.ok(), rep.failed()


@pytest.mark.parametrize("q", CORPUS, ids=lambda q: q.name)
def test_symmetry_transfers(q):
    # all corpus bases are symmetric, so D(Q) is too, with the identity involution
    dq = diagonal_quantaloid(q)
    assert symmetry_witness(q) is None
    assert dq.inv is not None
    assert symmetry_witness(dq) is None


def test_asymmetric_base_gives_no_involution():
    from helpers import left_zero_quantale
    q = left_zero_quantale()
    dq = diagonal_quantaloid(q)
    assert dq.inv is None
    assert validate_quantaloid(dq).ok()


@pytest.mark.parametrize("q", CORPUS, ids=lambda q: q.name)
def test_divisibility_transfers(q):
    want = analyze_properties(q).flags["divisible"]
    got = analyze_properties(diagonal_quantaloid(q)).flags["divisible"]
    assert want == got


@pytest.mark.parametrize("q", [F.q2(), F.c3(), F.l3(), F.diamond()],
                         ids=lambda q: q.name)
def test_divisible_base_gives_downset_homs(q):
    # over a divisible base the diagonals of (f, g) are exactly ↓(f ∧ g)
    dq = diagonal_quantaloid(q)
    lab = q.hom("*", "*")
    for f, g in product(lab.elements, lab.elements):
        down = sorted(d for d in lab.elements if lab.le(d, lab.meet2(f, g)))
        assert sorted(diagonal_hom(q, Arrow("*", "*", f), Arrow("*", "*", g))) == down


# ---------------------------------------------------------------------------
# lax functors
# ---------------------------------------------------------------------------

def test_identity_and_composition_of_lax_functors():
    q = F.l3()
    i = identity_lax(q)
    rep = check_lax_functor(i)
    assert rep.ok() and rep.flags["is-homomorphism"]
    assert compose_lax(i, i).obj_map == i.obj_map


def test_embed_I_is_full_faithful_homomorphism():
    for q in [F.q2(), F.l3(), F.c3(), F.diamond()]:
        dq = diagonal_quantaloid(q)
        emb = embed_I(q, dq)
        rep = check_lax_functor(emb)
        assert rep.flags["is-homomorphism"], (q.name, rep.witnesses)
        assert rep.flags["is-normal"]
        assert lax_full_faithful(emb).ok()


def test_embed_I_restriction_is_a_lattice_isomorphism():
    # arrows * -> * land bijectively and order-compatibly in hom(1, 1) of D(Q)
    q, dq = F.l3(), F.dl3()
    emb = embed_I(q, dq)
    lab = q.hom("*", "*")
    tgt = dq.hom(_lab("0"), _lab("0"))
    seen = set()
    for x, y in product(lab.elements, lab.elements):
        ix, iy = emb.arr_map[Arrow("*", "*", x)], emb.arr_map[Arrow("*", "*", y)]
        assert lab.le(x, y) == tgt.le(ix.elem, iy.elem)
        seen.add(ix.elem)
    assert seen == set(tgt.elements)


def test_J0_values_and_normality():
    q, dq = F.l3(), F.dl3()
    j0 = project_J0(q, dq)
    assert j0.arr_map[_arr("1", "1", "2")] == Arrow("*", "*", "1")
    rep = check_lax_functor(j0)
    assert rep.flags["is-lax"] and rep.flags["is-normal"]
    # J0 . I is the identity on Q
    i = embed_I(q, dq)
    assert compose_lax(j0, i).arr_map == identity_lax(q).arr_map


def test_J1_is_the_extension_side_projection():
    q, dq = F.l3(), F.dl3()
    j1 = project_J1(q, dq)
    assert j1.arr_map[_arr("1", "1", "2")] == Arrow("*", "*", "1")
    assert check_lax_functor(j1).flags["is-lax"]
    i = embed_I(q, dq)
    assert compose_lax(j1, i).arr_map == identity_lax(q).arr_map


def test_K_values():
    q, dq = F.l3(), F.dl3()
    k = project_K(q, dq)
    assert k.arr_map[_arr("1", "0", "2")] == Arrow("*", "*", "2")
    assert k.arr_map[_arr("1", "1", "1")] == Arrow("*", "*", "0")
    rep = check_lax_functor(k)
    assert rep.flags["is-lax"] and rep.flags["is-normal"]
    assert not rep.flags["is-homomorphism"]


def test_K_on_a_locale_is_meet_like():
    q2 = F.q2()
    dq2 = diagonal_quantaloid(q2)
    k = project_K(q2, dq2)
    assert k.arr_map[_arr("1", "1", "1")] == Arrow("*", "*", "1")
    assert check_lax_functor(k).flags["is-lax"]


def test_locale_core_comparison_is_lax_normal_not_homomorphism():
    """The identity-on-labels map D(H) -> D(L3), H the locale core of L3:
    composing through a middle leg costs strictly more downstairs."""
    l3 = F.l3()
    h = underlying_locale(l3)
    dh = diagonal_quantaloid(h)
    dl = F.dl3()
    obj_map = {o: o for o in dh.objects}
    arr_map = {f: f for f in dh.all_arrows()}
    cmp_map = LaxFunctor(dh, dl, obj_map, arr_map, name="locale-core")
    rep = check_lax_functor(cmp_map)
    assert rep.flags["is-lax"] and rep.flags["is-normal"]
    assert not rep.flags["is-homomorphism"]
    d = _arr("0", "0", "1")
    e = _arr("0", "0", "1")
    assert dh.compose(e, d).elem == "1"   # max(1, 1)
    assert dl.compose(e, d).elem == "2"   # (1 - 0) + 1


@pytest.mark.parametrize("q", [F.l3(), F.q2(), F.c3(), F.diamond()],
                         ids=lambda q: q.name)
def test_locale_core_square_commutes(q):
    # embedding the locale core and then comparing equals comparing and embedding
    h = underlying_locale(q)
    dh = diagonal_quantaloid(h)
    dq = diagonal_quantaloid(q)
    i_h = embed_I(h, dh)
    i_q = embed_I(q, dq)
    base = LaxFunctor(h, q, {o: o for o in h.objects},
                      {f: f for f in h.all_arrows()}, name="core")
    diag = LaxFunctor(dh, dq, {o: o for o in dh.objects},
                      {f: f for f in dh.all_arrows()}, name="D(core)")
    assert check_lax_functor(base).flags["is-lax"]
    assert check_lax_functor(diag).flags["is-lax"]
    left = compose_lax(diag, i_h)
    right = compose_lax(i_q, base)
    assert left.obj_map == right.obj_map
    assert left.arr_map == right.arr_map


def test_order_collapse_rebases_to_the_underlying_order():
    l3, q2 = F.l3(), F.q2()
    unit = l3.ids["*"]
    lab = l3.hom("*", "*")
    collapse = LaxFunctor(
        l3, q2, {"*": "*"},
        {f: Arrow("*", "*", "1" if lab.le(unit, f.elem) else "0")
         for f in l3.all_arrows()}, name="collapse")
    assert check_lax_functor(collapse).flags["is-lax"]
    c = F.cat_l3_pair()
    rebased = change_of_base(collapse, c)
    order = underlying_order(c)
    for x, y in product(c.objs, c.objs):
        assert (rebased.hom[(x, y)] == "1") == ((x, y) in order)


def test_lax_functor_typing_flag():
    q, dq = F.l3(), F.dl3()
    bad = LaxFunctor(q, dq, {"*": _lab("0")},
                     {f: _arr("1", "1", "2") for f in q.all_arrows()})
    rep = check_lax_functor(bad)
    assert not rep.flags["typing"]
