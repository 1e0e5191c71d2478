"""Quantaloid layer: law validation, residuation, the structural
property flags, Cauchy-bilaterality, and the derived constructions."""
from itertools import product

import pytest

from qcat import fixtures as F
from qcat.errors import PreconditionError, StructureError
from qcat.quantaloid import (Arrow, FiniteQuantaloid, analyze_properties,
                             check_cauchy_bilateral,
                             check_strong_cauchy_bilateral, extension,
                             is_commutative, is_diagonal, join, lifting, meet,
                             non_zero_part, restrict_objects, symmetry_witness,
                             truncated_addition_chain, underlying_locale,
                             validate_quantaloid)

CORPUS = F.corpus_quantaloids()
ALL = CORPUS + [F.dl3()]


@pytest.mark.parametrize("q", ALL, ids=lambda q: q.name)
def test_corpus_validates(q):
    rep = validate_quantaloid(q)
    assert rep.ok(), rep.failed()


def _with_comp_entry(q, entry, val):
    comp = {k: dict(v) for k, v in q.comp.items()}
    comp[("*", "*", "*")][entry] = val
    return FiniteQuantaloid(q.objects, q.homs, comp, q.ids, q.inv, name="broken")


def test_corrupted_composition_is_caught():
    # min(1+2, 2) is 2; writing 1 breaks associativity and continuity both
    bad = _with_comp_entry(F.l3(), ("1", "2"), "1")
    rep = validate_quantaloid(bad)
    assert "associativity" in rep.failed()
    assert "join-continuity" in rep.failed()
    assert rep.witnesses["associativity"]


def test_idempotent_looking_corruption_still_validates():
    # replacing 1∘1 = 2 by 1 yields a different but law-abiding quantale
    # (it is the meet-chain in disguise), so validation alone cannot flag it
    other = _with_comp_entry(F.l3(), ("1", "1"), "1")
    assert validate_quantaloid(other).ok()


def test_missing_identity_is_caught():
    l3 = F.l3()
    bad = FiniteQuantaloid(l3.objects, l3.homs, l3.comp, {"*": "1"}, l3.inv)
    assert "identity-laws" in validate_quantaloid(bad).failed()


@pytest.mark.parametrize("q", ALL, ids=lambda q: q.name)
def test_residuation_adjunctions_exhaustive(q):
    """g∘x ≤ d ⟺ x ≤ g↘d and y∘f ≤ d ⟺ y ≤ d↙f, over every triple."""
    for a, b, c in product(q.objects, repeat=3):
        lab = q.hom(a, c)
        for ge in q.hom(b, c).elements:
            for de in lab.elements:
                g = Arrow(b, c, ge)
                d = Arrow(a, c, de)
                lift = q.lifting(g, d)
                for xe in q.hom(a, b).elements:
                    x = Arrow(a, b, xe)
                    assert (q.le(q.compose(g, x), d)
                            == q.hom(a, b).le(xe, lift.elem))
        for fe in q.hom(a, b).elements:
            for de in lab.elements:
                f = Arrow(a, b, fe)
                d = Arrow(a, c, de)
                ext = q.extension(d, f)
                for ye in q.hom(b, c).elements:
                    y = Arrow(b, c, ye)
                    assert (q.le(q.compose(y, f), d)
                            == q.hom(b, c).le(ye, ext.elem))


def test_wrapper_ops_and_empty_joins():
    q = F.l3()
    assert join(q, "*", "*", []) == q.hom("*", "*").bottom()
    assert meet(q, "*", "*", []) == q.hom("*", "*").top()
    assert join(q, "*", "*", ["1", "2"]) == "1"     # reversed chain order
    g = Arrow("*", "*", "0")
    d = Arrow("*", "*", "1")
    assert lifting(q, g, d) == q.lifting(g, d)
    assert extension(q, g, d) == q.extension(d, g)


def test_composition_type_mismatch():
    q = F.dl3()
    with pytest.raises(StructureError):
        q.compose(Arrow("*->*:0", "*->*:1", "1"), Arrow("*->*:0", "*->*:1", "1"))


@pytest.mark.parametrize("q", CORPUS, ids=lambda q: q.name)
def test_corpus_is_commutative_and_symmetric(q):
    assert is_commutative(q)
    assert symmetry_witness(q) is None


def test_symmetry_witness_on_asymmetric_base():
    from helpers import left_zero_quantale
    q = left_zero_quantale()
    assert validate_quantaloid(q).ok()
    assert not is_commutative(q)
    assert symmetry_witness(q) is not None


DIVISIBLE = {"q2", "c3", "diamond", "l2", "l3", "l4"}


@pytest.mark.parametrize("q", CORPUS, ids=lambda q: q.name)
def test_divisibility_five_way(q):
    rep = analyze_properties(q)
    expected = q.name in DIVISIBLE
    for i in range(1, 6):
        assert rep.flags[f"divisible-{i}"] == expected, (q.name, i)
    assert rep.flags["divisible"] == expected


def test_divisible_implies_integral_and_locally_localic():
    for q in CORPUS:
        rep = analyze_properties(q)
        if rep.flags["divisible"]:
            assert rep.flags["integral"]
            assert rep.flags["locally-localic"]


def test_integrality_split():
    # group quantales have unit {e} strictly under the top set
    for q in CORPUS:
        assert analyze_properties(q).flags["integral"] == (q.name not in {"pz2", "pz3"})


def test_identities_join_irreducible():
    assert not analyze_properties(F.diamond()).flags["identities-join-irreducible"]
    assert analyze_properties(F.l3()).flags["identities-join-irreducible"]
    assert analyze_properties(F.pz3()).flags["identities-join-irreducible"]
    # the diagonal quantaloid has a zero object whose identity is bottom
    rep = analyze_properties(F.dl3())
    assert not rep.flags["identities-join-irreducible"]
    assert rep.info["zero-objects"] == ["*->*:2"]


def test_strong_cauchy_bilateral_split():
    assert check_strong_cauchy_bilateral(F.pz2()).ok()
    rep = check_strong_cauchy_bilateral(F.pz3())
    assert not rep.ok()
    fam = rep.witnesses["strongly-cauchy-bilateral"]["family"]
    # the singleton pair ({g}, {gg}) the construction turns on is in there
    assert ("*->*:g", "*->*:gg") in {tuple(p) for p in fam}


@pytest.mark.parametrize("q", [F.q2(), F.c3(), F.l2(), F.l3()],
                         ids=lambda q: q.name)
def test_cauchy_bilateral_agrees_with_strong_when_exact(q):
    rep = check_cauchy_bilateral(q, cap=9)
    assert rep.info["exact"]
    assert rep.ok() == check_strong_cauchy_bilateral(q).ok()


def test_cauchy_bilateral_finds_pz3_violation_under_cap():
    rep = check_cauchy_bilateral(F.pz3(), cap=2)
    assert not rep.ok()
    assert not rep.info["exact"]


def test_cauchy_bilateral_cap_precondition():
    with pytest.raises(PreconditionError):
        check_cauchy_bilateral(F.q2(), cap=0)


def test_underlying_locale_of_locale_is_itself():
    q2 = F.q2()
    h = underlying_locale(q2)
    assert h.hom("*", "*").same_lattice(q2.hom("*", "*"))
    assert h.comp[("*", "*", "*")] == q2.comp[("*", "*", "*")]


def test_underlying_locale_of_l3_uses_meet():
    h = underlying_locale(F.l3())
    assert h.comp[("*", "*", "*")][("1", "2")] == "2"   # meet = numeric max
    assert h.ids["*"] == "0"
    assert validate_quantaloid(h).ok()


def test_underlying_locale_requires_divisibility():
    with pytest.raises(PreconditionError) as e:
        underlying_locale(F.pz2())
    assert "divisible" in str(e.value)


def test_restrict_and_non_zero_part():
    dq = F.dl3()
    nz = non_zero_part(dq)
    assert sorted(nz.objects) == ["*->*:0", "*->*:1"]
    assert validate_quantaloid(nz).ok()
    only0 = restrict_objects(dq, ["*->*:0"])
    assert list(only0.objects) == ["*->*:0"]
    assert restrict_objects(dq, ["nope"]).objects == ()   # unknown names drop out


def test_truncated_addition_chain_shape():
    q = truncated_addition_chain(3)
    lab = q.hom("*", "*")
    assert lab.top() == "0" and lab.bottom() == "3"
    assert q.comp[("*", "*", "*")][("2", "2")] == "3"
    assert q.ids["*"] == "0"
    assert validate_quantaloid(q).ok()


def test_is_diagonal_predicate():
    q = F.l3()
    one = Arrow("*", "*", "1")
    assert is_diagonal(q, one, one, Arrow("*", "*", "2"))
    assert not is_diagonal(q, one, one, Arrow("*", "*", "0"))
    with pytest.raises(StructureError):
        is_diagonal(F.dl3(), Arrow("*->*:0", "*->*:0", "0"),
                    Arrow("*->*:1", "*->*:1", "1"), Arrow("*->*:0", "*->*:0", "0"))


def test_involute_is_involutive_on_corpus():
    for q in CORPUS:
        for f in q.all_arrows():
            assert q.involute(q.involute(f)) == f
