import random
from fractions import Fraction

import pytest

from rhizalab.algmodel import BilinearOp, HomAlgebra, LinearMap
from rhizalab.errors import DimensionMismatch
from rhizalab.exactlin import Matrix
from rhizalab.nilpotency import (
    Subspace,
    check_2_nilpotent,
    check_alpha_stability,
    check_onesided_nilpotency_theorem,
    check_series_equality,
    diamond,
    full_series,
    is_left_nilpotent,
    is_multiplicative,
    is_nilpotent,
    is_right_nilpotent,
    left_series,
    right_series,
    series_term,
)
from tests.conftest import (
    catalog_algebras,
    negated_split_fixture,
    random_split_algebra,
    rhizaform_passing_entries,
)

F = Fraction


def zero_split(n=2):
    return HomAlgebra.rhizaform(BilinearOp.zero(n), BilinearOp.zero(n), LinearMap.identity(n))


def span(ambient, *vectors):
    return Subspace.from_vectors(ambient, vectors)


def test_subspace_canonical_form():
    s = span(3, (F(2), F(0), F(2)), (F(1), F(0), F(1)), (F(0), F(1), F(0)))
    assert s.dim == 2
    assert s.basis == Matrix.from_rows([[1, 0, 1], [0, 1, 0]])
    assert s == span(3, (F(1), F(1), F(1)), (F(0), F(1), F(0)))


def test_subspace_containment():
    big = Subspace.full(3)
    small = span(3, (F(1), F(0), F(0)))
    assert big.contains(small)
    assert not small.contains(big)
    assert small.contains_vector((F(3), F(0), F(0)))
    assert not small.contains_vector((F(0), F(1), F(0)))


def test_subspace_dimension_check():
    with pytest.raises(DimensionMismatch):
        span(2, (F(1), F(0), F(0)))


def test_diamond_zero_subspace(a_d2_a1):
    z = Subspace.zero(2)
    assert diamond(z, Subspace.full(2), a_d2_a1).is_zero()


def test_diamond_d2_a1(a_d2_a1):
    full = Subspace.full(2)
    assert diamond(full, full, a_d2_a1) == span(2, (F(1), F(0)))


def test_diamond_d2_a5():
    from rhizalab.catalog import load_entry

    a = load_entry("d2.A5")
    full = Subspace.full(2)
    assert diamond(full, full, a) == span(2, (F(0), F(1)))


def test_series_zero_products():
    a = zero_split()
    for fn in (right_series, left_series, full_series):
        terms = fn(a)
        assert len(terms) == 2
        assert terms[0] == Subspace.full(2)
        assert terms[1].is_zero()
    assert is_nilpotent(a) == (True, 2)


def test_series_d2_a1(a_d2_a1):
    terms = full_series(a_d2_a1)
    assert [t.dim for t in terms] == [2, 1, 0]
    assert terms[1] == span(2, (F(1), F(0)))
    assert is_nilpotent(a_d2_a1) == (True, 3)
    assert is_right_nilpotent(a_d2_a1) == (True, 3)
    assert is_left_nilpotent(a_d2_a1) == (True, 3)


def test_series_d2_a5_stabilizes():
    from rhizalab.catalog import load_entry

    a = load_entry("d2.A5")
    terms = full_series(a)
    assert terms[1] == span(2, (F(0), F(1)))
    assert terms[-1] == terms[-2]  # visible stabilization
    verdict = is_nilpotent(a)
    assert not verdict.nilpotent and verdict.index is None


def test_series_equality_zero():
    assert check_series_equality(zero_split()).passed


def test_series_equality_on_passing_entries():
    for eid, a in rhizaform_passing_entries():
        assert check_series_equality(a).passed, eid


def test_series_equality_negative_control():
    # succ: e1e1=e2, e2e1=e3; prec = 0; not a valid splitting
    succ = BilinearOp.from_entries(3, [(0, 0, 1, F(1)), (1, 0, 2, F(1))])
    a = HomAlgebra.rhizaform(succ, BilinearOp.zero(3), LinearMap.identity(3))
    rep = check_series_equality(a)
    assert not rep.passed
    assert series_term(a, "right", 3) == span(3, (F(0), F(0), F(1)))
    assert series_term(a, "left", 3).is_zero()


def test_2_nilpotent_zero():
    assert check_2_nilpotent(zero_split()).passed


def test_2_nilpotent_d2_a7(a_d2_a7):
    assert check_2_nilpotent(a_d2_a7).passed


def test_2_nilpotent_negated_split_fixtures():
    for n in (2, 3):
        a = negated_split_fixture(n)
        from rhizalab.axioms import check_rhizaform

        assert check_rhizaform(a).passed
        assert check_2_nilpotent(a).passed


def test_2_nilpotent_flags_nonvanishing_triple(a_d2_a1):
    rep = check_2_nilpotent(a_d2_a1)
    assert rep.passed  # products of A1 do annihilate
    # d2.A5 is 2-nilpotent without being nilpotent: twisted triples vanish
    from rhizalab.catalog import load_entry

    a5 = load_entry("d2.A5")
    assert check_2_nilpotent(a5).passed
    assert not is_nilpotent(a5).nilpotent
    # a unital-ish square does not annihilate
    bad = HomAlgebra.rhizaform(
        BilinearOp.from_entries(2, [(0, 0, 0, F(1))]), BilinearOp.zero(2), LinearMap.identity(2)
    )
    rep_bad = check_2_nilpotent(bad)
    assert not rep_bad.passed
    assert any(v.identity_id == "out:succ,succ" for v in rep_bad.violations)


def test_onesided_theorem_on_all_entries():
    for eid, a in catalog_algebras():
        assert check_onesided_nilpotency_theorem(a).passed, eid


def test_onesided_theorem_zero_and_a5():
    assert check_onesided_nilpotency_theorem(zero_split()).passed
    from rhizalab.catalog import load_entry

    a5 = load_entry("d2.A5")
    assert check_onesided_nilpotency_theorem(a5).passed
    assert not is_nilpotent(HomAlgebra.mono(a5.succ, a5.alpha)).nilpotent
    assert not is_nilpotent(HomAlgebra.mono(a5.prec, a5.alpha)).nilpotent


def test_power_inclusions_up_to_four():
    # one-sided inclusions are a lemma about valid split algebras; the
    # summed-series inclusion holds for any algebra by construction
    for eid, a in rhizaform_passing_entries():
        terms = {g: series_term(a, "right", g) for g in range(1, 9)}
        for g in range(1, 5):
            for h in range(1, 5):
                assert terms[g + h].contains(diamond(terms[g], terms[h], a)), (eid, g, h)
    for eid, a in catalog_algebras():
        terms = {g: series_term(a, "full", g) for g in range(1, 9)}
        for g in range(1, 5):
            for h in range(1, 5):
                assert terms[g + h].contains(diamond(terms[g], terms[h], a)), (eid, g, h)


def test_series_descend_and_stabilize_on_randoms():
    rng = random.Random(71)
    for _ in range(40):
        a = random_split_algebra(rng, rng.choice([2, 3]))
        for fn in (right_series, left_series, full_series):
            terms = fn(a)
            assert len(terms) <= a.dim + 3
            for earlier, later in zip(terms, terms[1:]):
                assert earlier.contains(later)
            assert terms[-1].is_zero() or terms[-1] == terms[-2]


def test_alpha_stability_on_multiplicative_entries():
    for eid, a in catalog_algebras():
        if is_multiplicative(a):
            assert check_alpha_stability(a).passed, eid
