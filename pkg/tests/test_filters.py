from itertools import combinations

import pytest

from finhoop import (
    Filter,
    all_filters,
    check_class_lemma,
    filter_generated,
    hoop_isomorphism,
    is_filter,
    is_simple,
    mv_chain,
    quotient,
    validate_hoop,
)
from finhoop.constructions import direct_product
from finhoop.exact import is_homomorphism

from corpus import G3, L2, L3, TRIVIAL, census_upto
from oracles import brute_congruences, brute_filters

L2xL2 = direct_product(L2, L2).algebra


def test_is_filter_examples():
    assert is_filter(G3, [G3.unit])
    assert is_filter(G3, [1, 2])
    assert not is_filter(L3, [1, 2])
    assert not is_filter(L3, [])
    assert not is_filter(G3, [1])          # not upward closed


def test_filter_counts():
    assert len(all_filters(L3)) == 2
    assert [F.members for F in all_filters(G3)] == [(2,), (1, 2), (0, 1, 2)]
    assert len(all_filters(L2xL2)) == 4


def test_all_filters_matches_subset_scan():
    for h in census_upto(5):
        assert sorted(F.members for F in all_filters(h)) == sorted(brute_filters(h))


def test_filters_and_congruences_correspond():
    for h in census_upto(5):
        induced = sorted(quotient(h, F).class_of for F in all_filters(h))
        assert induced == sorted(brute_congruences(h))


def test_filter_generated_examples():
    assert filter_generated(L3, [L3.unit]).members == (2,)
    assert filter_generated(L3, [1]).members == (0, 1, 2)
    assert filter_generated(G3, [1]).members == (1, 2)
    with pytest.raises(ValueError):
        filter_generated(G3, [])


def test_filter_generated_is_least_filter():
    for h in census_upto(4):
        filters = [set(f) for f in brute_filters(h)]
        for k in range(1, h.size + 1):
            for s in combinations(range(h.size), k):
                above = [f for f in filters if set(s) <= f]
                least = set.intersection(*above)
                assert set(filter_generated(h, s).members) == least


def test_quotient_examples():
    q = quotient(G3, Filter.of(G3, [1, 2]))
    assert q.classes == ((0,), (1, 2))
    assert hoop_isomorphism(q.algebra, L2) is not None
    # (1,0) and (1,1) in the direct product
    members = [k for k in range(4) if L2xL2.label(k) in ("(1,0)", "(1,1)")]
    q2 = quotient(L2xL2, Filter.of(L2xL2, members))
    assert hoop_isomorphism(q2.algebra, L2) is not None


def test_quotient_by_trivial_and_full_filter():
    for h in census_upto(4, start=2):
        q = quotient(h, Filter.of(h, [h.unit]))
        assert hoop_isomorphism(q.algebra, h) is not None
        q = quotient(h, Filter.of(h, range(h.size)))
        assert q.algebra.size == 1


def test_projection_is_surjective_homomorphism_and_preserves_joins():
    for h in census_upto(5):
        join = h.order.join
        for F in all_filters(h):
            q = quotient(h, F)
            Q = q.algebra
            assert validate_hoop(Q.size, Q.unit, Q.mul, Q.imp).valid
            assert is_homomorphism(h, Q, q.class_of)
            assert set(q.class_of) == set(range(Q.size))
            for x in range(h.size):
                for y in range(h.size):
                    assert q.class_of[join[x, y]] == Q.order.join[q.class_of[x], q.class_of[y]]
            for X, block in enumerate(q.classes):
                assert q.class_top[X] in block and q.class_bottom[X] in block


def test_class_lemma_on_census():
    for h in census_upto(5):
        for F in all_filters(h):
            assert check_class_lemma(h, F).valid


def test_class_lemma_g3_bottom_class():
    F = Filter.of(G3, [1, 2])
    q = quotient(G3, F)
    X = q.class_of[0]
    assert G3.mul[q.class_top[X]][F.bottom] == 0 == q.class_bottom[X]
    assert check_class_lemma(G3, F).valid
    assert check_class_lemma(G3, Filter.of(G3, [2])).valid


def test_is_simple():
    assert is_simple(mv_chain(4))
    assert not is_simple(G3)
    assert not is_simple(TRIVIAL)
