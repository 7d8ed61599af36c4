import pytest

from finhoop import (
    FiniteHoop,
    all_filters,
    all_product_morphisms,
    direct_product,
    epsilon_morphism,
    f_product,
    gamma_X,
    hoop_isomorphism,
    is_nucleus,
    is_product_morphism,
    nucleus_image,
    ordinal_sum,
    quotient,
    sigma_morphism,
    validate_hoop,
)

from corpus import G3, L2, L3, TRIVIAL, census_upto
from oracles import brute_product_morphisms, paired_tables

L2xL2 = direct_product(L2, L2).algebra


def test_epsilon_sigma_are_product_morphisms():
    for a in census_upto(3):
        for b in census_upto(3):
            assert is_product_morphism(epsilon_morphism(a, b).map, a, b)
            assert is_product_morphism(sigma_morphism(a, b).map, a, b)
    assert epsilon_morphism(L2, L2).map == (1, 1)
    assert sigma_morphism(L2, L3).map == (0, 2)


def test_identity_on_l3_is_not_a_product_morphism():
    assert not is_product_morphism((0, 1, 2), L3, L3)


def test_is_product_morphism_rejects_malformed():
    with pytest.raises(ValueError):
        is_product_morphism((0, 1), L3, L3)
    with pytest.raises(ValueError):
        is_product_morphism((0, 5, 2), L3, L3)


def test_morphism_counts():
    assert len(all_product_morphisms(L3, L2)) == 2
    assert len(all_product_morphisms(L2, TRIVIAL)) == 1
    assert len(all_product_morphisms(L2xL2, L2)) == 4


def test_all_product_morphisms_matches_brute_force():
    hoops = census_upto(4)
    for a in hoops:
        for b in hoops:
            got = [p.map for p in all_product_morphisms(a, b)]
            assert got == sorted(brute_product_morphisms(a, b))


def test_morphism_images_and_bounds():
    for a in census_upto(4):
        for b in census_upto(4):
            ids = set(b.idempotents)
            eps, sig = epsilon_morphism(a, b), sigma_morphism(a, b)
            leq = b.order.leq
            for p in all_product_morphisms(a, b):
                assert set(p.map) <= ids
                assert all(leq[sig(x), p(x)] and leq[p(x), eps(x)] for x in range(a.size))
                for x in range(a.size):
                    for y in range(a.size):
                        if a.order.leq[x, y]:
                            assert leq[p(x), p(y)]
                        assert leq[p(a.imp[x][y]), b.imp[p(x)][p(y)]]


def test_f_product_matches_defining_formulas():
    for a in census_upto(3):
        for b in census_upto(3):
            for p in all_product_morphisms(b, a):
                prod = f_product(a, b, p)
                pairs, unit, mul, imp = paired_tables(a, b, p.map)
                assert list(prod.pairs) == pairs
                assert prod.algebra == FiniteHoop(len(pairs), unit, mul, imp)
                assert prod.algebra.size == sum(int(a.order.leq[:, p(x)].sum()) for x in range(b.size))


def test_f_product_examples():
    assert hoop_isomorphism(f_product(L2, L2, epsilon_morphism(L2, L2)).algebra, L2xL2) is not None
    g = f_product(L2, L2, sigma_morphism(L2, L2)).algebra
    assert g.size == 3 and hoop_isomorphism(g, G3) is not None
    for a in census_upto(3):
        assert hoop_isomorphism(f_product(a, TRIVIAL, (a.unit,)).algebra, a) is not None


def test_sigma_orientation_is_b_below_a():
    # A ⋉_σ B puts B at the bottom: with A = Ł₃ and B = G₃ the result has
    # G₃'s two lower idempotents under Ł₃'s half element
    prod = f_product(L3, G3, sigma_morphism(G3, L3)).algebra
    assert hoop_isomorphism(prod, ordinal_sum(G3, L3)) is not None
    assert hoop_isomorphism(prod, ordinal_sum(L3, G3)) is None


def test_f_product_rejects_bad_morphism():
    with pytest.raises(ValueError):
        f_product(L3, L3, (0, 1, 2))
    with pytest.raises(ValueError):
        f_product(L3, L2, (0,))


def test_direct_product():
    assert L2xL2.size == 4 and len(L2xL2.idempotents) == 4
    for a in census_upto(4):
        assert hoop_isomorphism(direct_product(a, TRIVIAL).algebra, a) is not None
        for b in census_upto(4):
            assert direct_product(a, b).algebra.size == a.size * b.size


def test_ordinal_sum():
    assert ordinal_sum(L2, L2) == G3
    for h in census_upto(4):
        assert hoop_isomorphism(ordinal_sum(TRIVIAL, h), h) is not None
        assert hoop_isomorphism(ordinal_sum(h, TRIVIAL), h) is not None
        s = ordinal_sum(h, L2)
        assert s.size == h.size + 1 and validate_hoop(s.size, s.unit, s.mul, s.imp).valid
    s = ordinal_sum(L2, L3)
    assert s.size == 4 and len(s.idempotents) == 3


def test_nucleus_images():
    for h in census_upto(3, start=2):
        n = h.size
        assert nucleus_image(h, tuple(range(n))) == h
        assert nucleus_image(h, (h.unit,) * n).size == 1
    with pytest.raises(ValueError):
        nucleus_image(L3, (0, 0, 2))


def test_gamma_x_examples():
    F = [f for f in all_filters(G3) if f.members == (1, 2)][0]
    q = quotient(G3, F)
    bottom_class = q.class_of[0]
    g = gamma_X(G3, F, bottom_class, q)
    assert g.map == (F.algebra.unit,) * 2
    assert nucleus_image(F.algebra, g).size == 1
    g = gamma_X(G3, F, q.unit_class, q)
    assert g.map == (0, 1)


def test_gamma_x_bijection_on_census():
    for h in census_upto(6):
        for F in all_filters(h):
            q = quotient(h, F)
            for X, block in enumerate(q.classes):
                g = gamma_X(h, F, X, q)
                assert is_nucleus(F.algebra, g.map)
                img = nucleus_image(F.algebra, g)
                assert validate_hoop(img.size, img.unit, img.mul, img.imp).valid
                t = q.class_top[X]
                hits = sorted(h.mul[t][F.members[a]] for a in g.fixed_points)
                assert hits == sorted(block)
