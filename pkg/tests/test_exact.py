import pytest

from finhoop import (
    ExactSequence,
    Filter,
    HoopHomomorphism,
    VerificationFailure,
    all_filters,
    all_homomorphisms,
    bullet_product,
    check_bullet_properties,
    hoop_isomorphism,
    image,
    is_exact,
    is_filter,
    is_filter_homomorphism,
    kernel,
    quotient,
    triple_composition,
)
from finhoop.exact import TRIVIAL, first_isomorphism, inclusion, projection

from corpus import G3, L2, L3, census_upto
from oracles import brute_homomorphisms


def identity(h):
    return HoopHomomorphism(h, h, range(h.size))


def test_kernel_image_examples():
    i = identity(G3)
    assert kernel(i).members == (2,) and image(i) == {0, 1, 2}
    assert is_filter_homomorphism(i)
    p, Q = projection(G3, Filter.of(G3, [1, 2]))
    assert kernel(p).members == (1, 2) and image(p) == set(range(Q.size))
    inc = inclusion(Filter.of(G3, [1, 2]))
    assert kernel(inc).members == (1,) and image(inc) == {1, 2}
    assert is_filter_homomorphism(inc)


def test_non_homomorphism_rejected():
    with pytest.raises(ValueError):
        HoopHomomorphism(L3, L3, (0, 0, 2))


def test_all_homomorphisms_matches_brute_force():
    hoops = census_upto(4)
    for a in hoops:
        for b in hoops:
            got = [h.map for h in all_homomorphisms(a, b)]
            assert got == sorted(brute_homomorphisms(a, b))


def test_kernel_image_invariants_and_kernel_coincidence():
    hoops = census_upto(4)
    for a in hoops:
        for b in hoops:
            for h in all_homomorphisms(a, b):
                K = kernel(h)
                assert is_filter(a, K.members)
                img = image(h)
                assert b.unit in img
                assert all(b.mul[x][y] in img and b.imp[x][y] in img for x in img for y in img)
                # theta of the kernel is exactly the fibre partition of h
                q = quotient(a, K)
                for x in range(a.size):
                    for y in range(a.size):
                        assert (q.class_of[x] == q.class_of[y]) == (h.map[x] == h.map[y])
                if is_filter_homomorphism(h):
                    _, _, _, eta = first_isomorphism(h)
                    assert sorted(eta) == list(range(len(eta)))


def test_bullet_examples():
    for A in census_upto(3):
        i = HoopHomomorphism(TRIVIAL, A, [A.unit])
        assert hoop_isomorphism(bullet_product(TRIVIAL, A, i).algebra, A) is not None
        j = HoopHomomorphism(A, TRIVIAL, [0] * A.size)
        assert hoop_isomorphism(bullet_product(A, TRIVIAL, j).algebra, A) is not None
    F = Filter.of(G3, [1, 2])
    assert hoop_isomorphism(bullet_product(F.algebra, G3, inclusion(F)).algebra,
                            quotient(G3, F).algebra) is not None
    p, Q = projection(G3, F)
    assert hoop_isomorphism(bullet_product(G3, Q, p).algebra, F.algebra) is not None
    assert bullet_product(L3, L3, identity(L3)).algebra.size == 1


def test_bullet_rejects_non_filter_homomorphism():
    # Ł₂ -> Ł₃ sending 0 to 0: image {0, 1} is not up-closed in Ł₃
    h = HoopHomomorphism(L2, L3, (0, 2))
    assert not is_filter_homomorphism(h)
    with pytest.raises(ValueError):
        bullet_product(L2, L3, h)


def test_bullet_properties_small_census():
    assert check_bullet_properties(census_upto(3)).valid


def canonical_sequences():
    """F ↪ A -> A/F for every census hoop of order <= 4 and every filter."""
    out = []
    for A in census_upto(4, start=2):
        for F in all_filters(A):
            p, Q = projection(A, F)
            out.append((F.algebra, A, Q, inclusion(F), p))
    return out


def test_canonical_sequences_are_exact():
    for F, A, Q, i, p in canonical_sequences():
        assert is_exact(ExactSequence((F, A, Q), (i, p)))


def test_identity_identity_is_not_exact():
    assert not is_exact(ExactSequence((L3, L3, L3), (identity(L3), identity(L3))))


def test_sequence_endpoints_checked():
    with pytest.raises(ValueError):
        ExactSequence((L3, L2, L3), (identity(L3), identity(L3)))


def test_triple_composition_on_fixed_corpus():
    corpus = canonical_sequences()
    # Ł₂ ↪ G₃ -> Ł₂ and 1 -> A -> A
    F = Filter.of(G3, [1, 2])
    p, Q = projection(G3, F)
    corpus.append((F.algebra, G3, Q, inclusion(F), p))
    for A in census_upto(3, start=2):
        corpus.append((TRIVIAL, A, A, HoopHomomorphism(TRIVIAL, A, [A.unit]), identity(A)))
    assert len(corpus) >= 10
    for A, B, C, f, g in corpus:
        t = triple_composition(A, B, C, f, g)
        assert all(v is not None for v in t.isomorphisms.values())
        assert is_filter_homomorphism(t.f_prime) and is_filter_homomorphism(t.g_prime)


def test_triple_composition_rejects_non_exact():
    with pytest.raises(ValueError):
        triple_composition(L3, L3, L3, identity(L3), identity(L3))


def test_verification_failure_is_runtime_error():
    assert issubclass(VerificationFailure, RuntimeError)
