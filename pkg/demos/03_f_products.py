"""
Product morphisms and f-products
================================

A product morphism ``f: B -> A`` lands in the idempotents of ``A``.  The
f-product keeps the pairs ``(a, x)`` with ``a <= f(x)``.
"""
from finhoop import (
    all_product_morphisms,
    direct_product,
    epsilon_morphism,
    f_product,
    hoop_isomorphism,
    mv_chain,
    ordinal_sum,
    sigma_morphism,
)

A, B = mv_chain(3), mv_chain(2)
for f in all_product_morphisms(B, A):
    P = f_product(A, B, f)
    print(f.map, "->", P.algebra.size, "elements", P.pairs)

# the constant-unit morphism gives the direct product ...
eps = f_product(A, B, epsilon_morphism(B, A)).algebra
print(hoop_isomorphism(eps, direct_product(A, B).algebra) is not None)

# ... and the bottom-below-unit morphism gives the ordinal sum with B below
sig = f_product(A, B, sigma_morphism(B, A)).algebra
print(hoop_isomorphism(sig, ordinal_sum(B, A)) is not None)
