"""
Homomorphisms, the bullet product and exact sequences
=====================================================

For a filter homomorphism ``f: A -> B`` the bullet product is
``Ker f ⋉ B/f(A)``.
"""
from finhoop import (
    ExactSequence,
    Filter,
    bullet_product,
    check_bullet_properties,
    hoop_isomorphism,
    is_exact,
    kernel,
    mv_chain,
    ordinal_sum,
    triple_composition,
)
from finhoop.exact import inclusion, projection

L2 = mv_chain(2)
G3 = ordinal_sum(L2, L2)
F = Filter.of(G3, [1, 2])
i = inclusion(F)
p, Q = projection(G3, F)
print("kernel of projection", kernel(p).members)

seq = ExactSequence((F.algebra, G3, Q), (i, p))
print("exact:", is_exact(seq))

# F •_⊆ G3 is the quotient
print(hoop_isomorphism(bullet_product(F.algebra, G3, i).algebra, Q) is not None)

t = triple_composition(F.algebra, G3, Q, i, p)
print({k: v is not None for k, v in t.isomorphisms.items()})

print(check_bullet_properties([L2, G3, mv_chain(3)]).valid)
