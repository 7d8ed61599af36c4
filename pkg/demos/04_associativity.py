"""
Re-bracketing iterated f-products
=================================

``alpha`` moves a left-associated pair ``(A ⋉_f B) ⋉_g C`` to a right one,
``beta`` goes back, and ``gamma_iso`` is the element map between the two.
"""
from finhoop import alpha, beta, gamma_iso, is_isomorphism, mv_chain
from finhoop.associativity import left_pairs

L2, L3 = mv_chain(2), mv_chain(3)
pairs = list(left_pairs(L2, L3, L2))
print(len(pairs), "left-associated pairs")
for p in pairs[:3]:
    r = alpha(p)
    back = beta(r)
    gam = gamma_iso(r, p)
    print("f", p.f, "g", p.g, "->", "f", r.f, "g", r.g,
          "round trip", (back.f, back.g) == (p.f, p.g),
          "gamma iso", is_isomorphism(r.outer.algebra, p.outer.algebra, gam))
