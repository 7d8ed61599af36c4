"""
Filters and quotients
=====================

Every filter of a finite hoop is the up-set of an idempotent.  Quotienting by
a filter collapses each congruence class to one element.
"""
from finhoop import all_filters, check_class_lemma, mv_chain, ordinal_sum, quotient

# Ł2 ⊕ Ł2: three elements 0 < a < 1, all idempotent
G3 = ordinal_sum(mv_chain(2), mv_chain(2))
for F in all_filters(G3):
    q = quotient(G3, F)
    print(F.members, "->", q.classes, "tops", q.class_top, "bottoms", q.class_bottom)
    print("  class lemma holds:", check_class_lemma(G3, F).valid)

# an MV-chain has only the two trivial filters
print([F.members for F in all_filters(mv_chain(5))])
