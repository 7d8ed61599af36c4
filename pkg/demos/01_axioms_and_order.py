"""
Hoop tables, axioms and the natural order
=========================================

A finite hoop is given by its multiplication and arrow tables plus the index
of the unit.  ``validate_hoop`` reports the first failing witness per axiom.
"""
import numpy as np

from finhoop import check_lemma_suite, derive_order, mv_chain, validate_hoop

# the three-element MV-chain: 0 < 1/2 < 1
L3 = mv_chain(3)
print(np.array(L3.mul))
print(np.array(L3.imp))
print(validate_hoop(L3.size, L3.unit, L3.mul, L3.imp).valid)

# break one arrow entry and look at the report
imp = [list(r) for r in L3.imp]
imp[1][0] = 0
rep = validate_hoop(3, 2, L3.mul, imp)
print(rep.valid, rep.violations)

# x <= y iff x -> y = 1; meets are x*(x->y)
order = derive_order(L3)
print(order.leq.astype(int))
print(sorted(order.hasse_edges))

# the basic identities hold on every valid table
print(check_lemma_suite(mv_chain(6)).valid)
