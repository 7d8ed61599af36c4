"""
Enumerating hoops up to isomorphism
===================================

Lattice-first search: choose a bounded lattice, backtrack the
multiplication, derive the arrow by residuation, keep canonical forms.
"""
import time

from finhoop import enumerate_hoops, idempotent_chain_length, is_simple

for n in range(1, 7):
    t0 = time.perf_counter()
    c = enumerate_hoops(n)
    dt = time.perf_counter() - t0
    simple = sum(is_simple(h) for h in c)
    chains = sorted(idempotent_chain_length(h) for h in c)
    print(f"n={n}: {c.count:3d} hoops, {simple} simple, chain lengths {chains}  ({dt:.2f}s)")
