"""
Splitting a hoop into MV-chains
===============================

Any filter ``F`` gives ``A ≅ F ⋉_ψ A/F``.  Repeating this yields one
MV-chain per step of the idempotent chain.
"""
from finhoop import (
    all_filters,
    direct_product,
    full_decomposition,
    idempotent_chain_length,
    mv_chain,
    omega,
    ordinal_sum,
)
from finhoop import io

h = direct_product(mv_chain(3), ordinal_sum(mv_chain(2), mv_chain(3))).algebra
print("order", h.size, "idempotent chain length", idempotent_chain_length(h))

F = all_filters(h)[1]
om = omega(h, F)
print("psi", om.psi.map, "forward", om.forward)

for assoc in ("right", "left"):
    for strategy in ("smallest", "largest-proper", "median-idempotent"):
        c = full_decomposition(h, association=assoc, strategy=strategy)
        print(f"{assoc:5} {strategy:18} {c}  leaves={c.leaves}")

# certificates serialize and re-check without the library's product code
c = full_decomposition(h)
doc = io.certificate_to_doc(c, h)
print(io.verify_certificate(h, doc).valid)
