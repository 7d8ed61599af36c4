"""Finite hoops: validation, filters, f-products and decompositions."""
from .core import (
    FiniteHoop,
    HoopAxiomError,
    HoopError,
    HoopStructureError,
    InternalInconsistency,
    OrderStructure,
    ValidationReport,
    VerificationFailure,
    check_lemma_suite,
    derive_order,
    hoop_isomorphism,
    idempotent_chain_length,
    idempotents,
    is_isomorphism,
    make_hoop,
    relabel,
    subalgebra,
    validate_hoop,
)
from .filters import (
    Filter,
    QuotientHoop,
    all_filters,
    check_class_lemma,
    filter_generated,
    is_filter,
    is_simple,
    quotient,
)
from .constructions import (
    Nucleus,
    PairedHoop,
    ProductMorphism,
    all_product_morphisms,
    direct_product,
    epsilon_morphism,
    f_product,
    gamma_X,
    is_nucleus,
    is_product_morphism,
    nucleus_image,
    ordinal_sum,
    sigma_morphism,
)
from .associativity import (
    LeftAssociatedPair,
    RightAssociatedPair,
    alpha,
    beta,
    gamma_iso,
    verify_inverse,
)
from .decomposition import (
    DecompositionCertificate,
    census_mu,
    census_nu,
    full_decomposition,
    is_irreducible,
    is_mv_chain,
    mv_chain,
    omega,
    psi_morphism,
)
from .exact import (
    ExactSequence,
    HoopHomomorphism,
    all_homomorphisms,
    bullet_product,
    check_bullet_properties,
    image,
    is_exact,
    is_filter_homomorphism,
    kernel,
    triple_composition,
)
from .enumeration import HoopCensus, canonical_form, enumerate_hoops

__version__ = "0.1.0"

__all__ = [
    "FiniteHoop",
    "HoopAxiomError",
    "HoopError",
    "HoopStructureError",
    "InternalInconsistency",
    "OrderStructure",
    "ValidationReport",
    "VerificationFailure",
    "check_lemma_suite",
    "derive_order",
    "hoop_isomorphism",
    "idempotent_chain_length",
    "idempotents",
    "is_isomorphism",
    "make_hoop",
    "relabel",
    "subalgebra",
    "validate_hoop",
    "Filter",
    "QuotientHoop",
    "all_filters",
    "check_class_lemma",
    "filter_generated",
    "is_filter",
    "is_simple",
    "quotient",
    "Nucleus",
    "PairedHoop",
    "ProductMorphism",
    "all_product_morphisms",
    "direct_product",
    "epsilon_morphism",
    "f_product",
    "gamma_X",
    "is_nucleus",
    "is_product_morphism",
    "nucleus_image",
    "ordinal_sum",
    "sigma_morphism",
    "LeftAssociatedPair",
    "RightAssociatedPair",
    "alpha",
    "beta",
    "gamma_iso",
    "verify_inverse",
    "DecompositionCertificate",
    "census_mu",
    "census_nu",
    "full_decomposition",
    "is_irreducible",
    "is_mv_chain",
    "mv_chain",
    "omega",
    "psi_morphism",
    "ExactSequence",
    "HoopHomomorphism",
    "all_homomorphisms",
    "bullet_product",
    "check_bullet_properties",
    "image",
    "is_exact",
    "is_filter_homomorphism",
    "kernel",
    "triple_composition",
    "HoopCensus",
    "canonical_form",
    "enumerate_hoops",
]
