"""Hoop homomorphisms, the bullet product, and exact sequences."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .constructions import PairedHoop, ProductMorphism, compose, f_product
from .core import (
    FiniteHoop,
    InternalInconsistency,
    ValidationReport,
    VerificationFailure,
    Violation,
    hoop_isomorphism,
    is_isomorphism,
    subalgebra,
)
from .decomposition import psi_morphism
from .filters import Filter, all_filters, is_filter, quotient

__all__ = [
    "HoopHomomorphism",
    "ExactSequence",
    "TRIVIAL",
    "is_homomorphism",
    "all_homomorphisms",
    "kernel",
    "image",
    "is_filter_homomorphism",
    "inclusion",
    "projection",
    "first_isomorphism",
    "bullet_product",
    "check_bullet_properties",
    "is_exact",
    "TripleComposition",
    "triple_composition",
]

TRIVIAL = FiniteHoop(1, 0, [[0]], [[0]], ["1"])


def is_homomorphism(domain: FiniteHoop, codomain: FiniteHoop, h: Sequence[int]) -> bool:
    hh = np.asarray(h, dtype=np.intp)
    if hh.shape != (domain.size,) or (hh < 0).any() or (hh >= codomain.size).any():
        return False
    x, y = hh[:, None], hh[None, :]
    return bool(
        hh[domain.unit] == codomain.unit
        and (hh[domain.mul_arr] == codomain.mul_arr[x, y]).all()
        and (hh[domain.imp_arr] == codomain.imp_arr[x, y]).all()
    )


@dataclass(frozen=True)
class HoopHomomorphism:
    domain: FiniteHoop
    codomain: FiniteHoop
    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(v) for v in self.map))
        if not is_homomorphism(self.domain, self.codomain, self.map):
            raise ValueError(f"{list(self.map)} is not a hoop homomorphism")

    def __call__(self, x: int) -> int:
        return self.map[x]

    def __repr__(self):
        return f"HoopHomomorphism({list(self.map)})"


def all_homomorphisms(domain: FiniteHoop, codomain: FiniteHoop) -> list[HoopHomomorphism]:
    """Every homomorphism, by backtracking over ``domain`` in index order."""
    n = domain.size
    h = [-1] * n
    h[domain.unit] = codomain.unit
    found = []

    def consistent(x: int) -> bool:
        for y in range(n):
            if h[y] == -1:
                continue
            for a, b in ((x, y), (y, x)):
                for t, s in ((domain.mul, codomain.mul), (domain.imp, codomain.imp)):
                    z = h[t[a][b]]
                    if z != -1 and z != s[h[a]][h[b]]:
                        return False
        return True

    def search(x: int):
        if x == n:
            if is_homomorphism(domain, codomain, h):
                found.append(tuple(h))
            return
        if x == domain.unit:
            search(x + 1)
            return
        for v in range(codomain.size):
            h[x] = v
            if consistent(x):
                search(x + 1)
        h[x] = -1

    if consistent(domain.unit):
        search(0)
    return [HoopHomomorphism(domain, codomain, m) for m in found]


def kernel(h: HoopHomomorphism) -> Filter:
    """``h^{-1}(1)``; always a filter of the domain."""
    members = [x for x in range(h.domain.size) if h.map[x] == h.codomain.unit]
    if not is_filter(h.domain, members):
        raise InternalInconsistency("kernel is not a filter")
    return Filter.of(h.domain, members)


def image(h: HoopHomomorphism) -> frozenset[int]:
    return frozenset(h.map)


def is_filter_homomorphism(h: HoopHomomorphism) -> bool:
    return is_filter(h.codomain, image(h))


def inclusion(filt: Filter) -> HoopHomomorphism:
    return HoopHomomorphism(filt.algebra, filt.hoop, filt.embedding)


def projection(hoop: FiniteHoop, filt: Filter) -> tuple[HoopHomomorphism, FiniteHoop]:
    q = quotient(hoop, filt)
    return HoopHomomorphism(hoop, q.algebra, q.class_of), q.algebra


def first_isomorphism(h: HoopHomomorphism):
    """``eta: A/Ker h -> h(A)`` as a table into the image subalgebra.

    Returns ``(quotient, image_algebra, image_embedding, eta)``; ``eta`` is
    checked to be an isomorphism.
    """
    ker = kernel(h)
    q = quotient(h.domain, ker)
    img, emb = subalgebra(h.codomain, image(h))
    pos = {y: k for k, y in enumerate(emb)}
    eta = [-1] * q.algebra.size
    for x in range(h.domain.size):
        X = q.class_of[x]
        v = pos[h.map[x]]
        if eta[X] not in (-1, v):
            raise VerificationFailure("h is not constant on a kernel class")
        eta[X] = v
    if not is_isomorphism(q.algebra, img, eta):
        raise VerificationFailure("first isomorphism map is not an isomorphism")
    return q, img, emb, tuple(eta)


def bullet_product(A: FiniteHoop, B: FiniteHoop, h: HoopHomomorphism | Sequence[int]) -> PairedHoop:
    """``(Ker h) ⋉_gamma (B / h(A))`` with ``gamma = psi ∘ eta^{-1} ∘ phi``."""
    if not isinstance(h, HoopHomomorphism):
        h = HoopHomomorphism(A, B, h)
    if h.domain != A or h.codomain != B:
        raise ValueError("homomorphism endpoints differ from the given hoops")
    if not is_filter_homomorphism(h):
        raise ValueError("h(A) is not a filter of B")
    ker = kernel(h)
    q_a, img, emb, eta = first_isomorphism(h)
    psi = psi_morphism(A, ker, q_a)                       # A/Ker h -> Ker h
    img_filter = Filter.of(B, emb)
    q_b = quotient(B, img_filter)
    phi = psi_morphism(B, img_filter, q_b)                # B/h(A) -> h(A)
    eta_inv = [0] * len(eta)
    for X, v in enumerate(eta):
        eta_inv[v] = X
    gamma = compose(psi, compose(eta_inv, phi))
    gm = ProductMorphism(q_b.algebra, ker.algebra, gamma)
    if not gm.is_valid():
        raise InternalInconsistency("composite gamma is not a product morphism")
    return f_product(ker.algebra, q_b.algebra, gm)


def _iso(a: FiniteHoop, b: FiniteHoop) -> bool:
    return hoop_isomorphism(a, b) is not None


def check_bullet_properties(corpus: Iterable[FiniteHoop],
                            homs: Optional[Iterable[HoopHomomorphism]] = None) -> ValidationReport:
    """Check the five listed identities of the bullet product.

    i) ``1 •_i A ≅ A``; ii) ``A •_j 1 ≅ A``; iii) ``F •_⊆ A ≅ A/F``;
    iv) ``A •_{-/F} A/F ≅ F``; v) ``h`` iso iff ``A •_h B ≅ 1``.
    Witnesses index the corpus (and filter / homomorphism lists).
    """
    corpus = list(corpus)
    found: dict[str, tuple] = {}

    def fail(name, w):
        found.setdefault(name, w)

    for k, A in enumerate(corpus):
        i = HoopHomomorphism(TRIVIAL, A, [A.unit])
        if not _iso(bullet_product(TRIVIAL, A, i).algebra, A):
            fail("bullet.i", (k,))
        j = HoopHomomorphism(A, TRIVIAL, [0] * A.size)
        if not _iso(bullet_product(A, TRIVIAL, j).algebra, A):
            fail("bullet.ii", (k,))
        for fi, F in enumerate(all_filters(A)):
            inc = inclusion(F)
            if not _iso(bullet_product(F.algebra, A, inc).algebra, quotient(A, F).algebra):
                fail("bullet.iii", (k, fi))
            proj, Q = projection(A, F)
            if not _iso(bullet_product(A, Q, proj).algebra, F.algebra):
                fail("bullet.iv", (k, fi))
    if homs is None:
        homs = [h for A in corpus for B in corpus for h in all_homomorphisms(A, B)]
    for hi, h in enumerate(homs):
        if not is_filter_homomorphism(h):
            continue
        bijective = sorted(h.map) == list(range(h.codomain.size))
        trivial = bullet_product(h.domain, h.codomain, h).algebra.size == 1
        if bijective != trivial:
            fail("bullet.v", (hi,))
    order = ["bullet.i", "bullet.ii", "bullet.iii", "bullet.iv", "bullet.v"]
    return ValidationReport(tuple(Violation(n, found[n]) for n in order if n in found))


@dataclass(frozen=True, eq=False)
class ExactSequence:
    hoops: tuple[FiniteHoop, ...]
    maps: tuple[HoopHomomorphism, ...]

    def __post_init__(self):
        if len(self.maps) != len(self.hoops) - 1:
            raise ValueError("need exactly one map between consecutive hoops")
        for k, h in enumerate(self.maps):
            if h.domain != self.hoops[k] or h.codomain != self.hoops[k + 1]:
                raise ValueError(f"map {k + 1} does not connect hoops {k} and {k + 1}")


def is_exact(seq: ExactSequence) -> bool:
    """``image(f_i) == Ker f_{i+1}`` at every interior hoop."""
    for f, g in zip(seq.maps, seq.maps[1:]):
        if set(image(f)) != set(kernel(g).members):
            return False
    return True


@dataclass(frozen=True, eq=False)
class TripleComposition:
    """The three readings of ``A •_f B •_g C`` and the auxiliary maps."""

    outer_right: PairedHoop   # D •_{f'} (B •_g C), D = Ker f ⋉ f(A) ≅ A
    outer_left: PairedHoop    # E •_{g'} C',  E = Ker f ⋉ g(B) ≅ A •_f B,  C' = g(B) ⋉ C/g(B) ≅ C
    direct: PairedHoop        # Ker f ⋉_{αβγ} C/g(B)
    f_prime: HoopHomomorphism
    g_prime: HoopHomomorphism
    isomorphisms: dict = field(default_factory=dict)


def triple_composition(A: FiniteHoop, B: FiniteHoop, C: FiniteHoop,
                       f: HoopHomomorphism, g: HoopHomomorphism) -> TripleComposition:
    """Build both bracketings of ``A •_f B •_g C`` and the direct form.

    With ``α: f(A) -> Ker f``, ``β: g(B) -> f(A)`` and ``γ: C/g(B) -> g(B)``
    from the decomposition morphisms, ``f'(a, b) = (b, 1)`` on
    ``Ker f ⋉_α f(A)`` and ``g'(a, b) = (b, 1)`` on ``Ker f ⋉_{αβ} g(B)``.
    All three results are compared by isomorphism search.
    """
    if not is_exact(ExactSequence((A, B, C), (f, g))):
        raise ValueError("A -> B -> C is not exact at B")
    if not is_filter_homomorphism(g):
        raise ValueError("g(B) is not a filter of C")
    ker_f = kernel(f)
    _, f_img, f_emb, eta_f = first_isomorphism(f)
    q_b, g_img, g_emb, eta_g = first_isomorphism(g)     # B/Ker g = B/f(A)
    psi_a = psi_morphism(A, ker_f)
    fa_filter = Filter.of(B, f_emb)
    phi_b = psi_morphism(B, fa_filter, q_b)             # B/f(A) -> f(A)
    gb_filter = Filter.of(C, g_emb)
    q_c = quotient(C, gb_filter)
    gamma = psi_morphism(C, gb_filter, q_c)             # C/g(B) -> g(B)

    alpha_m = compose(psi_a, [_index_of(eta_f, v) for v in range(f_img.size)])
    beta_m = compose(phi_b, [_index_of(eta_g, v) for v in range(g_img.size)])
    bg = compose(beta_m, gamma)
    abg = compose(alpha_m, bg)

    D = f_product(ker_f.algebra, f_img, alpha_m)
    BC = bullet_product(B, C, g)
    if BC.left != fa_filter.algebra or BC.morphism.map != bg:
        raise InternalInconsistency("B •_g C differs from f(A) ⋉_{βγ} C/g(B)")
    f_prime = HoopHomomorphism(D.algebra, BC.algebra,
                               [BC.index(b, q_c.unit_class) for _, b in D.pairs])
    outer_right = bullet_product(D.algebra, BC.algebra, f_prime)

    E = f_product(ker_f.algebra, g_img, compose(alpha_m, beta_m))
    C2 = f_product(g_img, q_c.algebra, gamma)
    g_prime = HoopHomomorphism(E.algebra, C2.algebra,
                               [C2.index(b, q_c.unit_class) for _, b in E.pairs])
    outer_left = bullet_product(E.algebra, C2.algebra, g_prime)

    direct = f_product(ker_f.algebra, q_c.algebra, abg)

    isos = {
        "D~A": hoop_isomorphism(D.algebra, A),
        "E~A•B": hoop_isomorphism(E.algebra, bullet_product(A, B, f).algebra),
        "C'~C": hoop_isomorphism(C2.algebra, C),
        "right~direct": hoop_isomorphism(outer_right.algebra, direct.algebra),
        "left~direct": hoop_isomorphism(outer_left.algebra, direct.algebra),
        "right~left": hoop_isomorphism(outer_right.algebra, outer_left.algebra),
    }
    missing = [k for k, v in isos.items() if v is None]
    if not is_filter_homomorphism(f_prime) or not is_filter_homomorphism(g_prime):
        raise VerificationFailure("f' or g' is not a filter homomorphism")
    if missing:
        raise VerificationFailure(f"triple composition: no isomorphism for {missing}")
    return TripleComposition(outer_right, outer_left, direct, f_prime, g_prime, isos)


def _index_of(table: Sequence[int], v: int) -> int:
    return table.index(v)
