"""Left- and right-associated pairs of product morphisms.

For hoops ``A, B, C`` a left pair ``(f, g)`` has ``f: B -> A`` and
``g: C -> A ⋉_f B``; a right pair has ``g: C -> B`` and
``f: B ⋉_g C -> A``.  :func:`alpha` and :func:`beta` translate between them
and :func:`gamma_iso` gives the element bijection between the two triple
products.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator, Union

from .constructions import PairedHoop, ProductMorphism, all_product_morphisms, f_product
from .core import FiniteHoop, VerificationFailure, is_isomorphism

__all__ = [
    "LeftAssociatedPair",
    "RightAssociatedPair",
    "alpha",
    "beta",
    "verify_inverse",
    "gamma_iso",
    "left_pairs",
    "right_pairs",
]


@dataclass(frozen=True, eq=False)
class LeftAssociatedPair:
    A: FiniteHoop
    B: FiniteHoop
    C: FiniteHoop
    f: tuple[int, ...]  # B -> A
    g: tuple[int, ...]  # C -> A ⋉_f B, as indices into that product

    @cached_property
    def inner(self) -> PairedHoop:
        return f_product(self.A, self.B, self.f)

    @cached_property
    def outer(self) -> PairedHoop:
        """``(A ⋉_f B) ⋉_g C``."""
        return f_product(self.inner.algebra, self.C, self.g)

    def is_valid(self) -> bool:
        return ProductMorphism(self.B, self.A, self.f).is_valid() and \
            ProductMorphism(self.C, self.inner.algebra, self.g).is_valid()

    def key(self):
        return ("left", self.f, self.g)


@dataclass(frozen=True, eq=False)
class RightAssociatedPair:
    A: FiniteHoop
    B: FiniteHoop
    C: FiniteHoop
    g: tuple[int, ...]  # C -> B
    f: tuple[int, ...]  # B ⋉_g C -> A, indexed by that product

    @cached_property
    def inner(self) -> PairedHoop:
        return f_product(self.B, self.C, self.g)

    @cached_property
    def outer(self) -> PairedHoop:
        """``A ⋉_f (B ⋉_g C)``."""
        return f_product(self.A, self.inner.algebra, self.f)

    def is_valid(self) -> bool:
        return ProductMorphism(self.C, self.B, self.g).is_valid() and \
            ProductMorphism(self.inner.algebra, self.A, self.f).is_valid()

    def key(self):
        return ("right", self.f, self.g)


Pair = Union[LeftAssociatedPair, RightAssociatedPair]


def alpha(pair: LeftAssociatedPair) -> RightAssociatedPair:
    """``g' = g₂`` and ``f'(b, c) = f(b) ∧ g₁(c)``."""
    A = pair.A
    g_pairs = [pair.inner.pairs[k] for k in pair.g]
    g1 = [a for a, _ in g_pairs]
    g2 = tuple(b for _, b in g_pairs)
    bc = f_product(pair.B, pair.C, g2)
    meet = A.order.meet
    f_bar = tuple(int(meet[pair.f[b], g1[c]]) for b, c in bc.pairs)
    out = RightAssociatedPair(A, pair.B, pair.C, g2, f_bar)
    out.__dict__["inner"] = bc
    if not ProductMorphism(bc.algebra, A, f_bar).is_valid():
        raise VerificationFailure("alpha produced a map that is not a product morphism")
    return out


def beta(pair: RightAssociatedPair) -> LeftAssociatedPair:
    """``f'(b) = f(b, 1)`` and ``g'(c) = (f(g(c), c), g(c))``."""
    bc = pair.inner
    C = pair.C
    f_bar = tuple(pair.f[bc.index(b, C.unit)] for b in range(pair.B.size))
    ab = f_product(pair.A, pair.B, f_bar)
    g_bar = []
    for c in range(C.size):
        b = pair.g[c]
        a = pair.f[bc.index(b, c)]
        if (a, b) not in ab.index_of:
            raise VerificationFailure(f"beta: ({a},{b}) is not in A ⋉ B")
        g_bar.append(ab.index(a, b))
    out = LeftAssociatedPair(pair.A, pair.B, C, f_bar, tuple(g_bar))
    out.__dict__["inner"] = ab
    if not ProductMorphism(C, ab.algebra, out.g).is_valid():
        raise VerificationFailure("beta produced a map that is not a product morphism")
    return out


def verify_inverse(pair: Pair) -> bool:
    """``beta(alpha(p)) == p`` for left pairs, ``alpha(beta(p)) == p`` for right pairs."""
    if isinstance(pair, LeftAssociatedPair):
        back = beta(alpha(pair))
    else:
        back = alpha(beta(pair))
    return back.f == pair.f and back.g == pair.g


def gamma_iso(right: RightAssociatedPair, left: LeftAssociatedPair | None = None) -> tuple[int, ...]:
    """``(a, (b, c)) -> ((a, b), c)`` from ``A ⋉_f (B ⋉_g C)`` to ``(A ⋉ B) ⋉ C``.

    ``left`` defaults to ``beta(right)``.  Raises
    :class:`VerificationFailure` if the bijection is not an isomorphism.
    """
    left = left or beta(right)
    src, bc = right.outer, right.inner
    dst, ab = left.outer, left.inner
    A, B, C = right.A, right.B, right.C
    leq_a, leq_b = A.order.leq, B.order.leq
    f, g, f1 = right.f, right.g, left.f
    for a, b, c in product(range(A.size), range(B.size), range(C.size)):
        m = ab.index_of.get((a, b))
        in_dst = m is not None and (m, c) in dst.index_of
        k = bc.index_of.get((b, c))
        in_src = k is not None and (a, k) in src.index_of
        chain = bool(leq_a[a, f1[b]] and leq_a[a, f[bc.index(g[c], c)]] and leq_b[b, g[c]])
        if not in_dst == chain == in_src:
            raise VerificationFailure(f"membership chain fails at {(a, (b, c))}")
    table = []
    for a, k in src.pairs:
        b, c = bc.pairs[k]
        table.append(dst.index(ab.index(a, b), c))
    if not is_isomorphism(src.algebra, dst.algebra, table):
        raise VerificationFailure("Gamma is not an isomorphism")
    return tuple(table)


def left_pairs(A: FiniteHoop, B: FiniteHoop, C: FiniteHoop) -> Iterator[LeftAssociatedPair]:
    """Every left-associated pair for ``(A, B, C)``: ``f`` first, then ``g``."""
    for f in all_product_morphisms(B, A):
        ab = f_product(A, B, f)
        for g in all_product_morphisms(C, ab.algebra):
            p = LeftAssociatedPair(A, B, C, f.map, g.map)
            p.__dict__["inner"] = ab
            yield p


def right_pairs(A: FiniteHoop, B: FiniteHoop, C: FiniteHoop) -> Iterator[RightAssociatedPair]:
    for g in all_product_morphisms(C, B):
        bc = f_product(B, C, g)
        for f in all_product_morphisms(bc.algebra, A):
            p = RightAssociatedPair(A, B, C, g.map, f.map)
            p.__dict__["inner"] = bc
            yield p
