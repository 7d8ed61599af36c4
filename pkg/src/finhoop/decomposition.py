"""Splitting finite hoops into f-products of finite MV-chains."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Optional, Union

from .associativity import LeftAssociatedPair, RightAssociatedPair, alpha, beta, gamma_iso
from .constructions import (
    PairedHoop,
    ProductMorphism,
    all_product_morphisms,
    compose,
    f_product,
)
from .core import (
    FiniteHoop,
    InternalInconsistency,
    VerificationFailure,
    hoop_isomorphism,
    idempotent_chain_length,
    is_isomorphism,
)
from .filters import Filter, QuotientHoop, all_filters, is_simple, principal_filter, quotient

__all__ = [
    "STRATEGIES",
    "mv_chain",
    "is_mv_chain",
    "is_irreducible",
    "psi_morphism",
    "Omega",
    "omega",
    "Leaf",
    "Node",
    "DecompositionCertificate",
    "choose_filter",
    "full_decomposition",
    "census_nu",
    "census_mu",
]

STRATEGIES = ("smallest", "largest-proper", "median-idempotent")


@lru_cache(maxsize=None)
def mv_chain(n: int) -> FiniteHoop:
    """The Łukasiewicz chain on ``0 < 1 < ... < n-1`` (unit ``n-1``)."""
    if n < 1:
        raise ValueError("an MV-chain needs at least one element")
    top = n - 1
    mul = [[max(0, i + j - top) for j in range(n)] for i in range(n)]
    imp = [[min(top, top - i + j) for j in range(n)] for i in range(n)]
    labels = ["1"] if n == 1 else [
        "0" if i == 0 else "1" if i == top else f"{i}/{top}" for i in range(n)
    ]
    return FiniteHoop(n, top, mul, imp, labels)


def is_mv_chain(hoop: FiniteHoop) -> Optional[int]:
    """The order ``n`` if ``hoop`` is isomorphic to ``mv_chain(n)``, n >= 2.

    Cross-checked against :func:`is_simple`; a disagreement raises
    :class:`InternalInconsistency`.
    """
    if hoop.size < 2:
        return None
    iso = hoop_isomorphism(mv_chain(hoop.size), hoop)
    if (iso is not None) != is_simple(hoop):
        raise InternalInconsistency("simplicity and MV-chain recognition disagree")
    return hoop.size if iso is not None else None


def is_irreducible(hoop: FiniteHoop) -> bool:
    """Irreducible under f-products, computed as simplicity."""
    return is_simple(hoop)


def psi_morphism(hoop: FiniteHoop, filt: Filter, q: QuotientHoop | None = None) -> ProductMorphism:
    """``X -> t_X ∨ l`` from ``A/F`` into the filter subalgebra ``F``."""
    q = q or quotient(hoop, filt)
    l = filt.bottom
    join = hoop.order.join
    pos = filt.position
    table = [pos[int(join[t, l])] for t in q.class_top]
    psi = ProductMorphism(q.algebra, filt.algebra, table)
    if not psi.is_valid():
        raise VerificationFailure("psi is not a product morphism")
    return psi


@dataclass(frozen=True, eq=False)
class Omega:
    """``a -> (a ∨ l, a/F)`` onto ``F ⋉_psi (A/F)`` and its inverse ``(a, X) -> a ∧ t_X``."""

    product: PairedHoop
    forward: tuple[int, ...]
    inverse: tuple[int, ...]
    psi: ProductMorphism
    quotient: QuotientHoop


def omega(hoop: FiniteHoop, filt: Filter, q: QuotientHoop | None = None) -> Omega:
    q = q or quotient(hoop, filt)
    psi = psi_morphism(hoop, filt, q)
    prod = f_product(filt.algebra, q.algebra, psi)
    l = filt.bottom
    join, meet = hoop.order.join, hoop.order.meet
    pos, emb = filt.position, filt.embedding
    fwd = []
    for a in range(hoop.size):
        pair = (pos[int(join[a, l])], q.class_of[a])
        if pair not in prod.index_of:
            raise VerificationFailure(f"Omega({a}) = {pair} is outside the product")
        fwd.append(prod.index(*pair))
    inv = [int(meet[emb[a], q.class_top[X]]) for a, X in prod.pairs]
    if any(inv[fwd[a]] != a for a in range(hoop.size)) or \
            any(fwd[inv[k]] != k for k in range(prod.algebra.size)):
        raise VerificationFailure("Omega and its inverse formula are not mutually inverse")
    if not is_isomorphism(hoop, prod.algebra, fwd):
        raise VerificationFailure("Omega does not preserve the operations")
    return Omega(prod, tuple(fwd), tuple(inv), psi, q)


@dataclass(frozen=True, eq=False)
class Leaf:
    order: int

    @property
    def hoop(self) -> FiniteHoop:
        return mv_chain(self.order)

    def leaves(self) -> list[int]:
        return [self.order]

    def __str__(self):
        return f"Ł{self.order}"


@dataclass(frozen=True, eq=False)
class Node:
    """``left ⋉_morphism right`` with ``morphism: eval(right) -> eval(left)``."""

    left: "Tree"
    morphism: tuple[int, ...]
    right: "Tree"

    @cached_property
    def paired(self) -> PairedHoop:
        return f_product(self.left.hoop, self.right.hoop, self.morphism)

    @property
    def hoop(self) -> FiniteHoop:
        return self.paired.algebra

    def leaves(self) -> list[int]:
        return self.left.leaves() + self.right.leaves()

    def morphism_name(self) -> str:
        dom, cod = self.right.hoop, self.left.hoop
        if all(v == cod.unit for v in self.morphism):
            return "ε"
        if all(v == (cod.unit if x == dom.unit else cod.bottom) for x, v in enumerate(self.morphism)):
            return "σ"
        return "f"

    def __str__(self):
        left = str(self.left)
        right = str(self.right)
        if isinstance(self.left, Node):
            left = f"({left})"
        if isinstance(self.right, Node):
            right = f"({right})"
        return f"{left} ⋉_{self.morphism_name()} {right}"


Tree = Union[Leaf, Node]


def _invert(h) -> tuple[int, ...]:
    inv = [0] * len(h)
    for x, y in enumerate(h):
        inv[y] = x
    return tuple(inv)


def _is_left_nested(t: Tree) -> bool:
    return isinstance(t, Leaf) or (isinstance(t.right, Leaf) and _is_left_nested(t.left))


def _is_right_nested(t: Tree) -> bool:
    return isinstance(t, Leaf) or (isinstance(t.left, Leaf) and _is_right_nested(t.right))


def _normalize_right(t: Tree) -> tuple[Tree, tuple[int, ...]]:
    """Right-nested tree plus the isomorphism from its value to the value of ``t``."""
    if isinstance(t, Leaf):
        return t, tuple(range(t.hoop.size))
    L, R = t.left, t.right
    R2, h_r = _normalize_right(R)
    m2 = compose(t.morphism, h_r)
    t2 = Node(L, m2, R2)
    iso2 = tuple(t.paired.index(u, h_r[v]) for u, v in t2.paired.pairs)
    if isinstance(L, Leaf):
        return t2, iso2
    left = LeftAssociatedPair(L.left.hoop, L.right.hoop, R2.hoop, L.morphism, m2)
    left.__dict__["inner"] = L.paired
    right = alpha(left)
    t3 = Node(L.left, right.f, Node(L.right, right.g, R2))
    gam = gamma_iso(right, left)  # value(t3) -> value(t2)
    t4, h4 = _normalize_right(t3)
    return t4, tuple(iso2[gam[h4[k]]] for k in range(len(h4)))


def _normalize_left(t: Tree) -> tuple[Tree, tuple[int, ...]]:
    if isinstance(t, Leaf):
        return t, tuple(range(t.hoop.size))
    L, R = t.left, t.right
    L2, h_l = _normalize_left(L)
    inv_l = _invert(h_l)
    m2 = tuple(inv_l[v] for v in t.morphism)
    t2 = Node(L2, m2, R)
    iso2 = tuple(t.paired.index(h_l[u], v) for u, v in t2.paired.pairs)
    if isinstance(R, Leaf):
        return t2, iso2
    right = RightAssociatedPair(L2.hoop, R.left.hoop, R.right.hoop, R.morphism, m2)
    right.__dict__["inner"] = R.paired
    left = beta(right)
    t3 = Node(Node(L2, left.f, R.left), left.g, R.right)
    gam_inv = _invert(gamma_iso(right, left))  # value(t3) -> value(t2)
    t4, h4 = _normalize_left(t3)
    return t4, tuple(iso2[gam_inv[h4[k]]] for k in range(len(h4)))


@dataclass(frozen=True, eq=False)
class DecompositionCertificate:
    """A nested f-product of MV-chains and an isomorphism onto the input."""

    shape: Tree
    association: str
    iso_to_input: tuple[int, ...]
    strategy: str = "smallest"

    @property
    def leaves(self) -> list[int]:
        return self.shape.leaves()

    def evaluate(self) -> FiniteHoop:
        return self.shape.hoop

    def verify(self, hoop: FiniteHoop) -> bool:
        return is_isomorphism(self.shape.hoop, hoop, self.iso_to_input)

    def __str__(self):
        return str(self.shape)


def _median_idempotent(hoop: FiniteHoop) -> int:
    leq = hoop.order.leq
    ids = sorted(hoop.idempotents)
    chain = [hoop.bottom]
    while chain[-1] != hoop.unit:
        x = chain[-1]
        above = [y for y in ids if y != x and leq[x, y]]
        covers = [y for y in above if not any(z != y and leq[z, y] for z in above)]
        chain.append(min(covers))
    return chain[len(chain) // 2]


def choose_filter(hoop: FiniteHoop, strategy: str = "smallest") -> Filter:
    """A nontrivial proper filter of a hoop that is not simple."""
    filters = all_filters(hoop)
    proper = [F for F in filters if not F.is_trivial() and not F.is_full()]
    if not proper:
        raise ValueError("hoop has no nontrivial proper filter")
    if strategy == "smallest":
        return proper[0]
    if strategy == "largest-proper":
        return proper[-1]
    if strategy == "median-idempotent":
        return principal_filter(hoop, _median_idempotent(hoop))
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


def _decompose(hoop: FiniteHoop, strategy: str) -> tuple[Tree, tuple[int, ...]]:
    n = is_mv_chain(hoop)
    if n is not None:
        iso = hoop_isomorphism(mv_chain(n), hoop)
        return Leaf(n), iso
    filt = choose_filter(hoop, strategy)
    om = omega(hoop, filt)
    t_f, i_f = _decompose(filt.algebra, strategy)
    t_q, i_q = _decompose(om.quotient.algebra, strategy)
    inv_f = _invert(i_f)
    m = tuple(inv_f[om.psi.map[i_q[v]]] for v in range(len(i_q)))
    node = Node(t_f, m, t_q)
    iso = tuple(om.inverse[om.product.index(i_f[u], i_q[v])] for u, v in node.paired.pairs)
    return node, iso


def full_decomposition(hoop: FiniteHoop, association: str = "right",
                       strategy: str = "smallest") -> DecompositionCertificate:
    """Decompose a nontrivial finite hoop into a nested f-product of MV-chains.

    ``association`` selects ``M1 ⋉ (M2 ⋉ ...)`` ("right") or
    ``((M1 ⋉ M2) ⋉ ...)`` ("left"); rebracketing goes through
    :func:`alpha`/:func:`beta`.  The returned isomorphism is checked
    before returning.
    """
    if hoop.size < 2:
        raise ValueError("the trivial hoop has no decomposition into MV-chains")
    if association not in ("left", "right"):
        raise ValueError("association must be 'left' or 'right'")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    tree, iso = _decompose(hoop, strategy)
    if association == "right":
        tree, h = _normalize_right(tree)
        nested = _is_right_nested(tree)
    else:
        tree, h = _normalize_left(tree)
        nested = _is_left_nested(tree)
    iso = tuple(iso[h[k]] for k in range(len(h)))
    cert = DecompositionCertificate(tree, association, iso, strategy)
    if not nested:
        raise InternalInconsistency("rebracketing did not produce the requested nesting")
    if not cert.verify(hoop):
        raise InternalInconsistency("certificate isomorphism failed verification")
    if len(cert.leaves) != idempotent_chain_length(hoop) - 1:
        raise InternalInconsistency("leaf count differs from idempotent chain length - 1")
    return cert


def _least(hoop: FiniteHoop, members) -> int:
    meet = hoop.order.meet
    members = list(members)
    m = members[0]
    for x in members[1:]:
        m = int(meet[m, x])
    if m not in members:
        raise VerificationFailure("preimage of the unit has no least element")
    return m


def census_nu(A: FiniteHoop, M: FiniteHoop) -> list[tuple[ProductMorphism, int]]:
    """Product morphisms ``A -> M`` paired with the least element of ``psi^{-1}(1)``.

    Verifies the threshold shape ``psi(x) = 1 iff e <= x`` and that the
    pairing is a bijection onto the idempotents of ``A``.
    """
    if is_mv_chain(M) is None:
        raise ValueError("M must be an MV-chain with at least two elements")
    leq = A.order.leq
    out = []
    for psi in all_product_morphisms(A, M):
        e = _least(A, [x for x in range(A.size) if psi.map[x] == M.unit])
        expected = [M.unit if leq[e, x] else M.bottom for x in range(A.size)]
        if list(psi.map) != expected:
            raise VerificationFailure(f"{psi} is not the threshold map at {e}")
        out.append((psi, e))
    _check_bijection([e for _, e in out], A)
    return out


def census_mu(A: FiniteHoop, M: FiniteHoop) -> list[tuple[ProductMorphism, int]]:
    """Product morphisms ``M -> A`` paired with ``psi(0)``.

    Verifies each is constant ``psi(0)`` below the unit and that the pairing
    is a bijection onto the idempotents of ``A``.
    """
    if is_mv_chain(M) is None:
        raise ValueError("M must be an MV-chain with at least two elements")
    out = []
    for psi in all_product_morphisms(M, A):
        e = psi.map[M.bottom]
        if any(psi.map[x] != e for x in range(M.size) if x != M.unit):
            raise VerificationFailure(f"{psi} is not two-valued")
        out.append((psi, e))
    _check_bijection([e for _, e in out], A)
    return out


def _check_bijection(images: list[int], A: FiniteHoop):
    if len(set(images)) != len(images) or set(images) != set(A.idempotents):
        raise VerificationFailure("pairing is not a bijection onto the idempotents")
