"""Product morphisms and the product-like constructions built on them."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product as cartesian
from typing import Optional, Sequence

import numpy as np

from .core import (
    FiniteHoop,
    InternalInconsistency,
    validate_hoop,
)
from .filters import Filter, QuotientHoop, quotient

__all__ = [
    "ProductMorphism",
    "Nucleus",
    "PairedHoop",
    "is_product_morphism",
    "all_product_morphisms",
    "epsilon_morphism",
    "sigma_morphism",
    "compose",
    "f_product",
    "direct_product",
    "ordinal_sum",
    "is_nucleus",
    "nucleus_image",
    "gamma_X",
]


@dataclass(frozen=True)
class ProductMorphism:
    """A map ``domain -> codomain`` given by its table of image indices.

    In ``A ⋉_f B`` the morphism goes from ``B`` (domain) to ``A`` (codomain).
    """

    domain: FiniteHoop
    codomain: FiniteHoop
    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(v) for v in self.map))
        if len(self.map) != self.domain.size:
            raise ValueError("map length differs from domain size")
        if any(not 0 <= v < self.codomain.size for v in self.map):
            raise ValueError("map entry outside codomain")

    def __call__(self, x: int) -> int:
        return self.map[x]

    def __repr__(self):
        return f"ProductMorphism({list(self.map)})"

    def is_valid(self) -> bool:
        return is_product_morphism(self.map, self.domain, self.codomain)


def is_product_morphism(candidate: Sequence[int], domain: FiniteHoop, codomain: FiniteHoop) -> bool:
    """(pM1) ``f(1) = 1`` and (pM2) ``f(x)f(y) = f(xy) = f(x)∧f(y) = f(x∧y)``."""
    f = np.asarray(candidate, dtype=np.intp)
    if f.shape != (domain.size,) or (f < 0).any() or (f >= codomain.size).any():
        raise ValueError("candidate map has wrong length or range")
    if f[domain.unit] != codomain.unit:
        return False
    fx, fy = f[:, None], f[None, :]
    lhs = codomain.mul_arr[fx, fy]
    meet = codomain.order.meet[fx, fy]
    return bool(
        (lhs == f[domain.mul_arr]).all()
        and (lhs == meet).all()
        and (meet == f[domain.order.meet]).all()
    )


def _meet_irreducibles(hoop: FiniteHoop) -> list[int]:
    """Elements other than the unit with exactly one upper cover."""
    ups = {}
    for lo, hi in hoop.order.hasse_edges:
        ups.setdefault(lo, []).append(hi)
    return [x for x in range(hoop.size) if x != hoop.unit and len(ups.get(x, ())) == 1]


def all_product_morphisms(domain: FiniteHoop, codomain: FiniteHoop) -> list[ProductMorphism]:
    """Every product morphism ``domain -> codomain``, in lexicographic order.

    A product morphism preserves finite meets, so it is fixed by its values
    on the meet-irreducible elements; those range over the idempotents and
    are searched with monotonicity pruning, then the extension is checked.
    """
    n = domain.size
    leq, cleq = domain.order.leq, codomain.order.leq
    cmeet = codomain.order.meet
    irr = _meet_irreducibles(domain)
    # top-down, so comparable elements above are already decided
    irr.sort(key=lambda x: -int(leq[:, x].sum()))
    ids = sorted(codomain.idempotents)
    above = {x: [m for m in irr if leq[x, m]] for x in range(n)}
    found = []
    values: dict[int, int] = {}

    def extend():
        f = [0] * n
        for x in range(n):
            v = codomain.unit
            for m in above[x]:
                v = int(cmeet[v, values[m]])
            f[x] = v
        return f

    def search(k: int):
        if k == len(irr):
            f = extend()
            if is_product_morphism(f, domain, codomain):
                found.append(tuple(f))
            return
        x = irr[k]
        for v in ids:
            if all(cleq[v, values[m]] for m in irr[:k] if leq[x, m]) and \
                    all(cleq[values[m], v] for m in irr[:k] if leq[m, x]):
                values[x] = v
                search(k + 1)
                del values[x]

    search(0)
    return [ProductMorphism(domain, codomain, f) for f in sorted(found)]


def epsilon_morphism(domain: FiniteHoop, codomain: FiniteHoop) -> ProductMorphism:
    """The constant map onto the unit (the greatest product morphism)."""
    return ProductMorphism(domain, codomain, [codomain.unit] * domain.size)


def sigma_morphism(domain: FiniteHoop, codomain: FiniteHoop) -> ProductMorphism:
    """Unit to unit, everything else to the bottom (the least product morphism)."""
    bot = codomain.bottom
    return ProductMorphism(domain, codomain,
                           [codomain.unit if x == domain.unit else bot for x in range(domain.size)])


def compose(outer: ProductMorphism | Sequence[int], inner: ProductMorphism | Sequence[int]) -> tuple[int, ...]:
    """Table of ``outer ∘ inner``."""
    o = outer.map if isinstance(outer, ProductMorphism) else tuple(outer)
    i = inner.map if isinstance(inner, ProductMorphism) else tuple(inner)
    return tuple(o[x] for x in i)


@dataclass(frozen=True, eq=False)
class PairedHoop:
    """A hoop whose elements are pairs ``(a, x)`` of factor elements.

    ``pairs[k]`` is the pair behind element ``k`` of ``algebra``; pairs are
    sorted by ``(x, a)``.  ``morphism`` is None for the direct product.
    """

    algebra: FiniteHoop
    pairs: tuple[tuple[int, int], ...]
    left: FiniteHoop
    right: FiniteHoop
    morphism: Optional[ProductMorphism] = None

    @cached_property
    def index_of(self) -> dict[tuple[int, int], int]:
        return {p: k for k, p in enumerate(self.pairs)}

    def index(self, a: int, x: int) -> int:
        return self.index_of[(a, x)]

    def __len__(self):
        return self.algebra.size


def _paired(left: FiniteHoop, right: FiniteHoop, pairs, mul_pair, imp_pair, morphism=None) -> PairedHoop:
    pairs = sorted(pairs, key=lambda p: (p[1], p[0]))
    index = {p: k for k, p in enumerate(pairs)}
    mul = [[index[mul_pair(p, q)] for q in pairs] for p in pairs]
    imp = [[index[imp_pair(p, q)] for q in pairs] for p in pairs]
    labels = [f"({left.label(a)},{right.label(x)})" for a, x in pairs]
    alg = FiniteHoop(len(pairs), index[(left.unit, right.unit)], mul, imp, labels)
    report = validate_hoop(alg.size, alg.unit, alg.mul, alg.imp)
    if not report.valid:
        raise InternalInconsistency(f"product is not a hoop: {report.summary()}")
    return PairedHoop(alg, tuple(pairs), left, right, morphism)


def f_product(A: FiniteHoop, B: FiniteHoop, f: ProductMorphism | Sequence[int]) -> PairedHoop:
    """``A ⋉_f B`` on the pairs ``(a, x)`` with ``a <= f(x)``, for ``f: B -> A``."""
    if not isinstance(f, ProductMorphism):
        f = ProductMorphism(B, A, f)
    if f.domain != B or f.codomain != A:
        raise ValueError("morphism must go from the right factor to the left factor")
    if not f.is_valid():
        raise ValueError(f"{f} is not a product morphism")
    leq = A.order.leq
    meet = A.order.meet
    fm = f.map
    pairs = [(a, x) for x in range(B.size) for a in range(A.size) if leq[a, fm[x]]]

    def mul(p, q):
        return (A.mul[p[0]][q[0]], B.mul[p[1]][q[1]])

    def imp(p, q):
        y = B.imp[p[1]][q[1]]
        return (int(meet[fm[y], A.imp[p[0]][q[0]]]), y)

    return _paired(A, B, pairs, mul, imp, f)


def direct_product(A: FiniteHoop, B: FiniteHoop) -> PairedHoop:
    pairs = list(cartesian(range(A.size), range(B.size)))
    return _paired(
        A, B, pairs,
        lambda p, q: (A.mul[p[0]][q[0]], B.mul[p[1]][q[1]]),
        lambda p, q: (A.imp[p[0]][q[0]], B.imp[p[1]][q[1]]),
    )


def ordinal_sum(A: FiniteHoop, B: FiniteHoop) -> FiniteHoop:
    """``A ⊕ B``: the unit of ``A`` replaced by a copy of ``B`` on top."""
    carrier = [("A", a) for a in range(A.size) if a != A.unit] + [("B", b) for b in range(B.size)]
    index = {c: k for k, c in enumerate(carrier)}

    def mul(p, q):
        (s, x), (t, y) = p, q
        if s == t == "A":
            return ("A", A.mul[x][y])
        if s == t == "B":
            return ("B", B.mul[x][y])
        return p if s == "A" else q

    def imp(p, q):
        (s, x), (t, y) = p, q
        if s == t == "A":
            z = A.imp[x][y]
            return ("B", B.unit) if z == A.unit else ("A", z)
        if s == t == "B":
            return ("B", B.imp[x][y])
        return ("B", B.unit) if s == "A" else q

    table_m = [[index[mul(p, q)] for q in carrier] for p in carrier]
    table_i = [[index[imp(p, q)] for q in carrier] for p in carrier]
    labels = [f"{s.lower()}:{(A if s == 'A' else B).label(x)}" for s, x in carrier]
    alg = FiniteHoop(len(carrier), index[("B", B.unit)], table_m, table_i, labels)
    report = validate_hoop(alg.size, alg.unit, alg.mul, alg.imp)
    if not report.valid:
        raise InternalInconsistency(f"ordinal sum is not a hoop: {report.summary()}")
    return alg


@dataclass(frozen=True)
class Nucleus:
    parent: FiniteHoop
    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(v) for v in self.map))

    def __call__(self, x: int) -> int:
        return self.map[x]

    @property
    def fixed_points(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.parent.size) if self.map[x] == x)


def is_nucleus(parent: FiniteHoop, g: Sequence[int]) -> bool:
    """Inflationary, monotone, idempotent, and ``g(a)g(b) <= g(ab)``."""
    g = np.asarray(g, dtype=np.intp)
    if g.shape != (parent.size,) or (g < 0).any() or (g >= parent.size).any():
        return False
    leq = parent.order.leq
    r = np.arange(parent.size)
    return bool(
        leq[r, g].all()
        and (~leq | leq[g[:, None], g[None, :]]).all()
        and (g[g] == g).all()
        and leq[parent.mul_arr[g[:, None], g[None, :]], g[parent.mul_arr]].all()
    )


def nucleus_image(F: FiniteHoop, gamma: Nucleus | Sequence[int]) -> FiniteHoop:
    """The fixed points of ``gamma`` with ``a·b := gamma(ab)`` and restricted arrow."""
    g = gamma.map if isinstance(gamma, Nucleus) else tuple(gamma)
    if not is_nucleus(F, g):
        raise ValueError("map is not a nucleus")
    fixed = [x for x in range(F.size) if g[x] == x]
    pos = {x: k for k, x in enumerate(fixed)}
    try:
        mul = [[pos[g[F.mul[a][b]]] for b in fixed] for a in fixed]
        imp = [[pos[F.imp[a][b]] for b in fixed] for a in fixed]
    except KeyError as exc:
        raise InternalInconsistency("nucleus image not closed under arrow") from exc
    alg = FiniteHoop(len(fixed), pos[F.unit], mul, imp, [F.label(x) for x in fixed])
    if not validate_hoop(alg.size, alg.unit, alg.mul, alg.imp).valid:
        raise InternalInconsistency("nucleus image is not a hoop")
    return alg


def gamma_X(hoop: FiniteHoop, filt: Filter, X: int, q: QuotientHoop | None = None) -> Nucleus:
    """The nucleus ``a -> t_X -> (t_X · a)`` on the filter subalgebra ``F``.

    Indices of the returned nucleus refer to ``filt.algebra``.
    """
    q = q or quotient(hoop, filt)
    t = q.class_top[X]
    pos = filt.position
    try:
        table = [pos[hoop.imp[t][hoop.mul[t][a]]] for a in filt.members]
    except KeyError as exc:
        raise InternalInconsistency("t_X -> t_X·a left the filter") from exc
    return Nucleus(filt.algebra, table)
