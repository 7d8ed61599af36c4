"""Finite hoops as operation tables.

A hoop is stored as two dense n x n tables over the element indices
``0..n-1`` together with the index of the unit.  Elements carry optional
display labels; every computation acts on indices only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Optional, Sequence

import numpy as np

__all__ = [
    "HoopError",
    "HoopStructureError",
    "HoopAxiomError",
    "InternalInconsistency",
    "VerificationFailure",
    "FiniteHoop",
    "OrderStructure",
    "Violation",
    "ValidationReport",
    "AXIOMS",
    "validate_hoop",
    "make_hoop",
    "derive_order",
    "idempotents",
    "idempotent_chain_length",
    "check_lemma_suite",
    "hoop_isomorphism",
    "is_isomorphism",
    "subalgebra",
    "relabel",
]


class HoopError(Exception):
    """Base class for all errors raised by this package."""


class HoopStructureError(HoopError, ValueError):
    """Tables have the wrong shape or contain out-of-range entries."""


class HoopAxiomError(HoopError, ValueError):
    """Well-formed tables that violate one or more hoop axioms."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__(f"not a hoop: {report.summary()}")


class InternalInconsistency(HoopError, RuntimeError):
    """A state that valid inputs can never reach; signals a bug."""


class VerificationFailure(HoopError, RuntimeError):
    """A constructed witness (isomorphism, morphism, ...) failed its check."""


def _as_table(rows, n: int, name: str) -> tuple[tuple[int, ...], ...]:
    try:
        table = tuple(tuple(int(v) for v in row) for row in rows)
    except TypeError as exc:
        raise HoopStructureError(f"{name} is not a matrix") from exc
    if len(table) != n or any(len(row) != n for row in table):
        raise HoopStructureError(f"{name} must be {n}x{n}")
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise HoopStructureError(f"{name}[{i}][{j}] = {v} out of range 0..{n - 1}")
    return table


@dataclass(frozen=True)
class FiniteHoop:
    """A finite algebra ``(A, mul, imp, unit)`` on the indices ``0..size-1``.

    Construction only checks the table shapes.  Use :func:`make_hoop` to
    also enforce the hoop axioms.
    """

    size: int
    unit: int
    mul: tuple[tuple[int, ...], ...]
    imp: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        n = int(self.size)
        if n < 1:
            raise HoopStructureError("size must be positive")
        if not 0 <= int(self.unit) < n:
            raise HoopStructureError(f"unit {self.unit} out of range")
        object.__setattr__(self, "size", n)
        object.__setattr__(self, "unit", int(self.unit))
        object.__setattr__(self, "mul", _as_table(self.mul, n, "mul"))
        object.__setattr__(self, "imp", _as_table(self.imp, n, "imp"))
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != n:
                raise HoopStructureError("labels must have one entry per element")
            object.__setattr__(self, "labels", labels)

    def __repr__(self):
        return f"FiniteHoop(size={self.size}, unit={self.unit})"

    def __len__(self):
        return self.size

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    @cached_property
    def mul_arr(self) -> np.ndarray:
        a = np.array(self.mul, dtype=np.intp)
        a.flags.writeable = False
        return a

    @cached_property
    def imp_arr(self) -> np.ndarray:
        a = np.array(self.imp, dtype=np.intp)
        a.flags.writeable = False
        return a

    @cached_property
    def order(self) -> "OrderStructure":
        return derive_order(self)

    @property
    def bottom(self) -> int:
        return self.order.bottom

    def leq(self, x: int, y: int) -> bool:
        return self.imp[x][y] == self.unit

    def meet(self, x: int, y: int) -> int:
        return self.mul[x][self.imp[x][y]]

    def join(self, x: int, y: int) -> int:
        return int(self.order.join[x, y])

    @cached_property
    def idempotents(self) -> frozenset[int]:
        return idempotents(self)

    def with_labels(self, labels: Optional[Sequence[str]]) -> "FiniteHoop":
        return FiniteHoop(self.size, self.unit, self.mul, self.imp, None if labels is None else tuple(labels))


class Violation(NamedTuple):
    axiom: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid

    @property
    def tags(self) -> frozenset[str]:
        return frozenset(v.axiom for v in self.violations)

    def summary(self) -> str:
        if self.valid:
            return "ok"
        return "; ".join(f"{v.axiom} at {v.witness}" for v in self.violations)


AXIOMS = (
    "commutativity",
    "associativity",
    "identity",
    "H1",
    "H2",
    "H3",
    "order-is-antisymmetric",
)


def _first(mask: np.ndarray) -> Optional[tuple[int, ...]]:
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(v) for v in hits[0])


def validate_hoop(size: int, unit: int, mul, imp) -> ValidationReport:
    """Check every hoop axiom and report each violated family once.

    Witnesses are the lexicographically first offending index tuple.
    Raises :class:`HoopStructureError` for malformed input.
    """
    n = int(size)
    if n < 1:
        raise HoopStructureError("size must be positive")
    if not 0 <= int(unit) < n:
        raise HoopStructureError(f"unit {unit} out of range")
    m = np.array(_as_table(mul, n, "mul"), dtype=np.intp)
    i = np.array(_as_table(imp, n, "imp"), dtype=np.intp)
    u = int(unit)
    r = np.arange(n)
    checks = {
        "commutativity": m != m.T,
        # (x*y)*z at [x, y, z] is m[m[x, y], z]; x*(y*z) is m[x, m[y, z]]
        "associativity": m[m, :] != m[r[:, None, None], m[None, :, :]],
        "identity": (m[u] != r) | (m[:, u] != r),
        "H1": i[r, r] != u,
        "H2": i[m, :] != i[r[:, None, None], i[None, :, :]],
        "H3": m[r[:, None], i] != m[r[None, :], i.T],
    }
    leq = i == u
    checks["order-is-antisymmetric"] = leq & leq.T & (r[:, None] != r[None, :])
    found = []
    for axiom in AXIOMS:
        w = _first(checks[axiom])
        if w is not None:
            found.append(Violation(axiom, w))
    return ValidationReport(tuple(found))


def make_hoop(mul, imp, unit: int, labels=None) -> FiniteHoop:
    """Build a :class:`FiniteHoop`, raising :class:`HoopAxiomError` if invalid."""
    n = len(mul)
    report = validate_hoop(n, unit, mul, imp)
    if not report.valid:
        raise HoopAxiomError(report)
    return FiniteHoop(n, unit, mul, imp, labels)


@dataclass(frozen=True, eq=False)
class OrderStructure:
    """The lattice reduct of a finite hoop.

    ``leq[x, y]`` iff ``x <= y``; ``meet``/``join`` are index tables and
    ``hasse_edges`` holds the covering pairs ``(lower, upper)``.
    """

    leq: np.ndarray
    meet: np.ndarray
    join: np.ndarray
    bottom: int
    hasse_edges: frozenset[tuple[int, int]]


def least_upper_bounds(leq: np.ndarray) -> np.ndarray:
    """Table of least upper bounds under ``leq``; ``-1`` where none is unique."""
    n = len(leq)
    ub = leq[:, None, :] & leq[None, :, :]  # ub[x, y, u]: u above both
    # u is the lub iff every upper bound v satisfies u <= v
    bad = ub.reshape(n * n, n).astype(np.int64) @ (~leq).T.astype(np.int64)
    is_lub = ub & (bad.reshape(n, n, n) == 0)
    counts = is_lub.sum(axis=2)
    out = np.where(counts == 1, is_lub.argmax(axis=2), -1)
    return out


def derive_order(hoop: FiniteHoop) -> OrderStructure:
    n, u = hoop.size, hoop.unit
    m, i = hoop.mul_arr, hoop.imp_arr
    leq = i == u
    r = np.arange(n)
    meet = m[r[:, None], i]
    join = least_upper_bounds(leq)
    if (join < 0).any():
        x, y = _first(join < 0)
        raise InternalInconsistency(f"no unique join of {x} and {y}")
    below_all = np.flatnonzero(leq.all(axis=1))
    if len(below_all) != 1:
        raise InternalInconsistency("no unique bottom element")
    lt = leq & ~np.eye(n, dtype=bool)
    covers = lt & ~((lt.astype(np.int64) @ lt.astype(np.int64)) > 0)
    edges = frozenset((int(a), int(b)) for a, b in np.argwhere(covers))
    for arr in (leq, meet, join):
        arr.flags.writeable = False
    return OrderStructure(leq, meet, join, int(below_all[0]), edges)


def idempotents(hoop: FiniteHoop) -> frozenset[int]:
    return frozenset(x for x in range(hoop.size) if hoop.mul[x][x] == x)


def idempotent_chain_length(hoop: FiniteHoop) -> int:
    """Number of elements in a longest chain of idempotents."""
    ids = sorted(hoop.idempotents, key=lambda x: int(hoop.order.leq[:, x].sum()))
    longest = {}
    for x in ids:
        below = [longest[y] for y in longest if y != x and hoop.leq(y, x)]
        longest[x] = 1 + max(below, default=0)
    return max(longest.values())


LEMMA_CLAUSES = (
    "mul-monotone",
    "imp-isotone",
    "imp-antitone",
    "adjointness",
    "imp-distributes-over-meet",
    "mul-distributes-over-join",
    "join-imp-is-meet",
    "mul-distributes-over-meet",
    "lattice-distributive",
    "idempotent-mul-is-meet",
)


def check_lemma_suite(hoop: FiniteHoop) -> ValidationReport:
    """Exhaustively test the basic hoop identities on all triples.

    Meets come from ``x*(x->y)`` and joins from the order, so the suite
    still runs (and fails) on tables that are not hoops.  Where a join does
    not exist the clauses that need it fail at that pair.
    """
    n, u = hoop.size, hoop.unit
    m, i = hoop.mul_arr, hoop.imp_arr
    r = np.arange(n)
    X, Y, Z = r[:, None, None], r[None, :, None], r[None, None, :]
    leq = i == u
    meet = m[r[:, None], i]
    join = least_upper_bounds(leq)
    has_join = join >= 0
    jn = np.where(has_join, join, 0)
    le_xy = leq[X, Y]

    def le(a, b):
        return leq[a, b]

    clauses = {
        "mul-monotone": le_xy & ~le(m[X, Z], m[Y, Z]),
        "imp-isotone": le_xy & ~le(i[Z, X], i[Z, Y]),
        "imp-antitone": le_xy & ~le(i[Y, Z], i[X, Z]),
        "adjointness": le(m[X, Y], Z) != le(X, i[Y, Z]),
        "imp-distributes-over-meet": i[X, meet[Y, Z]] != meet[i[X, Y], i[X, Z]],
        "mul-distributes-over-join": ~has_join[Y, Z] | ~has_join[m[X, Y], m[X, Z]]
        | (m[X, jn[Y, Z]] != jn[m[X, Y], m[X, Z]]),
        "join-imp-is-meet": ~has_join[X, Y] | (i[jn[X, Y], Z] != meet[i[X, Z], i[Y, Z]]),
        "mul-distributes-over-meet": m[X, meet[Y, Z]] != meet[m[X, Y], m[X, Z]],
        "lattice-distributive": ~has_join[Y, Z] | ~has_join[meet[X, Y], meet[X, Z]]
        | (meet[X, jn[Y, Z]] != jn[meet[X, Y], meet[X, Z]]),
        "idempotent-mul-is-meet": (m[r, r] == r)[:, None] & (m != meet),
    }
    found = []
    for name in LEMMA_CLAUSES:
        w = _first(clauses[name])
        if w is not None:
            found.append(Violation(name, w))
    return ValidationReport(tuple(found))


def _signatures(hoop: FiniteHoop) -> list[tuple]:
    """Isomorphism-invariant fingerprint of each element."""
    n, u = hoop.size, hoop.unit
    m, i = hoop.mul_arr, hoop.imp_arr
    leq = i == u
    down = leq.sum(axis=0)
    up = leq.sum(axis=1)
    sq = m[np.arange(n), np.arange(n)]
    roots = np.bincount(sq, minlength=n)
    hits = np.bincount(m.ravel(), minlength=n)
    ihits = np.bincount(i.ravel(), minlength=n)
    return [
        (int(x == u), int(sq[x] == x), int(down[x]), int(up[x]), int(down[sq[x]]),
         int(roots[x]), int(hits[x]), int(ihits[x]))
        for x in range(n)
    ]


def hoop_isomorphism(a: FiniteHoop, b: FiniteHoop) -> Optional[tuple[int, ...]]:
    """Lexicographically least isomorphism ``a -> b`` as an index tuple, or None."""
    n = a.size
    if b.size != n:
        return None
    sa, sb = _signatures(a), _signatures(b)
    if sorted(sa) != sorted(sb):
        return None
    cands = [[y for y in range(n) if sb[y] == sa[x]] for x in range(n)]
    ma, ia, mb, ib = a.mul, a.imp, b.mul, b.imp
    h = [-1] * n
    used = [False] * n
    assigned: list[int] = []

    def assign(x: int, y: int, trail: list[int]) -> bool:
        queue = [(x, y)]
        while queue:
            x, y = queue.pop()
            if h[x] != -1:
                if h[x] != y:
                    return False
                continue
            if used[y] or sa[x] != sb[y]:
                return False
            h[x] = y
            used[y] = True
            trail.append(x)
            assigned.append(x)
            for x2 in list(assigned):
                y2 = h[x2]
                for ta, tb in ((ma, mb), (ia, ib)):
                    for p, q in ((ta[x][x2], tb[y][y2]), (ta[x2][x], tb[y2][y])):
                        if h[p] == -1:
                            queue.append((p, q))
                        elif h[p] != q:
                            return False
        return True

    def undo(trail: list[int]):
        for x in trail:
            used[h[x]] = False
            h[x] = -1
        del assigned[len(assigned) - len(trail):]

    def search(pos: int) -> bool:
        while pos < n and h[pos] != -1:
            pos += 1
        if pos == n:
            return True
        for y in cands[pos]:
            if used[y]:
                continue
            trail: list[int] = []
            if assign(pos, y, trail) and search(pos + 1):
                return True
            undo(trail)
        return False

    trail: list[int] = []
    if not assign(a.unit, b.unit, trail):
        return None
    if search(0):
        return tuple(h)
    return None


def is_isomorphism(a: FiniteHoop, b: FiniteHoop, h: Sequence[int]) -> bool:
    """Pure table check that ``h`` is a bijective homomorphism ``a -> b``."""
    if a.size != b.size or len(h) != a.size or sorted(h) != list(range(b.size)):
        return False
    hh = np.asarray(h, dtype=np.intp)
    if hh[a.unit] != b.unit:
        return False
    return bool(
        (hh[a.mul_arr] == b.mul_arr[hh[:, None], hh[None, :]]).all()
        and (hh[a.imp_arr] == b.imp_arr[hh[:, None], hh[None, :]]).all()
    )


def subalgebra(hoop: FiniteHoop, members) -> tuple[FiniteHoop, tuple[int, ...]]:
    """Restrict ``hoop`` to a subset closed under mul, imp and containing unit.

    Returns the subalgebra (elements in ascending parent order) and the
    embedding as a tuple of parent indices.
    """
    emb = tuple(sorted(set(int(x) for x in members)))
    pos = {x: k for k, x in enumerate(emb)}
    if hoop.unit not in pos:
        raise ValueError("subset does not contain the unit")
    try:
        mul = [[pos[hoop.mul[x][y]] for y in emb] for x in emb]
        imp = [[pos[hoop.imp[x][y]] for y in emb] for x in emb]
    except KeyError as exc:
        raise ValueError("subset is not closed under the operations") from exc
    labels = tuple(hoop.label(x) for x in emb)
    return FiniteHoop(len(emb), pos[hoop.unit], mul, imp, labels), emb


def relabel(hoop: FiniteHoop, perm: Sequence[int]) -> FiniteHoop:
    """Transport ``hoop`` along the bijection ``x -> perm[x]``."""
    n = hoop.size
    p = list(perm)
    inv = [0] * n
    for x, y in enumerate(p):
        inv[y] = x
    mul = [[p[hoop.mul[inv[i]][inv[j]]] for j in range(n)] for i in range(n)]
    imp = [[p[hoop.imp[inv[i]][inv[j]]] for j in range(n)] for i in range(n)]
    labels = None if hoop.labels is None else [hoop.labels[inv[i]] for i in range(n)]
    return FiniteHoop(n, p[hoop.unit], mul, imp, labels)
