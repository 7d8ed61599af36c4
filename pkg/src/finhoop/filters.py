"""Filters, the congruences they induce, and quotient hoops."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .core import (
    FiniteHoop,
    InternalInconsistency,
    ValidationReport,
    Violation,
    subalgebra,
    validate_hoop,
)

__all__ = [
    "Filter",
    "QuotientHoop",
    "is_filter",
    "all_filters",
    "filter_generated",
    "principal_filter",
    "quotient",
    "check_class_lemma",
    "is_simple",
]


def _mask(members: Iterable[int]) -> int:
    mask = 0
    for x in members:
        mask |= 1 << int(x)
    return mask


@dataclass(frozen=True)
class Filter:
    """A filter of ``hoop`` stored as a bit set (bit ``x`` set iff ``x`` in F)."""

    hoop: FiniteHoop
    mask: int

    @classmethod
    def of(cls, hoop: FiniteHoop, members: Iterable[int]) -> "Filter":
        members = list(members)
        if not is_filter(hoop, members):
            raise ValueError(f"{sorted(members)} is not a filter")
        return cls(hoop, _mask(members))

    @cached_property
    def members(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.hoop.size) if self.mask >> x & 1)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __len__(self):
        return len(self.members)

    def __repr__(self):
        return f"Filter({list(self.members)})"

    @cached_property
    def bottom(self) -> int:
        """The least element ``l`` of the filter."""
        leq = self.hoop.order.leq
        for x in self.members:
            if all(leq[x, y] for y in self.members):
                return x
        raise InternalInconsistency("filter without least element")

    @cached_property
    def _sub(self):
        return subalgebra(self.hoop, self.members)

    @property
    def algebra(self) -> FiniteHoop:
        """The filter as a subalgebra, elements in ascending parent order."""
        return self._sub[0]

    @property
    def embedding(self) -> tuple[int, ...]:
        return self._sub[1]

    @cached_property
    def position(self) -> dict[int, int]:
        return {x: k for k, x in enumerate(self.members)}

    def is_trivial(self) -> bool:
        return self.mask == 1 << self.hoop.unit

    def is_full(self) -> bool:
        return self.mask == (1 << self.hoop.size) - 1


def is_filter(hoop: FiniteHoop, subset: Iterable[int]) -> bool:
    s = set(int(x) for x in subset)
    if not s or not s <= set(range(hoop.size)):
        return False
    leq = hoop.order.leq
    for x in s:
        if any(leq[x, y] and y not in s for y in range(hoop.size)):
            return False
        if any(hoop.mul[x][y] not in s for y in s):
            return False
    return True


def principal_filter(hoop: FiniteHoop, e: int) -> Filter:
    """``{x : e <= x}``; a filter whenever ``e`` is idempotent."""
    return Filter.of(hoop, np.flatnonzero(hoop.order.leq[e]).tolist())


def _sort_key(f: Filter):
    return (len(f), f.mask)


def all_filters(hoop: FiniteHoop) -> list[Filter]:
    """Every filter, sorted by (cardinality, bit pattern).

    In a finite hoop each filter is ``[e)`` for its least element ``e``,
    which is idempotent, so the idempotents index the filters.
    """
    filters = {principal_filter(hoop, e).mask for e in hoop.idempotents}
    return sorted((Filter(hoop, m) for m in filters), key=_sort_key)


def filter_generated(hoop: FiniteHoop, subset: Iterable[int]) -> Filter:
    s = set(int(x) for x in subset)
    if not s:
        raise ValueError("cannot generate a filter from the empty set")
    frontier = set(s)
    while frontier:
        new = {hoop.mul[x][y] for x in frontier for y in s} - s
        s |= new
        frontier = new
    leq = hoop.order.leq
    up = {y for x in s for y in range(hoop.size) if leq[x, y]}
    return Filter(hoop, _mask(up))


@dataclass(frozen=True, eq=False)
class QuotientHoop:
    """``A/F`` with the projection and the top/bottom of every class."""

    parent: FiniteHoop
    filter: Filter
    algebra: FiniteHoop
    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    class_top: tuple[int, ...]
    class_bottom: tuple[int, ...]

    @property
    def unit_class(self) -> int:
        return self.algebra.unit


def quotient(hoop: FiniteHoop, filt: Filter) -> QuotientHoop:
    """Factor ``hoop`` by the congruence ``x ~ y iff (x->y)*(y->x) in F``.

    Classes are numbered by their smallest member.
    """
    n = hoop.size
    m, i = hoop.mul_arr, hoop.imp_arr
    in_f = np.array([x in filt for x in range(n)])
    rel = in_f[m[i, i.T]]
    if not (rel.diagonal().all() and (rel == rel.T).all()):
        raise InternalInconsistency("filter relation is not an equivalence")
    class_of = [-1] * n
    classes: list[tuple[int, ...]] = []
    for x in range(n):
        if class_of[x] == -1:
            block = tuple(int(y) for y in np.flatnonzero(rel[x]))
            for y in block:
                if class_of[y] != -1:
                    raise InternalInconsistency("filter relation is not transitive")
                class_of[y] = len(classes)
            classes.append(block)
    cls = np.array(class_of)
    reps = [c[0] for c in classes]
    qm = cls[m[np.ix_(reps, reps)]]
    qi = cls[i[np.ix_(reps, reps)]]
    if not ((cls[m] == qm[cls[:, None], cls[None, :]]).all()
            and (cls[i] == qi[cls[:, None], cls[None, :]]).all()):
        raise InternalInconsistency("filter relation is not a congruence")
    leq = hoop.order.leq
    tops, bots = [], []
    for block in classes:
        top = [x for x in block if all(leq[y, x] for y in block)]
        bot = [x for x in block if all(leq[x, y] for y in block)]
        if len(top) != 1 or len(bot) != 1:
            raise InternalInconsistency("class without top or bottom")
        tops.append(top[0])
        bots.append(bot[0])
    labels = ["{" + ",".join(hoop.label(x) for x in block) + "}" for block in classes]
    alg = FiniteHoop(len(classes), class_of[hoop.unit], qm.tolist(), qi.tolist(), labels)
    if not validate_hoop(alg.size, alg.unit, alg.mul, alg.imp).valid:
        raise InternalInconsistency("quotient is not a hoop")
    return QuotientHoop(hoop, filt, alg, tuple(class_of), tuple(classes), tuple(tops), tuple(bots))


def check_class_lemma(hoop: FiniteHoop, filt: Filter, q: QuotientHoop | None = None) -> ValidationReport:
    """Check the relations between the class tops/bottoms of ``A/F``."""
    q = q or quotient(hoop, filt)
    Q = q.algebra
    t, lb = q.class_top, q.class_bottom
    k = Q.size
    leq = hoop.order.leq
    qleq = Q.order.leq
    meet, join = hoop.order.meet, hoop.order.join
    qmeet, qjoin = Q.order.meet, Q.order.join
    l = filt.bottom
    ops = {
        "join": (join, qjoin),
        "meet": (meet, qmeet),
        "mul": (hoop.mul_arr, Q.mul_arr),
        "imp": (hoop.imp_arr, Q.imp_arr),
    }
    found = []

    def first(name, pred, space):
        for w in space:
            if not pred(*w):
                found.append(Violation(name, tuple(w)))
                return

    pairs = [(X, Y) for X in range(k) for Y in range(k)]
    for op, (a_op, q_op) in ops.items():
        first(f"class-top-{op}-below", lambda X, Y: leq[a_op[t[X], t[Y]], t[q_op[X, Y]]], pairs)
    first("class-top-order", lambda X, Y: qleq[X, Y] == leq[t[X], t[Y]], pairs)
    first("class-top-meet", lambda X, Y: meet[t[X], t[Y]] == t[qmeet[X, Y]], pairs)
    first("class-top-imp", lambda X, Y: hoop.imp[t[X]][t[Y]] == t[Q.imp[X][Y]], pairs)
    first("class-top-mul-imp", lambda X, Y: hoop.mul[t[X]][t[Q.imp[X][Y]]] == t[qmeet[X, Y]], pairs)
    xa = [(X, a) for X in range(k) for a in filt.members]
    first("class-top-against-filter", lambda X, a: hoop.imp[a][t[X]] == t[X] and hoop.mul[t[X]][a] == meet[t[X], a], xa)
    first("class-bottom", lambda X: hoop.mul[t[X]][l] == meet[t[X], l] == lb[X], [(X,) for X in range(k)])
    return ValidationReport(tuple(found))


def is_simple(hoop: FiniteHoop) -> bool:
    """Exactly two filters.  The trivial hoop is not simple."""
    return hoop.size >= 2 and len(all_filters(hoop)) == 2
