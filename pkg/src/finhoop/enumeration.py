"""All finite hoops of a given order, up to isomorphism.

The search fixes the order first.  The natural order of a finite hoop is a
bounded lattice, so every lattice on ``0..n-1`` with ``0`` at the bottom,
``n-1`` at the top and ``i <= j`` only when ``i <= j`` as integers is
tried once.  For each lattice the multiplication is filled in by
backtracking (``x*y <= x ∧ y``, monotone, associative where decidable), the
arrow is read off by residuation, and survivors go through
:func:`validate_hoop` and :func:`canonical_form`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .core import FiniteHoop, derive_order, least_upper_bounds, validate_hoop

__all__ = [
    "DEFAULT_CAP",
    "HoopCensus",
    "canonical_form",
    "canonical_key",
    "enumerate_hoops",
    "lattices",
]

DEFAULT_CAP = 6
# (n-1)! relabelings are materialized at once.
_CANON_LIMIT = 10


@dataclass(frozen=True)
class HoopCensus:
    order: int
    representatives: tuple[FiniteHoop, ...]

    @property
    def count(self) -> int:
        return len(self.representatives)

    def __iter__(self):
        return iter(self.representatives)

    def __len__(self):
        return self.count


@lru_cache(maxsize=None)
def _perms(n: int) -> np.ndarray:
    """Every permutation of ``0..n-1`` fixing ``n-1``, as rows."""
    rest = list(permutations(range(n - 1)))
    return np.array([p + (n - 1,) for p in rest], dtype=np.intp).reshape(len(rest), n)


def _relabelled_tables(hoop: FiniteHoop) -> np.ndarray:
    n = hoop.size
    m, i = hoop.mul_arr, hoop.imp_arr
    # move the unit to n-1 first, then apply every permutation fixing it
    base = np.array([x for x in range(n) if x != hoop.unit] + [hoop.unit], dtype=np.intp)
    P = base[_perms(n)]                  # P[k, new] = old
    inv = np.argsort(P, axis=1)          # inv[k, old] = new
    rows = np.arange(len(P))[:, None, None]
    mm = inv[rows, m[P[:, :, None], P[:, None, :]]]
    ii = inv[rows, i[P[:, :, None], P[:, None, :]]]
    return np.concatenate([mm.reshape(len(P), -1), ii.reshape(len(P), -1)], axis=1)


def _lexmin_row(arr: np.ndarray) -> np.ndarray:
    alive = np.arange(len(arr))
    for col in range(arr.shape[1]):
        vals = arr[alive, col]
        alive = alive[vals == vals.min()]
        if len(alive) == 1:
            break
    return arr[alive[0]]


def canonical_key(hoop: FiniteHoop) -> tuple[int, ...]:
    """Flattened (mul, imp) of the lexicographically least relabeling."""
    if hoop.size > _CANON_LIMIT:
        raise ValueError(f"canonical form is brute force; order {hoop.size} > {_CANON_LIMIT}")
    return tuple(int(v) for v in _lexmin_row(_relabelled_tables(hoop)))


def canonical_form(hoop: FiniteHoop) -> FiniteHoop:
    """Least (mul, imp) relabeling with the unit at ``n-1``; labels are dropped."""
    n = hoop.size
    key = np.array(canonical_key(hoop)).reshape(2, n, n)
    return FiniteHoop(n, n - 1, key[0].tolist(), key[1].tolist())


def _is_lattice(leq: np.ndarray) -> bool:
    if (least_upper_bounds(leq) < 0).any():
        return False
    return not (least_upper_bounds(leq.T) < 0).any()


def _poset_key(leq: np.ndarray) -> tuple:
    n = len(leq)
    return min(
        tuple(leq[np.ix_(p, p)].ravel().tolist())
        for p in ([0, *q, n - 1] for q in permutations(range(1, n - 1)))
    )


@lru_cache(maxsize=None)
def lattices(n: int) -> tuple[np.ndarray, ...]:
    """Bounded lattices on ``0..n-1``, one labelled copy per isomorphism type.

    Every lattice has a linear extension, so it suffices to look at relations
    contained in the integer order.  Returned as boolean ``leq`` matrices.
    """
    if n <= 2:
        return (np.tril(np.ones((n, n), dtype=bool)).T,)
    inner = list(combinations(range(1, n - 1), 2))
    seen, out = set(), []
    for bits in range(1 << len(inner)):
        leq = np.eye(n, dtype=bool)
        leq[0, :] = True
        leq[:, n - 1] = True
        for k, (a, b) in enumerate(inner):
            if bits >> k & 1:
                leq[a, b] = True
        # transitive relations only; closure would revisit the same sets
        if ((leq.astype(np.int32) @ leq.astype(np.int32) > 0) != leq).any():
            continue
        if not _is_lattice(leq):
            continue
        key = _poset_key(leq)
        if key not in seen:
            seen.add(key)
            out.append(leq)
    return tuple(out)


def _residuate(mul: np.ndarray, leq: np.ndarray):
    """``imp[y][z] = max{x : x*y <= z}`` or ``None`` if some max is missing."""
    n = len(mul)
    imp = np.empty((n, n), dtype=np.intp)
    for y in range(n):
        for z in range(n):
            cand = np.flatnonzero(leq[mul[:, y], z])
            tops = [x for x in cand if leq[cand, x].all()]
            if len(tops) != 1:
                return None
            imp[y, z] = tops[0]
    return imp


def _hoops_on(leq: np.ndarray) -> list[FiniteHoop]:
    n = len(leq)
    u = n - 1
    meet = least_upper_bounds(leq.T)
    mul = np.full((n, n), -1, dtype=np.intp)
    mul[u, :] = mul[:, u] = np.arange(n)
    mul[0, :] = mul[:, 0] = 0
    cells = [(x, y) for x in range(1, u) for y in range(x, u)]
    below = [np.flatnonzero(leq[:, meet[x, y]]) for x, y in cells]
    found = []

    def fits(x: int, y: int, v: int) -> bool:
        # monotone in both arguments against every filled entry
        for a in range(n):
            for b in (x, y):
                w = mul[a, b]
                if w < 0:
                    continue
                other = y if b == x else x
                if leq[a, other] and not leq[w, v]:
                    return False
                if leq[other, a] and not leq[v, w]:
                    return False
        # associativity (x*y)*z == x*(y*z) wherever all four entries are known
        for z in range(n):
            for p, q, r in ((x, y, z), (y, x, z)):
                s = mul[q, r]
                if s < 0 or mul[v, r] < 0 or mul[p, s] < 0:
                    continue
                if mul[v, r] != mul[p, s]:
                    return False
        return True

    def search(k: int):
        if k == len(cells):
            imp = _residuate(mul, leq)
            if imp is None:
                return
            if validate_hoop(n, u, mul.tolist(), imp.tolist()).valid:
                h = FiniteHoop(n, u, mul.tolist(), imp.tolist())
                if (derive_order(h).leq == leq).all():
                    found.append(h)
            return
        x, y = cells[k]
        for v in below[k]:
            mul[x, y] = mul[y, x] = v
            if fits(x, y, v):
                search(k + 1)
        mul[x, y] = mul[y, x] = -1

    search(0)
    return found


def enumerate_hoops(n: int, cap: int = DEFAULT_CAP) -> HoopCensus:
    """Every hoop of order ``n`` up to isomorphism, in canonical form.

    Representatives are sorted by their canonical key, so the output does
    not depend on search order.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"order must be a positive integer, got {n!r}")
    if n > cap:
        raise ValueError(f"order {n} exceeds the enumeration cap {cap}")
    if n == 1:
        return HoopCensus(1, (FiniteHoop(1, 0, [[0]], [[0]]),))
    reps = {}
    for leq in lattices(n):
        for h in _hoops_on(leq):
            key = canonical_key(h)
            if key not in reps:
                reps[key] = canonical_form(h)
    return HoopCensus(n, tuple(reps[k] for k in sorted(reps)))
