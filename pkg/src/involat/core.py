"""Finite bounded posets with an antitone involution.

Elements are the integers ``0..n-1``.  The order is stored as a full
reachability matrix, so ``leq[i, j]`` is True iff ``i <= j``.  Labels are
for display only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Optional, Sequence

import numpy as np

from .errors import (
    BoundsMissing,
    NotALattice,
    NotAntitone,
    NotAPartialOrder,
    NotInvolutive,
    StructureError,
)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a property check: truth value plus the first counterexample."""

    holds: bool
    witness: Optional[tuple] = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.holds


TRUE = Verdict(True)


class InvolutivePoset:
    """A validated bounded poset with antitone involution.

    Do not call the constructor with unchecked data; use :func:`validate`.
    Instances are treated as immutable and cache derived data (partial
    meet/join tables, class flags) on first use.
    """

    def __init__(self, leq, inv, bottom: int, top: int, labels=None):
        leq = np.array(leq, dtype=bool)
        leq.setflags(write=False)
        self.leq = leq
        self.n = leq.shape[0]
        self.inv = tuple(int(i) for i in inv)
        self.bottom = int(bottom)
        self.top = int(top)
        self.labels = tuple(labels) if labels is not None else None
        self._le = tuple(tuple(bool(v) for v in row) for row in leq)
        self._cache: dict = {}

    # -- presentation -------------------------------------------------
    def name(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return str(i)

    def index(self, label) -> int:
        """Index of an element given by label (or by index as str/int)."""
        if isinstance(label, (int, np.integer)):
            return int(label)
        if self.labels is not None and label in self.labels:
            return self.labels.index(label)
        try:
            i = int(label)
        except ValueError:
            raise KeyError(f"no element named {label!r}") from None
        if not 0 <= i < self.n:
            raise KeyError(f"no element {label!r}")
        return i

    def names(self, xs: Iterable[int]) -> tuple:
        return tuple(self.name(x) for x in xs)

    def __repr__(self):
        kind = type(self).__name__
        return f"<{kind} n={self.n}>"

    def __len__(self):
        return self.n

    # -- order helpers ------------------------------------------------
    def le(self, x: int, y: int) -> bool:
        return self._le[x][y]

    def lt(self, x: int, y: int) -> bool:
        return x != y and self._le[x][y]

    def comparable(self, x: int, y: int) -> bool:
        return self._le[x][y] or self._le[y][x]

    def down(self, x: int) -> list[int]:
        return [y for y in range(self.n) if self._le[y][x]]

    def up(self, x: int) -> list[int]:
        return [y for y in range(self.n) if self._le[x][y]]

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(i, j)`` with ``j`` covering ``i``, sorted."""
        if "covers" not in self._cache:
            le = self._le
            n = self.n
            out = []
            for i in range(n):
                for j in range(n):
                    if i == j or not le[i][j]:
                        continue
                    if not any(k != i and k != j and le[i][k] and le[k][j] for k in range(n)):
                        out.append((i, j))
            self._cache["covers"] = out
        return self._cache["covers"]

    def heights(self) -> tuple[int, ...]:
        """Length of the longest chain from the bottom to each element."""
        if "heights" not in self._cache:
            order = sorted(range(self.n), key=lambda x: sum(self._le[y][x] for y in range(self.n)))
            h = [0] * self.n
            for x in order:
                h[x] = max((h[y] + 1 for y in range(self.n) if y != x and self._le[y][x]), default=0)
            self._cache["heights"] = tuple(h)
        return self._cache["heights"]

    # -- partial operations -------------------------------------------
    def _bound_table(self, upper: bool):
        key = "join_table" if upper else "meet_table"
        if key in self._cache:
            return self._cache[key]
        n = self.n
        le = self._le
        table = [[None] * n for _ in range(n)]
        for x in range(n):
            for y in range(x, n):
                if upper:
                    bounds = [z for z in range(n) if le[x][z] and le[y][z]]
                    best = [z for z in bounds if all(le[z][w] for w in bounds)]
                else:
                    bounds = [z for z in range(n) if le[z][x] and le[z][y]]
                    best = [z for z in bounds if all(le[w][z] for w in bounds)]
                v = best[0] if best else None
                table[x][y] = table[y][x] = v
        table = tuple(tuple(r) for r in table)
        self._cache[key] = table
        return table

    def partial_join(self, x: int, y: int) -> Optional[int]:
        """Least upper bound of ``x`` and ``y``, or None if there is none."""
        return self._bound_table(True)[x][y]

    def partial_meet(self, x: int, y: int) -> Optional[int]:
        return self._bound_table(False)[x][y]

    @property
    def join_table(self):
        return self._bound_table(True)

    @property
    def meet_table(self):
        return self._bound_table(False)

    def is_lattice(self) -> bool:
        return all(v is not None for row in self.join_table for v in row) and all(
            v is not None for row in self.meet_table for v in row
        )

    # -- structure ----------------------------------------------------
    def restrict(self, members: Sequence[int], bottom: Optional[int] = None,
                 top: Optional[int] = None) -> "InvolutivePoset":
        """Induced substructure on ``members`` (closed under inv).

        ``bottom``/``top`` default to the parent's bounds and must be members.
        """
        members = list(members)
        pos = {m: i for i, m in enumerate(members)}
        leq = self.leq[np.ix_(members, members)]
        inv = [pos[self.inv[m]] for m in members]
        labels = [self.name(m) for m in members]
        b = self.bottom if bottom is None else bottom
        t = self.top if top is None else top
        return InvolutivePoset(leq, inv, pos[b], pos[t], labels)

    def relabel(self, labels) -> "InvolutivePoset":
        return type(self)._rebuild(self, labels=labels)

    @staticmethod
    def _rebuild(p, labels=None):
        if isinstance(p, InvolutiveLattice):
            return InvolutiveLattice(p.leq, p.inv, p.bottom, p.top, labels, p.meet, p.join)
        return InvolutivePoset(p.leq, p.inv, p.bottom, p.top, labels)

    def permuted(self, order: Sequence[int]) -> "InvolutivePoset":
        """Copy with element ``order[k]`` moved to index ``k``."""
        order = list(order)
        pos = {m: i for i, m in enumerate(order)}
        leq = self.leq[np.ix_(order, order)]
        inv = [pos[self.inv[m]] for m in order]
        labels = [self.name(m) for m in order] if self.labels is not None else None
        q = InvolutivePoset(leq, inv, pos[self.bottom], pos[self.top], labels)
        return try_lattice(q) if self.is_lattice() else q


class InvolutiveLattice(InvolutivePoset):
    """A bounded involutive poset whose meet and join are total."""

    def __init__(self, leq, inv, bottom, top, labels=None, meet=None, join=None):
        super().__init__(leq, inv, bottom, top, labels)
        if meet is None or join is None:
            meet, join = self.meet_table, self.join_table
        self.meet = tuple(tuple(r) for r in meet)
        self.join = tuple(tuple(r) for r in join)
        self._cache["meet_table"] = self.meet
        self._cache["join_table"] = self.join

    @property
    def base(self) -> InvolutivePoset:
        return InvolutivePoset(self.leq, self.inv, self.bottom, self.top, self.labels)

    def restrict(self, members, bottom=None, top=None):
        return try_lattice(super().restrict(members, bottom, top))

    def arrays(self):
        """Numpy views ``(le, meet, join, inv)`` for vectorized identity checks."""
        if "arrays" not in self._cache:
            self._cache["arrays"] = (
                self.leq,
                np.array(self.meet, dtype=np.intp),
                np.array(self.join, dtype=np.intp),
                np.array(self.inv, dtype=np.intp),
            )
        return self._cache["arrays"]

    def m(self, x, y):
        return self.meet[x][y]

    def j(self, x, y):
        return self.join[x][y]

    def c(self, x):
        return self.inv[x]

    def is_lattice(self) -> bool:
        return True


def transitive_closure(rel) -> np.ndarray:
    """Reflexive-transitive closure of a boolean relation matrix."""
    r = np.array(rel, dtype=bool)
    n = r.shape[0]
    r |= np.eye(n, dtype=bool)
    # Warshall
    for k in range(n):
        r |= np.outer(r[:, k], r[k, :])
    return r


def validate(leq, inv, bottom: Optional[int] = None, top: Optional[int] = None,
             labels: Optional[Sequence[str]] = None) -> InvolutivePoset:
    """Check the axioms of a bounded poset with antitone involution.

    ``leq`` is a square boolean matrix, ``inv`` a sequence of indices.  When
    ``bottom``/``top`` are omitted they are looked up.  Raises the first
    violated axiom as a :class:`StructureError` subclass naming a witness.
    """
    m = np.array(leq, dtype=bool)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotAPartialOrder("order matrix must be square")
    n = m.shape[0]
    inv = [int(i) for i in inv]
    if len(inv) != n:
        raise NotInvolutive(f"involution has {len(inv)} entries, expected {n}")
    if n == 0:
        raise BoundsMissing("empty structure has no bounds")
    if labels is not None and len(labels) != n:
        raise StructureError(f"{len(labels)} labels for {n} elements")

    for i in range(n):
        if not m[i, i]:
            raise NotAPartialOrder(f"not reflexive at {i}", (i, i))
    for i in range(n):
        for j in range(i + 1, n):
            if m[i, j] and m[j, i]:
                raise NotAPartialOrder(f"not antisymmetric: {i} <= {j} <= {i}", (i, j))
    for i in range(n):
        for j in range(n):
            if not m[i, j]:
                continue
            for k in range(n):
                if m[j, k] and not m[i, k]:
                    raise NotAPartialOrder(f"not transitive: {i} <= {j} <= {k}", (i, j, k))

    if sorted(inv) != list(range(n)):
        raise NotInvolutive("inv is not a permutation", tuple(inv))
    for i in range(n):
        if inv[inv[i]] != i:
            raise NotInvolutive(f"inv(inv({i})) = {inv[inv[i]]}", (i,))
    for i in range(n):
        for j in range(n):
            if m[i, j] and not m[inv[j], inv[i]]:
                raise NotAntitone(f"{i} <= {j} but not inv({j}) <= inv({i})", (i, j))

    if bottom is None:
        cands = [i for i in range(n) if m[i, :].all()]
        if not cands:
            raise BoundsMissing("no least element")
        bottom = cands[0]
    if top is None:
        cands = [i for i in range(n) if m[:, i].all()]
        if not cands:
            raise BoundsMissing("no greatest element")
        top = cands[0]
    for x in range(n):
        if not m[bottom, x]:
            raise BoundsMissing(f"bottom {bottom} is not below {x}", (bottom, x))
        if not m[x, top]:
            raise BoundsMissing(f"top {top} is not above {x}", (x, top))
    if inv[bottom] != top:
        raise BoundsMissing(f"inv(bottom) = {inv[bottom]} is not top", (bottom,))
    return InvolutivePoset(m, inv, bottom, top, labels)


def try_lattice(p: InvolutivePoset) -> InvolutiveLattice:
    """Upgrade ``p`` to an :class:`InvolutiveLattice` or raise NotALattice."""
    if isinstance(p, InvolutiveLattice):
        return p
    meet, join = p.meet_table, p.join_table
    for x in range(p.n):
        for y in range(p.n):
            if join[x][y] is None:
                raise NotALattice(f"{p.name(x)} and {p.name(y)} have no join", (x, y))
            if meet[x][y] is None:
                raise NotALattice(f"{p.name(x)} and {p.name(y)} have no meet", (x, y))
    lat = InvolutiveLattice(p.leq, p.inv, p.bottom, p.top, p.labels, meet, join)
    return lat


def partial_join(p: InvolutivePoset, x: int, y: int) -> Optional[int]:
    return p.partial_join(x, y)


def partial_meet(p: InvolutivePoset, x: int, y: int) -> Optional[int]:
    return p.partial_meet(x, y)


def from_covers(n: int, covers: Iterable[tuple[int, int]], inv, bottom=None, top=None,
                labels=None) -> InvolutivePoset:
    """Build and validate a structure from Hasse-diagram edges ``(lower, upper)``."""
    rel = np.zeros((n, n), dtype=bool)
    for a, b in covers:
        rel[a, b] = True
    return validate(transitive_closure(rel), inv, bottom, top, labels)


def from_named_covers(names: Sequence[str], covers: Iterable[tuple[str, str]],
                      inv_pairs: Iterable[tuple[str, str]], lattice: bool = True) -> Any:
    """Convenience builder keyed by element names.

    ``inv_pairs`` lists each orbit of the involution once (``(a, a)`` for a
    fixed point).  Unlisted elements are rejected.
    """
    names = list(names)
    idx = {s: i for i, s in enumerate(names)}
    inv = [None] * len(names)
    for a, b in inv_pairs:
        inv[idx[a]] = idx[b]
        inv[idx[b]] = idx[a]
    if any(v is None for v in inv):
        missing = [names[i] for i, v in enumerate(inv) if v is None]
        raise NotInvolutive(f"involution undefined on {missing}")
    p = from_covers(len(names), [(idx[a], idx[b]) for a, b in covers], inv, labels=names)
    return try_lattice(p) if lattice else p
