"""Exhaustive enumeration of small bounded lattices with antitone involution.

Lattices are grown one element at a time: every lattice on n+1 ≥ 3
elements arises from a lattice on n elements by adding a new coatom,
whose lower covers form an antichain S such that ↓S ∩ ↓x has a greatest
element for every x.  Isomorphic copies are merged by canonical form.
For every lattice, all antitone involutions are found by backtracking and
the resulting structures are again merged by canonical form.
"""

from __future__ import annotations

import io
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .canon import canonical
from .classify import CLASS_NAMES, classify
from .core import InvolutiveLattice, InvolutivePoset, try_lattice
from .errors import BudgetExceeded

DEFAULT_CAP = 8
_lattice_cache: dict[int, list[np.ndarray]] = {}


def _shape(leq: np.ndarray) -> InvolutivePoset:
    """Order-only wrapper: the identity involution makes canonical forms
    compare plain posets."""
    n = leq.shape[0]
    return InvolutivePoset(leq, range(n), 0, n - 1)


def _relabel(leq: np.ndarray, order: Sequence[int]) -> np.ndarray:
    idx = np.asarray(order)
    return leq[np.ix_(idx, idx)]


def _extensions(leq: np.ndarray) -> Iterator[np.ndarray]:
    """All lattices obtained by adding a coatom below the top (index n-1).

    The new element takes index n-1 and the top moves to n.
    """
    n = leq.shape[0]
    top = n - 1
    cands = [x for x in range(n) if x != top]
    down = [frozenset(np.flatnonzero(leq[:, x]).tolist()) for x in range(n)]
    # antichains of cands, grown in increasing index order
    def antichains(start, chosen):
        if chosen:
            yield chosen
        for x in range(start, len(cands)):
            c = cands[x]
            if all(not leq[c, y] and not leq[y, c] for y in chosen):
                yield from antichains(x + 1, chosen + [c])

    for S in antichains(0, []):
        ideal = frozenset().union(*(down[s] for s in S))
        ok = True
        for x in cands:
            common = ideal & down[x]
            if not any(common <= down[m] for m in common):
                ok = False
                break
        if not ok:
            continue
        new = np.zeros((n + 1, n + 1), dtype=bool)
        new[:top, :top] = leq[:top, :top]
        new[top + 1, :] = False
        new[:, top + 1] = True
        new[top, top] = True
        for y in ideal:
            new[y, top] = True
        yield new


def lattices(n: int) -> list[np.ndarray]:
    """One order matrix per isomorphism class of lattices on n elements,
    in canonical labelling with the bottom at index 0 and the top last."""
    if n in _lattice_cache:
        return _lattice_cache[n]
    if n <= 0:
        out: list = []
    elif n == 1:
        out = [np.ones((1, 1), dtype=bool)]
    elif n == 2:
        out = [np.array([[True, True], [False, True]])]
    else:
        seen: dict = {}
        for L in lattices(n - 1):
            for M in _extensions(L):
                code, order = canonical(_shape(M))
                if code not in seen:
                    seen[code] = _normal(M, order)
        out = [seen[c] for c in sorted(seen)]
    _lattice_cache[n] = out
    return out


def _normal(leq: np.ndarray, order: Sequence[int]) -> np.ndarray:
    """Relabel by ``order`` and then move the bottom first and top last."""
    M = _relabel(leq, order)
    n = M.shape[0]
    bot = int(np.flatnonzero(M.all(axis=1))[0])
    top = int(np.flatnonzero(M.all(axis=0))[0])
    rest = [i for i in range(n) if i not in (bot, top)]
    return _relabel(M, [bot] + rest + [top]) if n > 1 else M


def lattice_count(n: int) -> int:
    return len(lattices(n))


def antitone_involutions(leq: np.ndarray) -> list[tuple[int, ...]]:
    """All permutations p with p∘p = id and x ≤ y ⇔ p(y) ≤ p(x)."""
    n = leq.shape[0]
    le = leq.tolist()
    up = leq.sum(axis=1).tolist()
    dn = leq.sum(axis=0).tolist()
    p = [-1] * n
    out = []

    def fits(x):
        y = p[x]
        for a in range(n):
            b = p[a]
            if b >= 0 and (le[x][a] != le[b][y] or le[a][x] != le[y][b]):
                return False
        return True

    def rec(x):
        while x < n and p[x] >= 0:
            x += 1
        if x == n:
            out.append(tuple(p))
            return
        for y in range(x, n):
            # an order-reversing bijection swaps up-set and down-set sizes
            if p[y] >= 0 or up[x] != dn[y]:
                continue
            p[x], p[y] = y, x
            if fits(x) and fits(y):
                rec(x + 1)
            p[x] = p[y] = -1

    rec(0)
    return out


def models(n: int, cap: int = DEFAULT_CAP) -> list[InvolutiveLattice]:
    """One canonical structure per isomorphism class of bounded lattices
    with antitone involution on n elements."""
    if n > cap:
        raise BudgetExceeded(f"n={n} exceeds the enumeration cap {cap}")
    seen: dict = {}
    for leq in lattices(n):
        for inv in antitone_involutions(leq):
            p = InvolutiveLattice(leq, inv, 0, n - 1)
            code, order = canonical(p)
            if code not in seen:
                seen[code] = p.permuted(order)
    out = []
    for k, code in enumerate(sorted(seen)):
        q = seen[code]
        out.append(try_lattice(InvolutivePoset(q.leq, q.inv, q.bottom, q.top,
                                               [str(i) for i in range(n)])))
    return out


def enumerate_models(n: int, constraints: Iterable[str] = (), cap: int = DEFAULT_CAP,
                     exclude: Iterable[str] = ()) -> Iterator[InvolutiveLattice]:
    """Models on n elements belonging to every class in ``constraints``
    and to none in ``exclude``."""
    need = [c.upper() for c in constraints]
    avoid = [c.upper() for c in exclude]
    for name in need + avoid:
        if name not in CLASS_NAMES:
            raise KeyError(f"unknown class {name!r}")
    for p in models(n, cap):
        r = classify(p)
        if all(r[c] for c in need) and not any(r[c] for c in avoid):
            yield p


def model_count(n: int, cap: int = DEFAULT_CAP) -> int:
    return len(models(n, cap))


def census(ns: Iterable[int], cap: int = DEFAULT_CAP) -> list[dict]:
    """One row per model: name, size and class flags."""
    rows = []
    for n in ns:
        for k, p in enumerate(models(n, cap)):
            r = classify(p)
            rows.append({"name": f"n{n}_{k}", "size": n, "flags": r.flags, "model": p})
    return rows


def census_tsv(rows: list[dict]) -> str:
    buf = io.StringIO()
    buf.write("name\tsize\t" + "\t".join(CLASS_NAMES) + "\n")
    for row in rows:
        buf.write(f"{row['name']}\t{row['size']}\t"
                  + "\t".join("1" if row["flags"][c] else "0" for c in CLASS_NAMES) + "\n")
    return buf.getvalue()


def census_counts(rows: list[dict]) -> dict[str, int]:
    return {c: sum(1 for r in rows if r["flags"][c]) for c in CLASS_NAMES}


def classify_all(n: int, cap: int = DEFAULT_CAP) -> tuple[str, dict[str, int]]:
    """Census TSV for all models on n elements and per-class counts."""
    rows = census([n], cap)
    return census_tsv(rows), census_counts(rows)


def find_model(n: int, pred, cap: int = DEFAULT_CAP) -> Optional[InvolutiveLattice]:
    return next((p for p in models(n, cap) if pred(p)), None)
