"""Canonical forms of involutive posets.

Colour refinement on the order relation and the involution, followed by
individualization of one element at a time, yields a set of discrete
orderings; the lexicographically least encoding among them is the
canonical code.  Two structures are orthoisomorphic iff their codes agree.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .core import InvolutivePoset


def _ranks(keys: Sequence) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _refine(p: InvolutivePoset, colors: list[int]) -> list[int]:
    n = p.n
    le = p._le
    inv = p.inv
    below = [[y for y in range(n) if y != x and le[y][x]] for x in range(n)]
    above = [[y for y in range(n) if y != x and le[x][y]] for x in range(n)]
    ncls = len(set(colors))
    while True:
        keys = [
            (colors[x], colors[inv[x]],
             tuple(sorted(colors[y] for y in below[x])),
             tuple(sorted(colors[y] for y in above[x])))
            for x in range(n)
        ]
        new = _ranks(keys)
        k = len(set(new))
        colors = new
        if k == ncls:
            return colors
        ncls = k


def initial_colors(p: InvolutivePoset) -> list[int]:
    h = p.heights()
    inv = p.inv
    return _ranks([(h[x], inv[x] == x, h[inv[x]]) for x in range(p.n)])


def stable_colors(p: InvolutivePoset) -> list[int]:
    """Label-independent colouring: isomorphisms preserve it."""
    if "stable_colors" not in p._cache:
        p._cache["stable_colors"] = _refine(p, initial_colors(p))
    return p._cache["stable_colors"]


def _encode(p: InvolutivePoset, order: Sequence[int]) -> tuple:
    le = p._le
    pos = {v: i for i, v in enumerate(order)}
    bits = 0
    for a in order:
        for b in order:
            bits = (bits << 1) | le[a][b]
    return (p.n, bits, tuple(pos[p.inv[v]] for v in order))


def _search(p: InvolutivePoset, colors: list[int], best: list):
    n = p.n
    if len(set(colors)) == n:
        order = sorted(range(n), key=lambda x: colors[x])
        code = _encode(p, order)
        if best[0] is None or code < best[0][0]:
            best[0] = (code, order)
        return
    # first smallest non-singleton cell
    counts: dict[int, int] = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    target = min(c for c, k in counts.items() if k > 1)
    for v in range(n):
        if colors[v] != target:
            continue
        split = [2 * c + (1 if (c == target and x != v) else 0) for x, c in enumerate(colors)]
        _search(p, _refine(p, _ranks(split)), best)


def canonical(p: InvolutivePoset) -> tuple[tuple, list[int]]:
    """``(code, order)`` where ``order[k]`` is the element placed at position k."""
    if "canonical" not in p._cache:
        best: list = [None]
        _search(p, stable_colors(p), best)
        p._cache["canonical"] = best[0]
    return p._cache["canonical"]


def canonical_form(p: InvolutivePoset) -> tuple:
    """Isomorphism-invariant code ``(n, order bits, involution)``."""
    return canonical(p)[0]


def canonical_structure(p: InvolutivePoset) -> InvolutivePoset:
    """Copy of ``p`` with elements renumbered into canonical order."""
    return p.permuted(canonical(p)[1])


def find_orthoisomorphism(a: InvolutivePoset, b: InvolutivePoset) -> Optional[list[int]]:
    """A bijection ``f`` (as a list) preserving and reflecting order and ′, or None."""
    if a.n != b.n:
        return None
    ca, oa = canonical(a)
    cb, ob = canonical(b)
    if ca != cb:
        return None
    f = [0] * a.n
    for k in range(a.n):
        f[oa[k]] = ob[k]
    return f


def is_orthoisomorphism(a: InvolutivePoset, b: InvolutivePoset, f: Sequence[int]) -> bool:
    """Direct check that ``f`` is an orthoisomorphism from ``a`` onto ``b``."""
    if a.n != b.n or sorted(f) != list(range(b.n)):
        return False
    for x in range(a.n):
        if f[a.inv[x]] != b.inv[f[x]]:
            return False
        for y in range(a.n):
            if a.le(x, y) != b.le(f[x], f[y]):
                return False
    return f[a.top] == b.top
