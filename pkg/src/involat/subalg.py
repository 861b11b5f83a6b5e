"""Subalgebras, congruences, quotients, Kleene blocks and forbidden
configurations of finite pseudo-Kleene lattices.

Subsets of elements are handled as Python ints used as bit sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .canon import canonical_form, find_orthoisomorphism
from .classify import _lattice, is_distributive
from .core import InvolutiveLattice, InvolutivePoset, TRUE, Verdict, validate, try_lattice
from .errors import BudgetExceeded, StructureError

DEFAULT_CAP = 1 << 16


def bits(xs: Iterable[int]) -> int:
    m = 0
    for x in xs:
        m |= 1 << x
    return m


def members_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class SubUniverse:
    parent: InvolutiveLattice
    mask: int

    @property
    def members(self) -> list[int]:
        return members_of(self.mask)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    @cached_property
    def structure(self) -> InvolutiveLattice:
        return self.parent.restrict(self.members)

    def names(self) -> tuple:
        return self.parent.names(self.members)


def _close(L: InvolutiveLattice, mask: int, new: Iterable[int]) -> int:
    meet, join, inv = L.meet, L.join, L.inv
    todo = [x for x in new]
    for x in todo:
        mask |= 1 << x
    while todo:
        a = todo.pop()
        cands = [inv[a]]
        for b in members_of(mask):
            cands.append(meet[a][b])
            cands.append(join[a][b])
        for c in cands:
            if not mask >> c & 1:
                mask |= 1 << c
                todo.append(c)
    return mask


def generated_subalgebra(L: InvolutivePoset, seed: Iterable[int] = ()) -> SubUniverse:
    """Least subset containing ``seed``, 0 and 1 closed under ∧, ∨ and ′."""
    L = _lattice(L)
    seed = list(seed) + [L.bottom, L.top]
    return SubUniverse(L, _close(L, 0, seed))


def subuniverses(L: InvolutivePoset, cap: int = DEFAULT_CAP, predicate=None) -> list[SubUniverse]:
    """All subuniverses, smallest first.

    Generated breadth-first by adding one element at a time to a known
    subuniverse and closing.  With ``predicate`` (a function of the member
    mask), only subuniverses satisfying it are kept and extended; this is
    sound for properties inherited by subalgebras, such as distributivity.
    Raises :class:`BudgetExceeded` after ``cap`` subuniverses.
    """
    L = _lattice(L)
    start = _close(L, 0, [L.bottom, L.top])
    if predicate is not None and not predicate(start):
        return []
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for a in range(L.n):
                if m >> a & 1:
                    continue
                s = _close(L, m, [a])
                if s in seen:
                    continue
                if predicate is not None and not predicate(s):
                    continue
                seen.add(s)
                if len(seen) > cap:
                    raise BudgetExceeded(f"more than {cap} subuniverses")
                nxt.append(s)
        frontier = nxt
    out = sorted(seen, key=lambda m: (bin(m).count("1"), m))
    return [SubUniverse(L, m) for m in out]


def _distributive_mask(L: InvolutiveLattice):
    meet, join = L.meet, L.join

    def ok(mask: int) -> bool:
        xs = members_of(mask)
        for x in xs:
            mx = meet[x]
            for y in xs:
                jy = join[y]
                for z in xs:
                    if mx[jy[z]] != join[mx[y]][mx[z]]:
                        return False
        return True

    return ok


def kleene_blocks(L: InvolutivePoset, cap: int = DEFAULT_CAP) -> list[SubUniverse]:
    """Maximal distributive subuniverses (Kleene blocks), sorted by mask."""
    L = _lattice(L)
    if "blocks" in L._cache:
        return L._cache["blocks"]
    dist = subuniverses(L, cap, _distributive_mask(L))
    masks = [s.mask for s in dist]
    blocks = [s for s in dist if not any(m != s.mask and m & s.mask == s.mask for m in masks)]
    blocks.sort(key=lambda s: s.mask)
    L._cache["blocks"] = blocks
    return blocks


def is_tame(L: InvolutivePoset) -> Verdict:
    """Every comparable pair lies in a common Kleene block.  Witness (x, y)."""
    L = _lattice(L)
    blocks = [b.mask for b in kleene_blocks(L)]
    for x in range(L.n):
        for y in range(L.n):
            if L.le(x, y):
                both = (1 << x) | (1 << y)
                if not any(m & both == both for m in blocks):
                    return Verdict(False, (x, y))
    return TRUE


# -- congruences ---------------------------------------------------------------

@dataclass(frozen=True)
class Congruence:
    """Partition given by ``class_of[x]`` = least element of x's class."""

    parent: InvolutiveLattice
    class_of: tuple

    def classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for x, c in enumerate(self.class_of):
            out.setdefault(c, []).append(x)
        return [out[c] for c in sorted(out)]

    def __len__(self) -> int:
        return len(set(self.class_of))

    def related(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]


class _UF:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        p = self.p
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b) -> bool:
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        if a < b:
            self.p[b] = a
        else:
            self.p[a] = b
        return True

    def classes(self):
        return tuple(self.find(x) for x in range(len(self.p)))


def _normalize(cls: Sequence[int]) -> tuple:
    low: dict[int, int] = {}
    for x, c in enumerate(cls):
        low.setdefault(c, x)
    return tuple(low[c] for c in cls)


def _generate(L: InvolutiveLattice, pairs: Iterable[tuple[int, int]]) -> tuple:
    uf = _UF(L.n)
    meet, join, inv = L.meet, L.join, L.inv
    todo = list(pairs)
    while todo:
        a, b = todo.pop()
        if not uf.union(a, b):
            continue
        todo.append((inv[a], inv[b]))
        ma, mb, ja, jb = meet[a], meet[b], join[a], join[b]
        for z in range(L.n):
            todo.append((ma[z], mb[z]))
            todo.append((ja[z], jb[z]))
    return _normalize(uf.classes())


def principal_congruence(L: InvolutivePoset, a: int, b: int) -> Congruence:
    """Least congruence identifying ``a`` and ``b``."""
    L = _lattice(L)
    return Congruence(L, _generate(L, [(a, b)]))


def congruence_from_classes(L: InvolutivePoset, classes: Iterable[Iterable[int]]) -> Congruence:
    """The partition with the given (non-singleton) classes; not checked."""
    L = _lattice(L)
    uf = _UF(L.n)
    for block in classes:
        block = list(block)
        for x in block[1:]:
            uf.union(block[0], x)
    return Congruence(L, _normalize(uf.classes()))


def is_congruence(L: InvolutivePoset, theta: Congruence) -> Verdict:
    """Compatibility with ∧, ∨ and ′.  Witness (x, y, z) with x θ y."""
    L = _lattice(L)
    c = theta.class_of
    for x in range(L.n):
        for y in range(x + 1, L.n):
            if c[x] != c[y]:
                continue
            if c[L.inv[x]] != c[L.inv[y]]:
                return Verdict(False, (x, y), "involution")
            for z in range(L.n):
                if c[L.meet[x][z]] != c[L.meet[y][z]] or c[L.join[x][z]] != c[L.join[y][z]]:
                    return Verdict(False, (x, y, z))
    return TRUE


def _join(L, c1: tuple, c2: tuple) -> tuple:
    uf = _UF(L.n)
    for x in range(L.n):
        uf.union(x, c1[x])
        uf.union(x, c2[x])
    return _normalize(uf.classes())


def congruences(L: InvolutivePoset) -> list[Congruence]:
    """All congruences: joins of principal congruences, plus the identity."""
    L = _lattice(L)
    if "congruences" in L._cache:
        return L._cache["congruences"]
    principal = set()
    for a in range(L.n):
        for b in range(a + 1, L.n):
            principal.add(_generate(L, [(a, b)]))
    found = {tuple(range(L.n))} | principal
    frontier = list(principal)
    principal = list(principal)
    while frontier:
        nxt = []
        for c in frontier:
            for p in principal:
                j = _join(L, c, p)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    out = [Congruence(L, c) for c in sorted(found, key=lambda c: (-len(set(c)), c))]
    L._cache["congruences"] = out
    return out


def quotient(L: InvolutivePoset, theta: Congruence) -> InvolutiveLattice:
    """The induced structure on the classes of ``theta``.

    Classes are ordered by least member and labelled by joining member
    names with ``=``.  [a] ≤ [b] iff [a∧b] = [a].
    """
    L = _lattice(L)
    v = is_congruence(L, theta)
    if not v:
        raise StructureError("not a congruence", v.witness)
    reps = sorted(set(theta.class_of))
    pos = {r: i for i, r in enumerate(reps)}
    c = theta.class_of
    leq = [[c[L.meet[a][b]] == a for b in reps] for a in reps]
    inv = [pos[c[L.inv[a]]] for a in reps]
    labels = ["=".join(L.name(x) for x in range(L.n) if c[x] == r) for r in reps]
    q = validate(leq, inv, pos[c[L.bottom]], pos[c[L.top]], labels)
    return try_lattice(q)


# -- forbidden configurations -------------------------------------------------

@dataclass(frozen=True)
class ForbiddenWitness:
    kind: str                     # "B6", "B8", "QuotB8*" or "QuotB10"
    members: tuple                # subuniverse elements (parent indices)
    theta: Optional[tuple]        # class map on ``members`` positions, if a quotient
    mapping: tuple                # isomorphism from the (quotient) structure to the model

    def describe(self, L: InvolutivePoset) -> str:
        names = ",".join(L.name(x) for x in self.members)
        return f"{self.kind} in subalgebra {{{names}}}"


def _model(name: str) -> InvolutiveLattice:
    from .catalog import catalog_get

    return catalog_get(name)


def subalgebra_copy(L: InvolutivePoset, model: InvolutivePoset, cap: int = DEFAULT_CAP) -> Optional[list[int]]:
    """Members of the first subuniverse orthoisomorphic to ``model``, or None."""
    L = _lattice(L)
    code = canonical_form(model)
    for s in subuniverses(L, cap):
        if len(s) == model.n and canonical_form(s.structure) == code:
            return s.members
    return None


def forbidden_configuration(L: InvolutivePoset, cap: int = DEFAULT_CAP) -> Optional[ForbiddenWitness]:
    """A B6 or B8 subalgebra, or a subalgebra with a quotient ≅ B8* or B10.

    Direct embeddings are searched first (smallest subalgebras first), then
    subalgebra/congruence pairs.  None means no configuration exists.
    """
    L = _lattice(L)
    subs = subuniverses(L, cap)
    for kind, size in (("B6", 6), ("B8", 8)):
        model = _model(kind)
        code = canonical_form(model)
        for s in subs:
            if len(s) == size and canonical_form(s.structure) == code:
                f = find_orthoisomorphism(s.structure, model)
                return ForbiddenWitness(kind, tuple(s.members), None, tuple(f))
    targets = [("QuotB8*", _model("B8*")), ("QuotB10", _model("B10"))]
    codes = {k: (m.n, canonical_form(m)) for k, m in targets}
    for s in subs:
        if len(s) < 8:
            continue
        S = s.structure
        for theta in congruences(S):
            k = len(theta)
            for kind, model in targets:
                if k != model.n:
                    continue
                q = quotient(S, theta)
                if canonical_form(q) == codes[kind][1]:
                    f = find_orthoisomorphism(q, model)
                    return ForbiddenWitness(kind, tuple(s.members), theta.class_of, tuple(f))
    return None


# -- the distributive set from the pasting argument -----------------------------

def pasting_terms(L: InvolutivePoset, a: int, b: int) -> list[int]:
    """The 19 terms in a ≤ b that span a Kleene subalgebra in SPO lattices."""
    L = _lattice(L)
    m, j, c = L.m, L.j, L.c
    aa, bb = m(a, c(a)), m(b, c(b))
    AA, BB = j(a, c(a)), j(b, c(b))
    terms = [
        m(c(b), a), aa, bb, j(aa, bb), a, c(b), j(a, bb), j(c(b), aa),
        m(c(a), b), j(a, c(b)), m(c(a), BB), m(b, AA), c(a), b, m(AA, BB),
        AA, BB, j(c(a), b), L.bottom, L.top,
    ]
    return sorted(set(terms))


def pasting_terms_check(L: InvolutivePoset, a: int, b: int) -> Verdict:
    """Closure under ∧, ∨, ′ and distributivity of :func:`pasting_terms`."""
    L = _lattice(L)
    ts = pasting_terms(L, a, b)
    mask = bits(ts)
    if _close(L, mask, ts) != mask:
        return Verdict(False, (a, b), "not closed")
    if not is_distributive(L.restrict(ts)):
        return Verdict(False, (a, b), "not distributive")
    return TRUE
