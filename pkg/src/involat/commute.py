"""Commutativity: the orthomodular-poset relation, conditions C1-C3 for
modular pseudo-Kleene lattices, and the results that tie them to
distributivity of generated subalgebras.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .classify import _lattice, is_distributive, is_modular, sh_poset, sharp_elements
from .core import InvolutiveLattice, InvolutivePoset, TRUE, Verdict
from .errors import NotModular, NotSharp, UndefinedMeet
from .subalg import bits, generated_subalgebra, members_of


def commutes_omp(p: InvolutivePoset, x: int, y: int) -> bool:
    """x = (x∧y)∨(x∧y′), with every meet and join required to exist."""
    a = p.partial_meet(x, y)
    b = p.partial_meet(x, p.inv[y])
    if a is None or b is None:
        raise UndefinedMeet(f"meet of {p.name(x)} with {p.name(y)} or its complement is undefined",
                            (x, y))
    j = p.partial_join(a, b)
    if j is None:
        raise UndefinedMeet(f"join of {p.name(a)} and {p.name(b)} is undefined", (a, b))
    return j == x


def _sg_distributive(L: InvolutiveLattice, xs: Iterable[int]) -> bool:
    key = ("sg_dist", tuple(sorted(set(xs))))
    if key not in L._cache:
        s = generated_subalgebra(L, key[1])
        L._cache[key] = bool(is_distributive(L.restrict(s.members)))
    return L._cache[key]


@dataclass(frozen=True)
class CommutationReport:
    c1: bool
    c2: bool
    c3: bool
    omp_commutes: bool
    generated_distributive: bool
    modular: bool

    @property
    def commutes(self) -> bool:
        return self.c1 and self.c2 and self.c3


def _c(L: InvolutiveLattice, a: int, b: int) -> tuple[bool, bool, bool]:
    m, j, c = L.m, L.j, L.c
    c1 = m(a, j(b, c(b))) == j(m(a, b), m(a, c(b)))
    c2 = m(b, j(a, c(a))) == j(m(b, a), m(b, c(a)))
    aa = m(a, c(a))
    c3 = aa == j(m(aa, b), m(aa, c(b)))
    return c1, c2, c3


def commutes(L: InvolutivePoset, a: int, b: int) -> bool:
    """a C b: conditions C1, C2 and C3 all hold."""
    return all(_c(_lattice(L), a, b))


def commutes_mpkl(L: InvolutivePoset, a: int, b: int) -> CommutationReport:
    """C1-C3 for (a, b), evaluated literally even when L is not modular."""
    L = _lattice(L)
    c1, c2, c3 = _c(L, a, b)
    return CommutationReport(c1, c2, c3, commutes_omp(L, a, b), _sg_distributive(L, (a, b)),
                             bool(is_modular(L)))


def _require_modular(L):
    v = is_modular(L)
    if not v:
        raise NotModular("lattice is not modular", v.witness)


def aux_com1(L: InvolutivePoset, x: int, y: int) -> bool:
    """x∨(x′∧y′) = (x∨x′)∧(x∨y′)."""
    L = _lattice(L)
    m, j, c = L.m, L.j, L.c
    return j(x, m(c(x), c(y))) == m(j(x, c(x)), j(x, c(y)))


def commutation_equivalences(L: InvolutivePoset, x: int, y: int) -> dict[str, bool]:
    """The five equivalent forms of commutativity for (x, y), plus the
    auxiliary identity that xCy implies.

    Keys ``"1"``..``"5"`` and ``"aux"`` (true when xCy fails, as it is an
    implication).  Requires a modular lattice.
    """
    L = _lattice(L)
    _require_modular(L)
    m, j, c = L.m, L.j, L.c
    one = commutes(L, x, y)
    X = j(x, c(x))
    five_extra = m(X, j(y, c(y))) == j(m(X, y), m(X, c(y)))
    return {
        "1": one,
        "2": commutes(L, y, x),
        "3": commutes(L, x, c(y)),
        "4": commutes(L, c(x), y),
        "5": one and five_extra,
        "aux": (not one) or aux_com1(L, x, y),
    }


def commutation_equivalences_hold(L: InvolutivePoset) -> Verdict:
    """All pairs: the five forms agree and the auxiliary identity holds."""
    L = _lattice(L)
    for x in range(L.n):
        for y in range(L.n):
            e = commutation_equivalences(L, x, y)
            vals = {e[k] for k in "12345"}
            if len(vals) != 1 or not e["aux"]:
                return Verdict(False, (x, y))
    return TRUE


def sg_distributive_iff_commutes(L: InvolutivePoset) -> Verdict:
    """xCy holds exactly when Sg(x, y) is distributive.  Requires modularity."""
    L = _lattice(L)
    _require_modular(L)
    for x in range(L.n):
        for y in range(L.n):
            if commutes(L, x, y) != _sg_distributive(L, (x, y)):
                return Verdict(False, (x, y))
    return TRUE


def lattice_closure(L: InvolutivePoset, seed: Iterable[int]) -> list[int]:
    """Sublattice of the lattice reduct generated by ``seed`` and the bounds."""
    L = _lattice(L)
    mask = bits(seed) | (1 << L.bottom) | (1 << L.top)
    changed = True
    while changed:
        changed = False
        xs = members_of(mask)
        for a in xs:
            for b in xs:
                for c in (L.meet[a][b], L.join[a][b]):
                    if not mask >> c & 1:
                        mask |= 1 << c
                        changed = True
    return members_of(mask)


def subset_distributive(L: InvolutivePoset, members: Iterable[int]) -> bool:
    """Distributive law x∧(y∨z) = (x∧y)∨(x∧z) on a sublattice, using the
    parent's operations (the subset need not be closed under ′)."""
    L = _lattice(L)
    _, M, J, _ = L.arrays()
    idx = np.asarray(sorted(members))
    x, y, z = idx[:, None, None], idx[None, :, None], idx[None, None, :]
    return bool(np.all(M[x, J[y, z]] == J[M[x, y], M[x, z]]))


def foulis_holland_check(L: InvolutivePoset, a: int, b: int, c: int) -> bool:
    """Whether {a, b, c} generates a distributive sublattice of the lattice reduct."""
    return subset_distributive(L, lattice_closure(L, (a, b, c)))


def _jonsson_condition(L: InvolutiveLattice, B: list[int], C: list[int]) -> bool:
    m, j = L.m, L.j
    for P, Q in ((B, C), (C, B)):
        for x1 in P:
            for x2 in P:
                for y in Q:
                    if m(j(x1, x2), y) != j(m(x1, y), m(x2, y)):
                        return False
    return True


def jonsson_agrees(L: InvolutivePoset, a: int, b: int) -> Verdict:
    """Compare the pairwise distributivity criterion on Sg(a) ∪ Sg(b) with
    direct distributivity of the sublattice they generate, and check that
    this sublattice is closed under the involution.
    """
    L = _lattice(L)
    B = generated_subalgebra(L, [a]).members
    C = generated_subalgebra(L, [b]).members
    D = lattice_closure(L, B + C)
    Dset = set(D)
    if any(L.inv[d] not in Dset for d in D):
        return Verdict(False, (a, b), "generated sublattice not closed under the involution")
    direct = bool(is_distributive(L.restrict(D)))
    if _jonsson_condition(L, B, C) != direct:
        return Verdict(False, (a, b), "criterion disagrees with direct check")
    return TRUE


def sharp_commutation(L: InvolutivePoset, x: int, y: int) -> Verdict:
    """For sharp x, y of an SPO lattice: if x and y commute in the poset of
    sharp elements, their meet there equals their lattice meet; and Sg(x, y)
    is distributive iff they commute there.
    """
    L = _lattice(L)
    sh = sharp_elements(L)
    if x not in sh or y not in sh:
        raise NotSharp(f"{L.name(x)} or {L.name(y)} is not sharp", (x, y))
    S = sh_poset(L)
    pos = {e: i for i, e in enumerate(sh)}
    sx, sy = pos[x], pos[y]
    try:
        c = commutes_omp(S, sx, sy)
    except UndefinedMeet:
        c = False
    if c:
        sm = S.partial_meet(sx, sy)
        if sh[sm] != L.m(x, y):
            return Verdict(False, (x, y), "meets differ")
    if c != _sg_distributive(L, (x, y)):
        return Verdict(False, (x, y), "distributivity differs")
    return TRUE


def sharp_commutation_holds(L: InvolutivePoset) -> Verdict:
    L = _lattice(L)
    sh = sharp_elements(L)
    for x in sh:
        for y in sh:
            v = sharp_commutation(L, x, y)
            if not v:
                return v
    return TRUE
