"""Membership tests for the classes of involutive posets and lattices.

Every check returns a :class:`Verdict`; when it fails, the witness is the
lexicographically first violating tuple of element indices.  Results are
cached on the structure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .core import InvolutiveLattice, InvolutivePoset, TRUE, Verdict


def _cached(fn: Callable) -> Callable:
    key = fn.__name__

    def wrapper(p, *args, **kwargs):
        if args or kwargs:
            return fn(p, *args, **kwargs)
        cache = p._cache
        if key not in cache:
            cache[key] = fn(p)
        return cache[key]

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    wrapper.__wrapped__ = fn
    return wrapper


def _first(mask: np.ndarray, note: str = "") -> Verdict:
    """Verdict failing at the first True entry of ``mask`` (C order)."""
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return TRUE
    return Verdict(False, tuple(int(v) for v in hits[0]), note)


def _need_lattice(p) -> Optional[Verdict]:
    if isinstance(p, InvolutiveLattice):
        return None
    if p.is_lattice():
        return None
    for x in range(p.n):
        for y in range(p.n):
            if p.partial_join(x, y) is None or p.partial_meet(x, y) is None:
                return Verdict(False, (x, y), "not a lattice")
    return None  # pragma: no cover


def _lattice(p) -> InvolutiveLattice:
    from .core import try_lattice

    if isinstance(p, InvolutiveLattice):
        return p
    if "as_lattice" not in p._cache:
        p._cache["as_lattice"] = try_lattice(p)
    return p._cache["as_lattice"]


# -- poset-level classes -----------------------------------------------------

@_cached
def is_uop(p: InvolutivePoset) -> Verdict:
    """Orthogonal joins exist and the Kleene condition x∧x′ ≤ y∨y′ holds."""
    n, inv = p.n, p.inv
    for x in range(n):
        for y in range(n):
            if p.le(x, inv[y]) and p.partial_join(x, y) is None:
                return Verdict(False, (x, y), "orthogonal join missing")
    for x in range(n):
        m = p.partial_meet(x, inv[x])
        if m is None:
            return Verdict(False, (x,), "missing meet x∧x′")
        for y in range(n):
            j = p.partial_join(y, inv[y])
            if j is None:
                return Verdict(False, (y,), "missing join y∨y′")
            if not p.le(m, j):
                return Verdict(False, (x, y), "Kleene condition")
    return TRUE


def sharp_elements(p: InvolutivePoset) -> list[int]:
    """Elements a with a∧a′ = 0."""
    return [a for a in range(p.n) if p.partial_meet(a, p.inv[a]) == p.bottom]


@_cached
def is_op(p: InvolutivePoset) -> Verdict:
    """Orthogonal poset: a UOP in which every element is sharp."""
    v = is_uop(p)
    if not v:
        return v
    for a in range(p.n):
        if p.partial_meet(a, p.inv[a]) != p.bottom:
            return Verdict(False, (a,), "not sharp")
    return TRUE


@_cached
def is_paraorthomodular(p: InvolutivePoset) -> Verdict:
    """x ≤ y and x′∧y = 0 imply x = y.  Witness is (x, y)."""
    n, inv = p.n, p.inv
    for x in range(n):
        for y in range(n):
            if x != y and p.le(x, y) and p.partial_meet(inv[x], y) == p.bottom:
                return Verdict(False, (x, y))
    return TRUE


@_cached
def is_pmp(p: InvolutivePoset) -> Verdict:
    v = is_uop(p)
    return v if not v else is_paraorthomodular(p)


@_cached
def is_omp(p: InvolutivePoset) -> Verdict:
    """Orthomodular poset: a paraorthomodular orthogonal poset."""
    v = is_op(p)
    return v if not v else is_paraorthomodular(p)


def sh_poset(p: InvolutivePoset) -> InvolutivePoset:
    """The sharp elements with the inherited order and involution."""
    return InvolutivePoset.restrict(p, sharp_elements(p))


# -- lattice identities ------------------------------------------------------

@_cached
def is_modular(p) -> Verdict:
    """x ≤ z implies x∨(y∧z) = (x∨y)∧z.  Witness (x, y, z)."""
    bad = _need_lattice(p)
    if bad:
        return bad
    le, M, J, _ = _lattice(p).arrays()
    idx = np.arange(len(J))
    left = J[idx[:, None, None], M[None, :, :]]
    right = M[J[:, :, None], idx[None, None, :]]
    return _first(le[:, None, :] & (left != right))


@_cached
def is_distributive(p) -> Verdict:
    """x∧(y∨z) = (x∧y)∨(x∧z) for all triples."""
    bad = _need_lattice(p)
    if bad:
        return bad
    _, M, J, _ = _lattice(p).arrays()
    n = len(M)
    left = M[np.arange(n)[:, None, None], J[None, :, :]]
    right = J[M[:, :, None], M[:, None, :]]
    return _first(left != right)


@_cached
def is_orthomodular(p) -> Verdict:
    """Orthomodular law: x ≤ y implies y = x∨(y∧x′).

    Evaluated with partial operations, so it also applies to posets; an
    undefined term counts as a violation.
    """
    n, inv = p.n, p.inv
    for x in range(n):
        for y in range(n):
            if not p.le(x, y):
                continue
            m = p.partial_meet(y, inv[x])
            j = None if m is None else p.partial_join(x, m)
            if j != y:
                return Verdict(False, (x, y))
    return TRUE


def _xy_arrays(L: InvolutiveLattice):
    le, M, J, I = L.arrays()
    n = L.n
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    return le, M, J, I, x, y


@_cached
def is_sp1(p) -> Verdict:
    """x ≤ y and x′∧y = (x∧x′)∨(y∧y′) imply y∧(x∨x′) = x∨(y∧y′)."""
    bad = _need_lattice(p)
    if bad:
        return bad
    le, M, J, I, x, y = _xy_arrays(_lattice(p))
    xx = M[x, I[x]]
    yy = M[y, I[y]]
    low = J[xx, yy]
    prem = le & (M[I[x], y] == low)
    concl = M[y, J[x, I[x]]] == J[x, yy]
    return _first(prem & ~concl)


@_cached
def is_sp2(p) -> Verdict:
    """x ≤ y implies (x∧x′)∨(y∧y′) = (x′∧y)∧(x′∧y)′."""
    bad = _need_lattice(p)
    if bad:
        return bad
    le, M, J, I, x, y = _xy_arrays(_lattice(p))
    low = J[M[x, I[x]], M[y, I[y]]]
    t = M[I[x], y]
    return _first(le & (low != M[t, I[t]]))


def _sp_raw(L: InvolutiveLattice) -> Verdict:
    le, M, J, I, x, y = _xy_arrays(L)
    left = M[y, J[x, I[x]]]
    right = J[x, M[I[x], y]]
    return _first(le & (left != right))


def _at_raw(L: InvolutiveLattice) -> Verdict:
    le, M, J, I, x, y = _xy_arrays(L)
    prem = le[x, I[y]] & le[M[I[x], I[y]], M[x, y]]
    return _first(prem & (x != I[y]))


@_cached
def is_sp_at(p) -> Verdict:
    """Quasi-equation: x ≤ y′ and x′∧y′ ≤ x∧y imply x = y′."""
    bad = _need_lattice(p)
    if bad:
        return bad
    return _at_raw(_lattice(p))


class TheoremViolation(AssertionError):
    """Two conditions that must agree on every structure disagreed."""


def is_sp(p, cross_check: bool = True) -> Verdict:
    """(sp): x ≤ y implies y∧(x∨x′) = x∨(x′∧y).  Witness (x, y).

    With ``cross_check`` the result is compared against SP1∧SP2 and the
    quasi-equation (@) against SP1; a disagreement raises
    :class:`TheoremViolation`.
    """
    bad = _need_lattice(p)
    if bad:
        return bad
    key = "is_sp"
    if key not in p._cache:
        p._cache[key] = _sp_raw(_lattice(p))
    v = p._cache[key]
    if cross_check and "sp_cross" not in p._cache:
        sp1, sp2 = bool(is_sp1(p)), bool(is_sp2(p))
        if bool(v) != (sp1 and sp2):
            raise TheoremViolation(f"(sp)={bool(v)} but SP1={sp1}, SP2={sp2}")
        at = bool(is_sp_at(p))
        if at != sp1:
            raise TheoremViolation(f"(@)={at} but SP1={sp1}")
        p._cache["sp_cross"] = True
    return v


@_cached
def is_sp_equational(p) -> Verdict:
    """(x∨y)∧(x∨x′) = x∨((x∨y)∧x′) for all x, y."""
    bad = _need_lattice(p)
    if bad:
        return bad
    le, M, J, I, x, y = _xy_arrays(_lattice(p))
    xy = J[x, y]
    return _first(M[xy, J[x, I[x]]] != J[x, M[xy, I[x]]])


@_cached
def is_sp_equational_alt(p) -> Verdict:
    """x∨((x∨y)∧(x∨y)′) = (x∨y)∧(x∨(x∨y)′) for all x, y."""
    bad = _need_lattice(p)
    if bad:
        return bad
    le, M, J, I, x, y = _xy_arrays(_lattice(p))
    xy = J[x, y]
    return _first(J[x, M[xy, I[xy]]] != M[xy, J[x, I[xy]]])


@_cached
def aux1_identity(p) -> Verdict:
    """x ≤ y implies y∧(y′∨(x∧x′)) = (y∧y′)∨(x∧x′)."""
    bad = _need_lattice(p)
    if bad:
        return bad
    le, M, J, I, x, y = _xy_arrays(_lattice(p))
    xx = M[x, I[x]]
    return _first(le & (M[y, J[I[y], xx]] != J[M[y, I[y]], xx]))


@_cached
def satisfies_quasi_A(p) -> Verdict:
    """x∧x′ = 0 and y∧y′ = 0 imply (x∧y)∧(x∧y)′ = 0."""
    bad = _need_lattice(p)
    if bad:
        return bad
    le, M, J, I, x, y = _xy_arrays(_lattice(p))
    b = p.bottom
    sharp = M[np.arange(p.n), I] == b
    t = M[x, y]
    return _first(sharp[:, None] & sharp[None, :] & (M[t, I[t]] != b))


@_cached
def residuation_condition(p) -> Verdict:
    """x ≰ y implies x ≤ y∨y′ or y′ ≤ x∨y.  Witness (x, y)."""
    bad = _need_lattice(p)
    if bad:
        return bad
    le, M, J, I, x, y = _xy_arrays(_lattice(p))
    ok = le[x, J[y, I[y]]] | le[I[y], J[x, y]]
    return _first(~le & ~ok)


# -- class report --------------------------------------------------------------

CLASS_NAMES = ("UOP", "OP", "PMP", "OMP", "PKL", "OL", "KL", "MPKL", "POML",
               "OML", "SPO", "MOL", "BA", "A", "RES2")


def class_verdict(p: InvolutivePoset, name: str) -> Verdict:
    """Membership of ``p`` in the named class (see :data:`CLASS_NAMES`)."""
    name = name.upper()
    if name == "UOP":
        return is_uop(p)
    if name == "OP":
        return is_op(p)
    if name == "PMP":
        return is_pmp(p)
    if name == "OMP":
        return is_omp(p)
    # lattice classes
    bad = _need_lattice(p)
    if bad:
        return bad
    if name == "PKL":
        return is_uop(p)
    base = {"OL": "OP", "KL": "PKL", "MPKL": "PKL", "POML": "PKL", "OML": "OL",
            "SPO": "PKL", "MOL": "OL", "BA": "OL", "A": "PKL", "RES2": "PKL"}
    if name not in base:
        raise KeyError(f"unknown class {name!r}")
    v = class_verdict(p, base[name])
    if not v:
        return v
    if name == "OL":
        return is_op(p)
    if name in ("KL", "BA"):
        return is_distributive(p)
    if name in ("MPKL", "MOL"):
        return is_modular(p)
    if name in ("POML", "OML"):
        return is_paraorthomodular(p)
    if name == "SPO":
        return is_sp(p)
    if name == "A":
        return satisfies_quasi_A(p)
    return residuation_condition(p)


@dataclass(frozen=True)
class ClassReport:
    flags: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    def __getitem__(self, name: str) -> bool:
        return self.flags[name.upper()]

    def members(self) -> list[str]:
        return [k for k in CLASS_NAMES if self.flags[k]]


def classify(p: InvolutivePoset) -> ClassReport:
    """Flags for every class in :data:`CLASS_NAMES` with failure witnesses."""
    if "report" in p._cache:
        return p._cache["report"]
    flags, wit = {}, {}
    for name in CLASS_NAMES:
        v = class_verdict(p, name)
        flags[name] = v.holds
        if not v.holds:
            wit[name] = v.witness
    rep = ClassReport(flags, wit)
    p._cache["report"] = rep
    return rep


# inclusion edges (smaller, larger) of the class diagram, plus SPO's place
INCLUSIONS = (
    ("PKL", "UOP"), ("PMP", "UOP"), ("OP", "UOP"),
    ("POML", "PKL"), ("OL", "PKL"), ("POML", "PMP"), ("OMP", "PMP"),
    ("OL", "OP"), ("OMP", "OP"),
    ("MPKL", "POML"), ("OML", "POML"), ("OML", "OL"), ("OML", "OMP"),
    ("KL", "MPKL"), ("MOL", "MPKL"), ("MOL", "OML"),
    ("BA", "KL"), ("BA", "MOL"),
    ("SPO", "POML"), ("OML", "SPO"), ("KL", "SPO"),
)


def inclusion_violations(report: ClassReport) -> list[tuple[str, str]]:
    """Edges (small, large) of the class diagram broken by ``report``."""
    return [(a, b) for a, b in INCLUSIONS if report.flags[a] and not report.flags[b]]
