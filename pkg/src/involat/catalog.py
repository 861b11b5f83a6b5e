"""Named small structures.

Each entry lists its Hasse diagram as ``(lower, upper)`` cover pairs over
named elements, the orbits of the involution, and the class memberships
it is known to have or lack.  Labels use ``&`` for meet, ``|`` for join
and ``'`` for the involution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import InvolutivePoset, from_named_covers
from .errors import UnknownName


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    names: tuple
    covers: tuple
    inv_pairs: tuple
    expected: dict = field(default_factory=dict)
    # congruence given by its non-singleton classes, and the name of the
    # catalog structure the quotient is isomorphic to
    theta: Optional[tuple] = None
    quotient: Optional[str] = None
    description: str = ""

    def build(self) -> InvolutivePoset:
        return from_named_covers(self.names, self.covers, self.inv_pairs)


def _chain_covers(names):
    return tuple(zip(names, names[1:]))


_ENTRIES: dict[str, CatalogEntry] = {}


def _add(entry: CatalogEntry):
    _ENTRIES[entry.name] = entry


_add(CatalogEntry(
    "B2", ("0", "1"), (("0", "1"),), (("0", "1"),),
    {"BA": True, "SPO": True, "A": True, "RES2": True},
    description="two-element Boolean algebra",
))
_add(CatalogEntry(
    "K3", ("0", "h", "1"), _chain_covers(("0", "h", "1")), (("0", "1"), ("h", "h")),
    {"KL": True, "OL": False, "SPO": True, "RES2": True, "POML": True},
    description="three-element Kleene chain, h = 1/2 fixed",
))
_add(CatalogEntry(
    "B4", ("0", "a", "a'", "1"),
    (("0", "a"), ("0", "a'"), ("a", "1"), ("a'", "1")),
    (("0", "1"), ("a", "a'")),
    {"BA": True},
    description="four-element Boolean algebra",
))
_add(CatalogEntry(
    "MO2", ("0", "a", "a'", "b", "b'", "1"),
    tuple(("0", t) for t in ("a", "a'", "b", "b'")) + tuple((t, "1") for t in ("a", "a'", "b", "b'")),
    (("0", "1"), ("a", "a'"), ("b", "b'")),
    {"OML": True, "MOL": True, "BA": False},
    description="modular ortholattice with two blocks",
))
_add(CatalogEntry(
    "B6", ("0", "x", "y'", "y", "x'", "1"),
    (("0", "x"), ("x", "y"), ("y", "1"), ("0", "y'"), ("y'", "x'"), ("x'", "1")),
    (("0", "1"), ("x", "x'"), ("y", "y'")),
    {"PKL": True, "OL": True, "POML": False, "OML": False, "SPO": False},
    description="benzene ring",
))
_add(CatalogEntry(
    "B8", ("0", "z'", "x", "y'", "y", "x'", "z", "1"),
    (("0", "z'"), ("z'", "x"), ("z'", "y'"), ("x", "y"), ("y'", "x'"),
     ("y", "z"), ("x'", "z"), ("z", "1")),
    (("0", "1"), ("x", "x'"), ("y", "y'"), ("z", "z'")),
    {"PKL": True, "POML": True, "MPKL": False, "SPO": False},
    description="paraorthomodular but not tame",
))
_add(CatalogEntry(
    "B8*", ("0", "x", "y", "z", "z'", "y'", "x'", "1"),
    (("0", "x"), ("0", "y"), ("x", "z"), ("y", "z'"), ("z", "z'"), ("z", "y'"),
     ("z'", "x'"), ("x'", "1"), ("y'", "1")),
    (("0", "1"), ("x", "x'"), ("y", "y'"), ("z", "z'")),
    {"PKL": True, "SPO": False},
    description="forbidden quotient failing SP2",
))
_add(CatalogEntry(
    "B10", ("0", "y'", "x'&y", "x", "y'|(x'&y)", "x|(x'&y)", "x'", "x|y'", "y", "1"),
    (("0", "y'"), ("0", "x'&y"), ("0", "x"),
     ("y'", "y'|(x'&y)"), ("x'&y", "y'|(x'&y)"), ("x'&y", "x|(x'&y)"), ("x", "x|(x'&y)"),
     ("y'|(x'&y)", "x'"), ("y'|(x'&y)", "x|y'"), ("x|(x'&y)", "x|y'"), ("x|(x'&y)", "y"),
     ("x'", "1"), ("x|y'", "1"), ("y", "1")),
    (("0", "1"), ("x", "x'"), ("y", "y'"), ("x'&y", "x|y'"), ("y'|(x'&y)", "x|(x'&y)")),
    {"PKL": True, "SPO": False},
    description="forbidden quotient failing SP2",
))
_add(CatalogEntry(
    "B", ("0", "b'", "c'", "a'", "a", "b", "c", "1"),
    (("0", "b'"), ("0", "c'"), ("0", "a'"), ("c'", "a"), ("c'", "b"),
     ("b'", "c"), ("c'", "c"), ("a'", "c"), ("a", "1"), ("b", "1"), ("c", "1")),
    (("0", "1"), ("a", "a'"), ("b", "b'"), ("c", "c'")),
    {"PKL": True, "SPO": True, "A": False},
    description="sharp elements a, b whose meet is not sharp",
))
_add(CatalogEntry(
    "C", ("0", "d'", "b'", "c'", "a'", "a", "b", "c", "d", "1"),
    (("0", "d'"), ("d'", "b'"), ("d'", "c'"), ("d'", "a'"), ("c'", "a"), ("c'", "b"),
     ("b'", "c"), ("c'", "c"), ("a'", "c"), ("a", "d"), ("b", "d"), ("c", "d"), ("d", "1")),
    (("0", "1"), ("a", "a'"), ("b", "b'"), ("c", "c'"), ("d", "d'")),
    {"PKL": True, "SPO": True, "A": True},
    theta=(("0", "d'"), ("d", "1")), quotient="B",
    description="satisfies (A) while its quotient does not",
))
_add(CatalogEntry(
    "Diamond", ("0", "a", "b", "a'", "1"),
    (("0", "a"), ("0", "b"), ("0", "a'"), ("a", "1"), ("b", "1"), ("a'", "1")),
    (("0", "1"), ("a", "a'"), ("b", "b")),
    {"PKL": True, "SPO": True, "MPKL": True},
    description="C1 and C3 hold for (a, b) but C2 fails",
))
_add(CatalogEntry(
    "FH", ("0", "a", "b", "c", "d", "a'", "b'", "c'", "1"),
    (("0", "a"), ("0", "b"), ("0", "c"), ("a", "d"), ("b", "d"), ("c", "d"),
     ("d", "a'"), ("d", "b'"), ("d", "c'"), ("a'", "1"), ("b'", "1"), ("c'", "1")),
    (("0", "1"), ("a", "a'"), ("b", "b'"), ("c", "c'"), ("d", "d")),
    {"PKL": True, "SPO": True, "MPKL": True},
    description="aCb and aCc but {a, b, c} generates a non-distributive sublattice",
))

# Subalgebras from the proof of the forbidden-configuration theorem.  Each is
# one concrete instance with the collapses its case assumes.

_add(CatalogEntry(
    "F1", ("0", "y&y'", "y'", "x|(y&y')", "x'&y", "y'|x", "y", "x'&(y|y')", "y|y'", "1"),
    (("0", "y&y'"), ("y&y'", "y'"), ("y&y'", "x|(y&y')"), ("x|(y&y')", "x'&y"),
     ("y'", "y'|x"), ("x'&y", "y'|x"), ("x'&y", "y"), ("y'|x", "x'&(y|y')"),
     ("x'&(y|y')", "y|y'"), ("y", "y|y'"), ("y|y'", "1")),
    (("0", "1"), ("y&y'", "y|y'"), ("x|(y&y')", "x'&(y|y')"), ("y", "y'"), ("x'&y", "y'|x")),
    {"PKL": True, "SPO": False},
    theta=(("0", "y&y'"), ("y|y'", "1")), quotient="B8*",
))
_add(CatalogEntry(
    "F2", ("0", "y&y'", "y'", "x|(y&y')", "y&(x|y')", "x'&y", "y'|x", "y'|(x'&y)", "y",
           "x'&(y|y')", "y|y'", "1"),
    (("0", "y&y'"), ("y&y'", "y'"), ("y&y'", "x|(y&y')"), ("x|(y&y')", "y&(x|y')"),
     ("y&(x|y')", "x'&y"), ("y&(x|y')", "y'|x"), ("y'", "y'|x"), ("x'&y", "y'|(x'&y)"),
     ("y'|x", "y'|(x'&y)"), ("x'&y", "y"), ("y'|(x'&y)", "x'&(y|y')"),
     ("x'&(y|y')", "y|y'"), ("y", "y|y'"), ("y|y'", "1")),
    (("0", "1"), ("y&y'", "y|y'"), ("x|(y&y')", "x'&(y|y')"), ("y&(x|y')", "y'|(x'&y)"),
     ("x'&y", "y'|x"), ("y", "y'")),
    {"PKL": True, "SPO": False},
    theta=(("y'|(x'&y)", "y'|x"), ("y&(x|y')", "x'&y"), ("0", "y&y'"), ("y|y'", "1")),
    quotient="B8*",
))
_add(CatalogEntry(
    "F3", ("0", "y&y'", "y'", "T'", "x'&y", "y&(x|x')", "y'|(x&x')", "y'|x", "y", "T",
           "y|y'", "1"),
    (("0", "y&y'"), ("y&y'", "y'"), ("y&y'", "T'"), ("T'", "x'&y"), ("x'&y", "y&(x|x')"),
     ("x'&y", "y'|(x&x')"), ("y'", "y'|(x&x')"), ("y&(x|x')", "y"), ("y&(x|x')", "y'|x"),
     ("y'|(x&x')", "y'|x"), ("y'|x", "T"), ("T", "y|y'"), ("y", "y|y'"), ("y|y'", "1")),
    (("0", "1"), ("y&y'", "y|y'"), ("T'", "T"), ("x'&y", "y'|x"),
     ("y&(x|x')", "y'|(x&x')"), ("y", "y'")),
    {"PKL": True, "SPO": False},
    description="T = (x|x')&(y|y'), T' = (x&x')|(y&y')",
))
_add(CatalogEntry(
    "F4", ("0", "x&x'", "x", "T'", "x'&y", "x|(y&y')", "x'&(y|y')", "y'|x", "x'", "T",
           "x|x'", "1"),
    (("0", "x&x'"), ("x&x'", "x"), ("x&x'", "T'"), ("T'", "x'&y"), ("x'&y", "x'&(y|y')"),
     ("x'&y", "x|(y&y')"), ("x", "x|(y&y')"), ("x|(y&y')", "y'|x"),
     ("x'&(y|y')", "y'|x"), ("x'&(y|y')", "x'"), ("y'|x", "T"), ("T", "x|x'"),
     ("x'", "x|x'"), ("x|x'", "1")),
    (("0", "1"), ("x&x'", "x|x'"), ("T'", "T"), ("x'&y", "y'|x"),
     ("x|(y&y')", "x'&(y|y')"), ("x", "x'")),
    {"PKL": True, "SPO": False},
    description="T = (x|x')&(y|y'), T' = (x&x')|(y&y')",
))
_add(CatalogEntry(
    "F5", ("0", "m", "y'", "x'&y", "x", "y'|(x'&y)", "x|(x'&y)", "x'", "x|y'", "y", "M", "1"),
    (("0", "m"), ("m", "y'"), ("m", "x'&y"), ("m", "x"), ("y'", "y'|(x'&y)"),
     ("x'&y", "y'|(x'&y)"), ("x'&y", "x|(x'&y)"), ("x", "x|(x'&y)"),
     ("y'|(x'&y)", "x'"), ("y'|(x'&y)", "x|y'"), ("x|(x'&y)", "x|y'"), ("x|(x'&y)", "y"),
     ("x'", "M"), ("x|y'", "M"), ("y", "M"), ("M", "1")),
    (("0", "1"), ("m", "M"), ("y", "y'"), ("x", "x'"), ("x'&y", "x|y'"),
     ("y'|(x'&y)", "x|(x'&y)")),
    {"PKL": True, "SPO": False},
    theta=(("0", "m"), ("M", "1")), quotient="B10",
    description="m = x&x' = y&y', M = x|x' = y|y'",
))
_add(CatalogEntry(
    "F6", ("0", "x&x'", "x", "y&y'", "K", "x|(y&y')", "x'&(y|y')", "U", "x'", "y|y'",
           "x|x'", "1"),
    (("0", "x&x'"), ("x&x'", "x"), ("x&x'", "y&y'"), ("y&y'", "K"), ("K", "x'&(y|y')"),
     ("K", "x|(y&y')"), ("x", "x|(y&y')"), ("x|(y&y')", "U"), ("x'&(y|y')", "U"),
     ("x'&(y|y')", "x'"), ("U", "y|y'"), ("y|y'", "x|x'"), ("x'", "x|x'"), ("x|x'", "1")),
    (("0", "1"), ("x&x'", "x|x'"), ("y&y'", "y|y'"), ("K", "U"), ("x|(y&y')", "x'&(y|y')"),
     ("x", "x'")),
    {"PKL": True, "SPO": False},
    description="K = x'&(x|(y&y')), U = x|(x'&(y|y'))",
))
_add(CatalogEntry(
    "F7", ("0", "y&y'", "y'", "x'&y", "x|(y&y')", "y'|(x'&y)", "x|(x'&y)", "x'&(y|y')",
           "x|y'", "y", "M", "1"),
    (("0", "y&y'"), ("y&y'", "y'"), ("y&y'", "x'&y"), ("y&y'", "x|(y&y')"),
     ("y'", "y'|(x'&y)"), ("x'&y", "y'|(x'&y)"), ("x'&y", "x|(x'&y)"),
     ("x|(y&y')", "x|(x'&y)"), ("y'|(x'&y)", "x'&(y|y')"), ("y'|(x'&y)", "x|y'"),
     ("x|(x'&y)", "x|y'"), ("x|(x'&y)", "y"), ("x'&(y|y')", "M"), ("x|y'", "M"),
     ("y", "M"), ("M", "1")),
    (("0", "1"), ("y&y'", "M"), ("y", "y'"), ("x'&y", "x|y'"), ("x|(y&y')", "x'&(y|y')"),
     ("y'|(x'&y)", "x|(x'&y)")),
    {"PKL": True, "SPO": False},
    description="M = x|x' = y|y'",
))
_add(CatalogEntry(
    "F8", ("0", "y&y'", "y'", "T'", "W", "y'|(x&x')", "y&(x|x')", "U", "y", "T", "y|y'", "1"),
    (("0", "y&y'"), ("y&y'", "y'"), ("y&y'", "T'"), ("T'", "W"), ("W", "y&(x|x')"),
     ("W", "y'|(x&x')"), ("y'", "y'|(x&x')"), ("y'|(x&x')", "U"), ("y&(x|x')", "U"),
     ("y&(x|x')", "y"), ("U", "T"), ("T", "y|y'"), ("y", "y|y'"), ("y|y'", "1")),
    (("0", "1"), ("y&y'", "y|y'"), ("T'", "T"), ("W", "U"), ("y'|(x&x')", "y&(x|x')"),
     ("y", "y'")),
    {"PKL": True, "SPO": False},
    description="W = y&(y'|(x&x')), U = y'|(y&(x|x'))",
))
_add(CatalogEntry(
    "F8dual", ("0", "x&x'", "x", "T'", "K", "x|(y&y')", "x'&(y|y')", "U", "x'", "T",
               "x|x'", "1"),
    (("0", "x&x'"), ("x&x'", "x"), ("x&x'", "T'"), ("T'", "K"), ("K", "x'&(y|y')"),
     ("K", "x|(y&y')"), ("x", "x|(y&y')"), ("x|(y&y')", "U"), ("x'&(y|y')", "U"),
     ("x'&(y|y')", "x'"), ("U", "T"), ("T", "x|x'"), ("x'", "x|x'"), ("x|x'", "1")),
    (("0", "1"), ("x&x'", "x|x'"), ("T'", "T"), ("K", "U"), ("x|(y&y')", "x'&(y|y')"),
     ("x", "x'")),
    {"PKL": True, "SPO": False},
    description="K = x'&(x|(y&y')), U = x|(x'&(y|y'))",
))
_add(CatalogEntry(
    "F9", ("0", "T'", "y'|(x&x')", "x'&y", "x|(y&y')", "y'|(x'&y)", "x|(x'&y)",
           "x'&(y|y')", "x|y'", "y&(x|x')", "M", "1"),
    (("0", "T'"), ("T'", "y'|(x&x')"), ("T'", "x'&y"), ("T'", "x|(y&y')"),
     ("y'|(x&x')", "y'|(x'&y)"), ("x'&y", "y'|(x'&y)"), ("x'&y", "x|(x'&y)"),
     ("x|(y&y')", "x|(x'&y)"), ("y'|(x'&y)", "x'&(y|y')"), ("y'|(x'&y)", "x|y'"),
     ("x|(x'&y)", "x|y'"), ("x|(x'&y)", "y&(x|x')"), ("x'&(y|y')", "M"), ("x|y'", "M"),
     ("y&(x|x')", "M"), ("M", "1")),
    (("0", "1"), ("T'", "M"), ("y'|(x&x')", "y&(x|x')"), ("x'&y", "x|y'"),
     ("x|(y&y')", "x'&(y|y')"), ("y'|(x'&y)", "x|(x'&y)")),
    {"PKL": True, "SPO": False},
    description="M = x|x' = y|y', T' = (x&x')|(y&y')",
))
_add(CatalogEntry(
    "F10", ("0", "y&y'", "y'", "T'", "a'", "y&a", "y'|a'", "a", "y", "T", "y|y'", "1"),
    (("0", "y&y'"), ("y&y'", "y'"), ("y&y'", "T'"), ("T'", "a'"), ("a'", "y&a"),
     ("a'", "y'|a'"), ("y'", "y'|a'"), ("y'|a'", "a"), ("y&a", "a"), ("y&a", "y"),
     ("a", "T"), ("T", "y|y'"), ("y", "y|y'"), ("y|y'", "1")),
    (("0", "1"), ("y&y'", "y|y'"), ("T'", "T"), ("a", "a'"), ("y&a", "y'|a'"), ("y", "y'")),
    {"PKL": True, "SPO": False},
    description="a' = (x'&y)&(y'|x)",
))
_add(CatalogEntry(
    "F11", ("0", "T'", "y'|(x&x')", "a'", "x|(y&y')", "y'|a'", "x|a'", "x'&y", "y'|x",
            "x'&a", "y&a", "x'&(y|y')", "a", "y&(x|x')", "T", "1"),
    (("0", "T'"), ("T'", "y'|(x&x')"), ("T'", "a'"), ("T'", "x|(y&y')"),
     ("y'|(x&x')", "y'|a'"), ("a'", "y'|a'"), ("a'", "x|a'"), ("x|(y&y')", "x|a'"),
     ("a'", "x'&y"), ("y'|a'", "y'|x"), ("x|a'", "y'|x"),
     ("y'|a'", "x'&a"), ("x'&y", "x'&a"), ("x'&y", "y&a"), ("x|a'", "y&a"),
     ("y'|x", "a"), ("x'&a", "a"), ("y&a", "a"),
     ("x'&a", "x'&(y|y')"), ("y&a", "y&(x|x')"),
     ("x'&(y|y')", "T"), ("a", "T"), ("y&(x|x')", "T"), ("T", "1")),
    (("0", "1"), ("T'", "T"), ("y'|(x&x')", "y&(x|x')"), ("x|(y&y')", "x'&(y|y')"),
     ("a", "a'"), ("x'&a", "x|a'"), ("y&a", "y'|a'"), ("x'&y", "y'|x")),
    {"PKL": True, "SPO": False},
    theta=(("x'&y", "a'"), ("y'|x", "a"), ("x'&a", "y'|a'"), ("y&a", "x|a'"),
           ("0", "T'"), ("T", "1")),
    quotient="B10",
    description="a' = (x'&y)&(y'|x), T = (x|x')&(y|y')",
))


def names() -> list[str]:
    return list(_ENTRIES)


def entry(name: str) -> CatalogEntry:
    try:
        return _ENTRIES[name]
    except KeyError:
        raise UnknownName(name) from None


def catalog_get(name: str) -> InvolutivePoset:
    """The named structure, validated (lattice entries come back as lattices)."""
    return entry(name).build()


def theta_of(name: str):
    """Class map of the entry's stored congruence as a list of block ids."""
    e = entry(name)
    if e.theta is None:
        raise UnknownName(f"{name} has no stored congruence")
    p = e.build()
    cls = list(range(p.n))
    for block in e.theta:
        ids = [p.index(s) for s in block]
        for i in ids:
            cls[i] = min(ids)
    return cls
