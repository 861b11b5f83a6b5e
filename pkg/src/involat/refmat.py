"""Partial three-valued propositions over a finite unsharp orthogonal poset.

Every Kleene sublattice K_i contributes its prime filters as evaluation
points.  An element a becomes the proposition (𝔽_a, f_a): its domain is the
set of prime filters of the sublattices containing a, and f_a(F) is 1, 0
or ½ according to whether a, a′ or neither/both lie in F.  Truth values
are stored as integers 0, 1, 2 standing for 0, ½, 1, so the Kleene join is
``max`` and negation is ``2 - v``.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Optional, Sequence, Union

from .canon import find_orthoisomorphism
from .classify import is_distributive, is_uop
from .core import InvolutivePoset, TRUE, Verdict, validate
from .errors import BudgetExceeded, NotDistributive, ParseError, StructureError
from .subalg import is_tame, members_of

ZERO, HALF, ONE = 0, 1, 2
VALUE_NAMES = {ZERO: "0", HALF: "1/2", ONE: "1"}

DEFAULT_SUBLATTICE_CAP = 1 << 14
DEFAULT_ASSIGNMENT_CAP = 1 << 16


# -- prime filters -------------------------------------------------------------

def prime_filters(K: InvolutivePoset) -> list[frozenset[int]]:
    """All proper nonempty prime lattice-filters of a distributive lattice.

    In a finite distributive lattice these are the principal filters ↑j
    of the join-irreducible elements j.
    """
    v = is_distributive(K)
    if not v:
        raise NotDistributive("prime filters need a distributive lattice", v.witness)
    out = []
    for j in range(K.n):
        lower = [x for x in range(K.n) if K.lt(x, j)]
        if j == K.bottom:
            continue
        # join-irreducible: exactly one lower cover
        maxima = [x for x in lower if not any(K.lt(x, y) for y in lower)]
        if len(maxima) == 1:
            out.append(frozenset(K.up(j)))
    return sorted(out, key=lambda F: (len(F), sorted(F)))


def is_prime_filter(K: InvolutivePoset, F: Iterable[int]) -> bool:
    """Direct check of the definition, used as an oracle."""
    F = set(F)
    if not F or len(F) == K.n:
        return False
    for x in range(K.n):
        for y in range(K.n):
            m, j = K.partial_meet(x, y), K.partial_join(x, y)
            if (x in F and y in F) != (m in F):
                return False
            if (j in F) != (x in F or y in F):
                return False
    return True


# -- Kleene sublattices ----------------------------------------------------------

def _closure(A: InvolutivePoset, mask: int, new: Iterable[int]) -> Optional[int]:
    """Close under ′ and the partial ∧, ∨ of A; None if some pair has no
    meet or join in A."""
    J, M, inv = A.join_table, A.meet_table, A.inv
    todo = list(new)
    for x in todo:
        mask |= 1 << x
    while todo:
        a = todo.pop()
        cands = [inv[a]]
        for b in members_of(mask):
            if J[a][b] is None or M[a][b] is None:
                return None
            cands += [J[a][b], M[a][b]]
        for c in cands:
            if not mask >> c & 1:
                mask |= 1 << c
                todo.append(c)
    return mask


def _is_distributive_subset(A: InvolutivePoset, mask: int) -> bool:
    J, M = A.join_table, A.meet_table
    xs = members_of(mask)
    for x in xs:
        for y in xs:
            for z in xs:
                if M[x][J[y][z]] != J[M[x][y]][M[x][z]]:
                    return False
    return True


def kleene_sublattices(A: InvolutivePoset, cap: int = DEFAULT_SUBLATTICE_CAP) -> list[list[int]]:
    """All subsets containing 0 and 1, closed under ′ and under the meets
    and joins of A, that are distributive.  Smallest first."""
    key = ("kleene_sublattices", cap)
    if key in A._cache:
        return A._cache[key]
    start = _closure(A, 0, [A.bottom, A.top])
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for a in range(A.n):
                if m >> a & 1:
                    continue
                s = _closure(A, m, [a])
                if s is None or s in seen or not _is_distributive_subset(A, s):
                    continue
                seen.add(s)
                if len(seen) > cap:
                    raise BudgetExceeded(f"more than {cap} Kleene sublattices")
                nxt.append(s)
        frontier = nxt
    out = [members_of(m) for m in sorted(seen, key=lambda m: (bin(m).count("1"), m))]
    A._cache[key] = out
    return out


# -- matrices --------------------------------------------------------------------

@dataclass(frozen=True)
class PrimeFilterIndex:
    """A prime filter of the sublattice with id ``sub``; ``members`` are
    indices of the ambient structure."""

    sub: int
    members: frozenset

    def describe(self, A: Optional[InvolutivePoset] = None) -> str:
        names = sorted(self.members) if A is None else sorted(A.name(x) for x in self.members)
        return f"K{self.sub}:{{{','.join(map(str, names))}}}"


@dataclass(frozen=True)
class RefProposition:
    """A partial three-valued map: ``values[i]`` for each index i in ``domain``."""

    domain: frozenset
    values: tuple  # sorted (index, value) pairs
    source: Optional[int] = field(default=None, compare=False)

    @classmethod
    def make(cls, values: dict, source=None) -> "RefProposition":
        return cls(frozenset(values), tuple(sorted(values.items(), key=lambda kv: repr(kv[0]))), source)

    @cached_property
    def f(self) -> dict:
        return dict(self.values)

    def neg(self) -> "RefProposition":
        return RefProposition.make({i: 2 - v for i, v in self.values})


class RefMatrix:
    """Carrier of propositions with commeasurability, partial join,
    negation, the constants and designated sets.

    Propositions are referred to by their position in ``carrier``.
    ``join_table[p][q]`` is the position of p ⊔ q, or None where p and q are
    not commeasurable.
    """

    def __init__(self, index: Sequence[Hashable], carrier: Sequence[RefProposition],
                 comm, join_table, neg: Sequence[int], zero: int, one: int,
                 source: Optional[InvolutivePoset] = None, names: Optional[Sequence[str]] = None):
        self.index = list(index)
        self.carrier = list(carrier)
        self.comm = [list(map(bool, r)) for r in comm]
        self.join_table = [list(r) for r in join_table]
        self.neg = list(neg)
        self.zero = zero
        self.one = one
        self.source = source
        self.names = list(names) if names is not None else [str(i) for i in range(len(carrier))]

    def __len__(self):
        return len(self.carrier)

    def join(self, p: int, q: int) -> Optional[int]:
        return self.join_table[p][q]

    def designated(self, i) -> set[int]:
        """D_i: propositions defined at i with value 1."""
        return {p for p, P in enumerate(self.carrier) if i in P.domain and P.f[i] == ONE}

    @cached_property
    def _designated(self) -> dict:
        return {i: self.designated(i) for i in self.index}

    def name(self, p: int) -> str:
        return self.names[p]


def _proposition(A: InvolutivePoset, a: int, filters: list[PrimeFilterIndex], subs: list[list[int]]) -> RefProposition:
    vals = {}
    ap = A.inv[a]
    for k, F in enumerate(filters):
        if a in subs[F.sub]:
            ina, inap = a in F.members, ap in F.members
            vals[k] = ONE if ina and not inap else ZERO if inap and not ina else HALF
    return RefProposition.make(vals, a)


def build_refmat(A: InvolutivePoset, cap: int = DEFAULT_SUBLATTICE_CAP) -> RefMatrix:
    """The matrix of propositions (𝔽_a, f_a), one per element a of A.

    Filters are numbered in order of (sublattice id, filter), and
    proposition p is the image of element p.
    """
    v = is_uop(A)
    if not v:
        raise StructureError(f"not an unsharp orthogonal poset ({v.note})", v.witness)
    subs = kleene_sublattices(A, cap)
    filters = []
    for i, S in enumerate(subs):
        K = A.restrict(S)
        for F in prime_filters(K):
            filters.append(PrimeFilterIndex(i, frozenset(S[x] for x in F)))
    carrier = [_proposition(A, a, filters, subs) for a in range(A.n)]
    n = A.n
    comm = [[bool(carrier[a].domain & carrier[b].domain) for b in range(n)] for a in range(n)]
    J = A.join_table
    join = [[J[a][b] if comm[a][b] else None for b in range(n)] for a in range(n)]
    M = RefMatrix(range(len(filters)), carrier, comm, join, list(A.inv), A.bottom, A.top,
                  source=A, names=[A.name(a) for a in range(n)])
    M.filters = filters
    M.sublattices = subs
    return M


def precsim(M: RefMatrix, p: int, q: int) -> bool:
    """Domains meet and the value of p is at most that of q on the overlap."""
    P, Q = M.carrier[p], M.carrier[q]
    common = P.domain & Q.domain
    return bool(common) and all(P.f[i] <= Q.f[i] for i in common)


def _precsim_matrix(M: RefMatrix) -> list[list[bool]]:
    n = len(M)
    return [[precsim(M, p, q) for q in range(n)] for p in range(n)]


# -- matrix axioms -------------------------------------------------------------------

def _kleene_generated(M: RefMatrix, p: int, q: int) -> bool:
    """Polynomials in p, q are mutually commeasurable and form a Kleene lattice."""
    S = {p, q, M.zero, M.one}
    todo = list(S)
    while todo:
        a = todo.pop()
        cands = [M.neg[a]]
        for b in list(S):
            if not M.comm[a][b]:
                return False
            cands.append(M.join(a, b))
        for c in cands:
            if c not in S:
                S.add(c)
                todo.append(c)
    xs = sorted(S)
    j = M.join
    m = lambda a, b: M.neg[j(M.neg[a], M.neg[b])]
    for a in xs:
        if j(a, a) != a or j(a, M.zero) != a or j(a, M.one) != M.one:
            return False
        for b in xs:
            if j(a, b) != j(b, a) or j(a, m(a, b)) != a:
                return False
            if m(j(a, M.neg[a]), j(b, M.neg[b])) != j(b, M.neg[b]) and \
                    j(m(a, M.neg[a]), j(b, M.neg[b])) != j(b, M.neg[b]):
                return False
            for c in xs:
                if j(a, j(b, c)) != j(j(a, b), c):
                    return False
                if m(a, j(b, c)) != j(m(a, b), m(a, c)):
                    return False
    return True


def check_matrix_axioms(M: RefMatrix) -> dict[str, Verdict]:
    """Evaluate the defining clauses of a paraconsistent partial referential
    matrix; keys name the clauses, witnesses are proposition positions."""
    n = len(M)
    C = M.carrier
    out: dict[str, Verdict] = {}

    def first(key, cond, pairs):
        for w in pairs:
            if not cond(*w):
                out[key] = Verdict(False, w)
                return
        out[key] = TRUE

    pairs = list(itertools.product(range(n), repeat=2))
    first("comm_reflexive", lambda p: M.comm[p][p], [(p,) for p in range(n)])
    first("comm_symmetric", lambda p, q: M.comm[p][q] == M.comm[q][p], pairs)
    first("comm_overlap", lambda p, q: not M.comm[p][q] or bool(C[p].domain & C[q].domain), pairs)
    I = frozenset(M.index)
    first("constants", lambda: C[M.one].domain == I and all(v == ONE for _, v in C[M.one].values)
          and C[M.zero].domain == I and all(v == ZERO for _, v in C[M.zero].values), [()])
    first("negation", lambda p: C[M.neg[p]] == C[p].neg(), [(p,) for p in range(n)])

    def join_unique(p, q):
        if not M.comm[p][q]:
            return M.join(p, q) is None
        common = C[p].domain & C[q].domain
        fits = [z for z in range(n) if common <= C[z].domain
                and all(C[z].f[i] == max(C[p].f[i], C[q].f[i]) for i in common)]
        return len({C[z] for z in fits}) == 1 and M.join(p, q) in fits

    first("join_unique", join_unique, pairs)
    first("kleene_generated", lambda p, q: not M.comm[p][q] or _kleene_generated(M, p, q), pairs)
    return out


def embedding_injective(M: RefMatrix) -> Verdict:
    """Distinct carrier positions carry distinct propositions."""
    seen: dict = {}
    for p, P in enumerate(M.carrier):
        if P in seen:
            return Verdict(False, (seen[P], p))
        seen[P] = p
    return TRUE


@dataclass
class RepresentationReport:
    forward: Verdict  # precsim ⇒ ≤
    tame: bool
    converse: Verdict  # ≤ ⇒ precsim
    transitive: Verdict
    antisymmetric: Verdict
    injective: Verdict
    isomorphism: Optional[list[int]]  # a ↦ its proposition, when S(Ā) is a poset

    @property
    def holds(self) -> bool:
        base = bool(self.forward and self.injective)
        if self.tame:
            return base and bool(self.converse and self.transitive) and self.isomorphism is not None
        return base


def representation_poset(M: RefMatrix) -> InvolutivePoset:
    """S(Ā): the carrier ordered by ≾ with negation and constants.
    Raises a validation error when ≾ is not a partial order."""
    return validate(_precsim_matrix(M), M.neg, M.zero, M.one, M.names)


def representation_check(A: InvolutivePoset, M: Optional[RefMatrix] = None) -> RepresentationReport:
    M = M or build_refmat(A)
    P = _precsim_matrix(M)
    n = A.n

    def scan(cond, arity=2):
        for w in itertools.product(range(n), repeat=arity):
            if not cond(*w):
                return Verdict(False, w)
        return TRUE

    forward = scan(lambda a, b: not P[a][b] or A.le(a, b))
    converse = scan(lambda a, b: not A.le(a, b) or P[a][b])
    trans = scan(lambda a, b, c: not (P[a][b] and P[b][c]) or P[a][c], 3)
    anti = scan(lambda a, b: not (P[a][b] and P[b][a]) or a == b)
    iso = None
    if trans and anti and all(P[a][a] for a in range(n)):
        S = representation_poset(M)
        f = find_orthoisomorphism(A, S)
        ident = list(range(n))
        if f is not None and all(P[a][b] == A.le(a, b) for a in range(n) for b in range(n)):
            iso = ident
    try:
        tame = bool(is_tame(A))
    except StructureError:
        tame = False
    return RepresentationReport(forward, tame, converse, trans, anti, embedding_injective(M), iso)


# -- formulas -------------------------------------------------------------------------

Formula = tuple  # ("var", name) | ("const", 0|1) | ("neg", f) | ("or", f, g)


def var(name: str) -> Formula:
    return ("var", name)


def neg(f: Formula) -> Formula:
    return ("neg", f)


def lor(f: Formula, g: Formula) -> Formula:
    return ("or", f, g)


TOP: Formula = ("const", 1)
BOTTOM: Formula = ("const", 0)

_TOKEN = re.compile(r"\s*(?:(or|neg)\s*\(|([A-Za-z_][A-Za-z0-9_]*)|([01])|([(),]))")


def parse_formula(text: str) -> Formula:
    """Prefix syntax: ``or(f,g)``, ``neg(f)``, ``0``, ``1`` and identifiers."""
    pos = 0

    def expect(ch):
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text) or text[pos] != ch:
            raise ParseError(f"expected {ch!r} at column {pos + 1} in {text!r}", 1)
        pos += 1

    def term() -> Formula:
        nonlocal pos
        mt = _TOKEN.match(text, pos)
        if not mt or mt.group(4):
            raise ParseError(f"unexpected input at column {pos + 1} in {text!r}", 1)
        pos = mt.end()
        if mt.group(1) == "or":
            a = term()
            expect(",")
            b = term()
            expect(")")
            return ("or", a, b)
        if mt.group(1) == "neg":
            a = term()
            expect(")")
            return ("neg", a)
        if mt.group(3):
            return ("const", int(mt.group(3)))
        return ("var", mt.group(2))

    f = term()
    if text[pos:].strip():
        raise ParseError(f"trailing input {text[pos:]!r}", 1)
    return f


def format_formula(f: Formula) -> str:
    tag = f[0]
    if tag == "var":
        return f[1]
    if tag == "const":
        return str(f[1])
    if tag == "neg":
        return f"neg({format_formula(f[1])})"
    return f"or({format_formula(f[1])},{format_formula(f[2])})"


def variables(f: Union[Formula, Iterable[Formula]]) -> set[str]:
    """V(φ), or the union over a collection of formulas."""
    if isinstance(f, tuple) and f and isinstance(f[0], str):
        tag = f[0]
        if tag == "var":
            return {f[1]}
        if tag == "const":
            return set()
        return set().union(*(variables(g) for g in f[1:]))
    return set().union(*(variables(g) for g in f))


def substitute(f: Formula, sigma: dict) -> Formula:
    tag = f[0]
    if tag == "var":
        return sigma.get(f[1], f)
    if tag == "const":
        return f
    return (tag,) + tuple(substitute(g, sigma) for g in f[1:])


# -- partial homomorphisms and entailment ------------------------------------------

def extend_partial_hom(M: RefMatrix, assignment: dict, f: Formula) -> Optional[int]:
    """Value of the unique partial homomorphism extending ``assignment``
    at ``f``; None when ``f`` is outside its domain.  The constant 0 goes
    to 𝕆, which is ¬𝕀."""
    tag = f[0]
    if tag == "var":
        return assignment[f[1]]
    if tag == "const":
        return M.one if f[1] else M.zero
    if tag == "neg":
        v = extend_partial_hom(M, assignment, f[1])
        return None if v is None else M.neg[v]
    a = extend_partial_hom(M, assignment, f[1])
    if a is None:
        return None
    b = extend_partial_hom(M, assignment, f[2])
    if b is None or not M.comm[a][b]:
        return None
    return M.join(a, b)


def _assignments(M: RefMatrix, names: Sequence[str], cap: int):
    total = len(M) ** len(names)
    if total > cap:
        raise BudgetExceeded(f"{total} assignments exceed the cap of {cap}")
    for vals in itertools.product(range(len(M)), repeat=len(names)):
        yield dict(zip(names, vals))


def entailment_counterexample(M: RefMatrix, gamma: Sequence[Formula], phi: Formula,
                              cap: int = DEFAULT_ASSIGNMENT_CAP) -> Optional[tuple[dict, Hashable]]:
    """First (assignment, index) where all of Γ is designated and φ is not."""
    names = sorted(variables(list(gamma) + [phi]))
    D = M._designated
    for h in _assignments(M, names, cap):
        gv = [extend_partial_hom(M, h, g) for g in gamma]
        if any(v is None for v in gv):
            continue
        pv = extend_partial_hom(M, h, phi)
        for i in M.index:
            if all(v in D[i] for v in gv) and (pv is None or pv not in D[i]):
                return h, i
    return None


def entails(M: RefMatrix, gamma: Sequence[Formula], phi: Formula, cap: int = DEFAULT_ASSIGNMENT_CAP) -> bool:
    return entailment_counterexample(M, gamma, phi, cap) is None


def entails_structural(M: RefMatrix, gamma: Sequence[Formula], phi: Formula,
                       cap: int = DEFAULT_ASSIGNMENT_CAP) -> bool:
    """Entailment that also requires V(φ) ⊆ V(Γ)."""
    return variables(phi) <= variables(list(gamma)) and entails(M, gamma, phi, cap)


# -- the two-state example -------------------------------------------------------------

def two_state_matrix() -> RefMatrix:
    """Five propositions over the indices r, s: 𝕀, 𝕆, a and ¬a defined at r
    only (values 1 and 0), and b defined at s only with value ½.  Joins are
    defined on overlapping domains as listed: 𝕀 absorbs, 𝕆 is neutral,
    a ⊔ ¬a = 𝕀, and p ⊔ p = p."""
    I1 = RefProposition.make({"r": ONE, "s": ONE})
    O0 = RefProposition.make({"r": ZERO, "s": ZERO})
    a = RefProposition.make({"r": ONE})
    na = RefProposition.make({"r": ZERO})
    b = RefProposition.make({"s": HALF})
    carrier = [I1, O0, a, na, b]
    one, zero, A, NA, B = range(5)
    n = 5
    comm = [[bool(carrier[p].domain & carrier[q].domain) for q in range(n)] for p in range(n)]
    join = [[None] * n for _ in range(n)]
    for p in range(n):
        for q in range(n):
            if not comm[p][q]:
                continue
            if one in (p, q):
                join[p][q] = one
            elif q == zero:
                join[p][q] = p
            elif p == zero:
                join[p][q] = q
            elif {p, q} == {A, NA}:
                join[p][q] = one
            elif p == q:
                join[p][q] = p
    neg = [zero, one, NA, A, B]
    return RefMatrix(["r", "s"], carrier, comm, join, neg, zero, one,
                     names=["I", "O", "a", "not_a", "b"])


# -- random formulas for property checks ------------------------------------------------

def random_formula(rng: random.Random, names: Sequence[str], depth: int = 3) -> Formula:
    if depth == 0 or rng.random() < 0.3:
        if rng.random() < 0.1:
            return ("const", rng.randint(0, 1))
        return ("var", rng.choice(list(names)))
    if rng.random() < 0.35:
        return ("neg", random_formula(rng, names, depth - 1))
    return ("or", random_formula(rng, names, depth - 1), random_formula(rng, names, depth - 1))


def substitution_trial(M: RefMatrix, rng: random.Random, names=("x", "y", "z"),
                       max_vars: int = 3) -> Optional[tuple]:
    """One random check that Γ ⊢* φ implies σΓ ⊢* σφ.

    Returns (Γ, φ, σ) when the implication fails, else None.  The
    substitution only uses variables from ``names`` so that at most
    ``max_vars`` variables need to be enumerated.
    """
    gamma = [random_formula(rng, names[:max_vars], 2) for _ in range(rng.randint(1, 2))]
    phi = random_formula(rng, sorted(variables(gamma)) or names[:1], 2)
    if not entails_structural(M, gamma, phi):
        return None
    sigma = {v: random_formula(rng, names[:max_vars], 2) for v in variables(gamma)}
    g2 = [substitute(g, sigma) for g in gamma]
    p2 = substitute(phi, sigma)
    if not entails_structural(M, g2, p2):
        return gamma, phi, sigma
    return None
