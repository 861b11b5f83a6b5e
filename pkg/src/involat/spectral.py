"""Exact model of effects on ℚ^d under the spectral order.

An effect is stored as its spectral family: a finite list of thresholds
λ_1 < ... < λ_k in [0, 1] with nested subspaces V_1 ⊂ ... ⊂ V_k = ℚ^d,
meaning the family equals the projection onto V_i for λ_i ≤ λ < λ_{i+1},
is 0 below λ_1 and the identity from λ_k on.  All arithmetic uses
:class:`fractions.Fraction`, so every lattice identity is decided exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, ParseError

Row = tuple[Fraction, ...]


# -- rational linear algebra ------------------------------------------------

def rref(rows: Iterable[Sequence], d: int) -> tuple[Row, ...]:
    """Reduced row echelon form, zero rows dropped."""
    m = [[Fraction(v) for v in r] for r in rows]
    for r in m:
        if len(r) != d:
            raise DimensionMismatch(f"row of length {len(r)} in dimension {d}")
    out = []
    col = 0
    for col in range(d):
        piv = next((i for i in range(len(out), len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        r = len(out)
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        m[r] = [v / p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        out.append(r)
    return tuple(tuple(m[i]) for i in range(len(out)))


def nullspace(rows: Sequence[Row], d: int) -> list[list[Fraction]]:
    """Basis of {v : r·v = 0 for every row r}."""
    R = rref(rows, d)
    pivots = [next(c for c in range(d) if r[c] != 0) for r in R]
    free = [c for c in range(d) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * d
        v[f] = Fraction(1)
        for r, pc in zip(R, pivots):
            v[pc] = -r[f]
        basis.append(v)
    return basis


def det(M: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant by fraction-exact elimination."""
    a = [list(map(Fraction, r)) for r in M]
    n = len(a)
    out = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            out = -out
        out *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return out


def _matmul(A, B):
    return [[sum((A[i][k] * B[k][j] for k in range(len(B))), Fraction(0)) for j in range(len(B[0]))]
            for i in range(len(A))]


def _inverse(M):
    n = len(M)
    aug = [list(map(Fraction, r)) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(M)]
    R = rref(aug, 2 * n)
    return [list(r[n:]) for r in R]


@dataclass(frozen=True)
class RationalSubspace:
    """Subspace of ℚ^d given by the reduced echelon basis of its row span."""

    d: int
    basis: tuple[Row, ...]

    @classmethod
    def span(cls, d: int, rows: Iterable[Sequence]) -> "RationalSubspace":
        return cls(d, rref(rows, d))

    @classmethod
    def zero(cls, d: int) -> "RationalSubspace":
        return cls(d, ())

    @classmethod
    def full(cls, d: int) -> "RationalSubspace":
        return cls.span(d, [[int(i == j) for j in range(d)] for i in range(d)])

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, other: "RationalSubspace") -> bool:
        _check(self, other)
        return subspace_sum(self, other).rank == self.rank

    def projection_matrix(self) -> list[list[Fraction]]:
        """Orthogonal projection onto the subspace: Bᵀ(BBᵀ)⁻¹B."""
        d = self.d
        if not self.basis:
            return [[Fraction(0)] * d for _ in range(d)]
        B = [list(r) for r in self.basis]
        Bt = [list(c) for c in zip(*B)]
        return _matmul(_matmul(Bt, _inverse(_matmul(B, Bt))), B)

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(str(v) for v in r) for r in self.basis)
        return f"RationalSubspace(d={self.d}, [{rows}])"


def _check(*vs):
    ds = {v.d for v in vs}
    if len(ds) != 1:
        raise DimensionMismatch(f"dimensions {sorted(ds)} do not match")


def subspace_sum(V: RationalSubspace, W: RationalSubspace) -> RationalSubspace:
    _check(V, W)
    return RationalSubspace(V.d, rref(V.basis + W.basis, V.d))


def subspace_intersect(V: RationalSubspace, W: RationalSubspace) -> RationalSubspace:
    """Zassenhaus: echelonize [[V, V], [W, 0]]; rows with zero left half
    carry the intersection in their right half."""
    _check(V, W)
    d = V.d
    zero = (Fraction(0),) * d
    R = rref([v + v for v in V.basis] + [w + zero for w in W.basis], 2 * d)
    return RationalSubspace.span(d, [r[d:] for r in R if not any(r[:d])])


def orthocomplement(V: RationalSubspace) -> RationalSubspace:
    return RationalSubspace.span(V.d, nullspace(V.basis, V.d))


# -- effects ---------------------------------------------------------------------

@dataclass(frozen=True)
class SpectralEffect:
    d: int
    jumps: tuple[tuple[Fraction, RationalSubspace], ...]

    def __post_init__(self):
        prev_l, prev_r = None, -1
        if not self.jumps or self.jumps[-1][1].rank != self.d:
            raise ValueError("spectral family must end at the full space")
        for lam, V in self.jumps:
            if V.d != self.d:
                raise DimensionMismatch("jump subspace in wrong dimension")
            if not (0 <= lam <= 1):
                raise ValueError(f"threshold {lam} outside [0, 1]")
            if prev_l is not None and lam <= prev_l:
                raise ValueError("thresholds must increase strictly")
            if V.rank <= prev_r:
                raise ValueError("subspaces must increase strictly")
            prev_l, prev_r = lam, V.rank

    @property
    def thresholds(self) -> list[Fraction]:
        return [lam for lam, _ in self.jumps]

    def at(self, lam) -> RationalSubspace:
        """Value of the family at λ (right-continuous)."""
        out = RationalSubspace.zero(self.d)
        for t, V in self.jumps:
            if t <= lam:
                out = V
            else:
                break
        return out

    def left_limit(self, lam) -> RationalSubspace:
        """⋁_{μ<λ} of the family."""
        out = RationalSubspace.zero(self.d)
        for t, V in self.jumps:
            if t < lam:
                out = V
            else:
                break
        return out

    def __str__(self) -> str:
        return emit_effect(self)


def _canonical(d: int, points: Iterable[tuple[Fraction, RationalSubspace]]) -> SpectralEffect:
    """Keep only the points where the subspace changes."""
    out = []
    prev = RationalSubspace.zero(d)
    for lam, V in sorted(points, key=lambda p: p[0]):
        if V != prev:
            out.append((Fraction(lam), V))
            prev = V
    return SpectralEffect(d, tuple(out))


def from_eigen(d: int, spaces: Iterable[tuple]) -> SpectralEffect:
    """Effect with the given eigenvalues on mutually orthogonal eigenspaces,
    each spanned by a list of vectors; together they must span ℚ^d."""
    spaces = sorted(((Fraction(l), vs) for l, vs in spaces), key=lambda p: p[0])
    acc: list = []
    pts = []
    for lam, vs in spaces:
        acc = acc + [list(v) for v in vs]
        pts.append((lam, RationalSubspace.span(d, acc)))
    return _canonical(d, pts)


def zero_effect(d: int) -> SpectralEffect:
    return SpectralEffect(d, ((Fraction(0), RationalSubspace.full(d)),))


def identity_effect(d: int) -> SpectralEffect:
    return SpectralEffect(d, ((Fraction(1), RationalSubspace.full(d)),))


def projection_effect(R: RationalSubspace) -> SpectralEffect:
    """The projection onto R viewed as an effect."""
    return _canonical(R.d, [(Fraction(0), orthocomplement(R)), (Fraction(1), RationalSubspace.full(R.d))])


def _merged(A: SpectralEffect, B: SpectralEffect) -> list[Fraction]:
    _check(A, B)
    return sorted(set(A.thresholds) | set(B.thresholds))


def spectral_leq(A: SpectralEffect, B: SpectralEffect) -> bool:
    """A ≤s B iff B_λ ⊆ A_λ for all λ."""
    return all(A.at(t).contains(B.at(t)) for t in _merged(A, B))


def spectral_join(A: SpectralEffect, B: SpectralEffect) -> SpectralEffect:
    """(A∨B)_λ = A_λ ∩ B_λ."""
    return _canonical(A.d, [(t, subspace_intersect(A.at(t), B.at(t))) for t in _merged(A, B)])


def spectral_meet(A: SpectralEffect, B: SpectralEffect) -> SpectralEffect:
    """(A∧B)_λ = ⋀_{μ>λ}(A_μ + B_μ); for step families this is the value at λ."""
    return _canonical(A.d, [(t, subspace_sum(A.at(t), B.at(t))) for t in _merged(A, B)])


def spectral_complement(A: SpectralEffect) -> SpectralEffect:
    """I − A: its family at λ is the orthocomplement of ⋁_{μ<1−λ} A_μ."""
    pts = [1 - t for t in A.thresholds]
    return _canonical(A.d, [(t, orthocomplement(A.left_limit(1 - t))) for t in pts])


def to_operator(A: SpectralEffect) -> list[list[Fraction]]:
    """Σ λ_i (P_i − P_{i−1}) with P_i the projection onto V_i."""
    d = A.d
    out = [[Fraction(0)] * d for _ in range(d)]
    prev = [[Fraction(0)] * d for _ in range(d)]
    for lam, V in A.jumps:
        P = V.projection_matrix()
        for i in range(d):
            for j in range(d):
                out[i][j] += lam * (P[i][j] - prev[i][j])
        prev = P
    return out


def is_psd(M: Sequence[Sequence[Fraction]]) -> bool:
    """Symmetric M is positive semidefinite iff every principal minor is ≥ 0."""
    n = len(M)
    for k in range(1, n + 1):
        for idx in combinations(range(n), k):
            if det([[M[i][j] for j in idx] for i in idx]) < 0:
                return False
    return True


def canonical_leq(A: SpectralEffect, B: SpectralEffect) -> bool:
    """Tr(ρA) ≤ Tr(ρB) for all states, i.e. B − A is positive semidefinite."""
    _check(A, B)
    a, b = to_operator(A), to_operator(B)
    return is_psd([[b[i][j] - a[i][j] for j in range(A.d)] for i in range(A.d)])


def is_sharp_effect(A: SpectralEffect) -> bool:
    """A ∧s A′ is the zero effect."""
    return spectral_meet(A, spectral_complement(A)) == zero_effect(A.d)


def has_01_thresholds(A: SpectralEffect) -> bool:
    return set(A.thresholds) <= {0, 1}


# -- random generation --------------------------------------------------------

def random_vector(rng: random.Random, d: int, bound: int = 3) -> list[Fraction]:
    return [Fraction(rng.randint(-bound, bound)) for _ in range(d)]


def random_basis(rng: random.Random, d: int, bound: int = 3) -> list[list[Fraction]]:
    """Random basis of ℚ^d built by successive independent extension."""
    rows: list = []
    while len(rows) < d:
        v = random_vector(rng, d, bound)
        if len(rref(rows + [v], d)) == len(rows) + 1:
            rows.append(v)
    return rows


def random_subspace(rng: random.Random, d: int, bound: int = 3) -> RationalSubspace:
    k = rng.randint(0, d)
    return RationalSubspace.span(d, random_basis(rng, d, bound)[:k])


def random_threshold(rng: random.Random, max_den: int = 6) -> Fraction:
    q = rng.randint(1, max_den)
    return Fraction(rng.randint(0, q), q)


def random_effect(rng: random.Random, d: int, max_den: int = 6, bound: int = 3) -> SpectralEffect:
    """Random nested flag ending at ℚ^d with random increasing thresholds."""
    k = rng.randint(1, d)
    dims = sorted(rng.sample(range(1, d), k - 1)) + [d]
    basis = random_basis(rng, d, bound)
    lams: set = set()
    while len(lams) < k:
        lams.add(random_threshold(rng, max_den))
    return SpectralEffect(d, tuple((lam, RationalSubspace.span(d, basis[:m]))
                                   for lam, m in zip(sorted(lams), dims)))


# -- text format -------------------------------------------------------------------

def _frac(s: str, line: int) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {s!r}", line) from None


def emit_effect(A: SpectralEffect) -> str:
    lines = [f"effect {A.d} {len(A.jumps)}"]
    for lam, V in A.jumps:
        rows = " ; ".join(" ".join(str(v) for v in r) for r in V.basis)
        lines.append(f"{lam} ; {rows}")
    return "\n".join(lines) + "\n"


def parse_effects(text: str) -> list[SpectralEffect]:
    """Parse one or more effects in the ``effect d k`` format."""
    lines = [(i + 1, ln.split("#")[0].strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln]
    out = []
    k = 0
    while k < len(lines):
        no, head = lines[k]
        parts = head.split()
        if len(parts) != 3 or parts[0] != "effect":
            raise ParseError("expected 'effect d k'", no)
        try:
            d, cnt = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError("dimension and jump count must be integers", no) from None
        if cnt > len(lines) - k - 1:
            raise ParseError("missing jump lines", no)
        jumps = []
        for no2, ln in lines[k + 1:k + 1 + cnt]:
            fields = [f.strip() for f in ln.split(";")]
            lam = _frac(fields[0], no2)
            rows = [[_frac(t, no2) for t in f.split()] for f in fields[1:] if f]
            if any(len(r) != d for r in rows):
                raise ParseError(f"basis row length differs from {d}", no2)
            jumps.append((lam, RationalSubspace.span(d, rows)))
        try:
            out.append(SpectralEffect(d, tuple(jumps)))
        except (ValueError, DimensionMismatch) as e:
            raise ParseError(str(e), no) from None
        k += 1 + cnt
    return out


def parse_effect(text: str) -> SpectralEffect:
    effs = parse_effects(text)
    if len(effs) != 1:
        raise ParseError(f"expected one effect, found {len(effs)}", 1)
    return effs[0]


# -- identity suite ------------------------------------------------------------------

def verify_identities(samples: int, d: int, seed: int, rng: Optional[random.Random] = None) -> dict:
    """Run the exact identity checks on seeded random effects.

    Returns a mapping from check name to the first counterexample (a tuple of
    effects) or None.
    """
    rng = rng or random.Random(seed)
    leq, join, meet, neg = spectral_leq, spectral_join, spectral_meet, spectral_complement
    Z, I = zero_effect(d), identity_effect(d)
    found: dict[str, Optional[tuple]] = {k: None for k in (
        "involution", "de_morgan", "kleene", "bounds", "absorption", "order",
        "sp", "modular", "projection_closure", "sharp_thresholds", "canonical_implies_spectral")}

    def fail(key, *w):
        if found[key] is None:
            found[key] = w

    for _ in range(samples):
        A, B, C = (random_effect(rng, d) for _ in range(3))
        if neg(neg(A)) != A:
            fail("involution", A)
        if neg(join(A, B)) != meet(neg(A), neg(B)):
            fail("de_morgan", A, B)
        if not leq(meet(A, neg(A)), join(B, neg(B))):
            fail("kleene", A, B)
        if not (leq(Z, A) and leq(A, I)):
            fail("bounds", A)
        if join(A, meet(A, B)) != A or meet(A, join(A, B)) != A:
            fail("absorption", A, B)
        if not (leq(meet(A, B), A) and leq(A, join(A, B))):
            fail("order", A, B)
        lo, hi = meet(A, B), join(A, B)
        if join(lo, meet(neg(lo), hi)) != meet(join(lo, neg(lo)), hi):
            fail("sp", lo, hi)
        if meet(join(lo, C), hi) != join(lo, meet(C, hi)):
            fail("modular", lo, C, hi)
        P, Q = projection_effect(random_subspace(rng, d)), projection_effect(random_subspace(rng, d))
        for R in (join(P, Q), meet(P, Q), neg(P)):
            if not has_01_thresholds(R):
                fail("projection_closure", P, Q)
        if is_sharp_effect(A) != has_01_thresholds(A):
            fail("sharp_thresholds", A)
        if canonical_leq(A, B) and not leq(A, B):
            fail("canonical_implies_spectral", A, B)
    return found
