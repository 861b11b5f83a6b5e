import random
from fractions import Fraction

import numpy as np
import pytest

from involat.errors import DimensionMismatch, ParseError
from involat.spectral import (
    RationalSubspace, canonical_leq, emit_effect, from_eigen, has_01_thresholds, identity_effect,
    is_psd, is_sharp_effect, orthocomplement, parse_effect, parse_effects, projection_effect,
    random_effect, random_subspace, rref, spectral_complement, spectral_join, spectral_leq,
    spectral_meet, subspace_intersect, subspace_sum, to_operator, zero_effect,
)

half = Fraction(1, 2)


def _op(A):
    return np.array([[float(v) for v in row] for row in to_operator(A)])


def _numeric_leq(A, B, tol=1e-9):
    """A ≤s B from floating eigendecompositions: every spectral projection
    of B at λ has range inside the one of A."""
    wa, va = np.linalg.eigh(_op(A))
    wb, vb = np.linalg.eigh(_op(B))

    def proj(w, v, lam):
        cols = v[:, w <= lam + tol]
        return cols @ cols.T

    for lam in np.concatenate([wa, wb]):
        Pa, Pb = proj(wa, va, lam), proj(wb, vb, lam)
        if not np.allclose(Pa @ Pb, Pb, atol=1e-7):
            return False
    return True


def _samples(n, d, seed):
    rng = random.Random(seed)
    return [(random_effect(rng, d), random_effect(rng, d)) for _ in range(n)]


def test_rref_is_canonical():
    a = rref([[2, 4, 0], [1, 2, 1]], 3)
    b = rref([[1, 2, 1], [0, 0, 5], [3, 6, 3]], 3)
    assert a == b and len(a) == 2


def test_subspace_lattice_basics():
    e1 = RationalSubspace.span(3, [[1, 0, 0]])
    e2 = RationalSubspace.span(3, [[0, 1, 0]])
    assert subspace_sum(e1, e2) == RationalSubspace.span(3, [[1, 0, 0], [0, 1, 0]])
    rng = random.Random(3)
    for _ in range(100):
        V, W = random_subspace(rng, 3), random_subspace(rng, 3)
        assert subspace_intersect(V, orthocomplement(V)).rank == 0
        assert orthocomplement(subspace_intersect(V, W)) == subspace_sum(orthocomplement(V), orthocomplement(W))
    with pytest.raises(DimensionMismatch):
        subspace_sum(e1, RationalSubspace.span(2, [[1, 0]]))


def test_projection_matrix_is_idempotent():
    rng = random.Random(5)
    for _ in range(30):
        V = random_subspace(rng, 3)
        P = np.array(V.projection_matrix(), dtype=object)
        assert (P.dot(P) == P).all()
        assert to_operator(projection_effect(V)) == V.projection_matrix()


def test_order_basics():
    Z = zero_effect(3)
    for A, B in _samples(50, 3, 1):
        assert spectral_leq(A, A)
        assert spectral_leq(Z, A)
        assert canonical_leq(Z, A)
        assert spectral_join(A, A) == A


@pytest.mark.parametrize("d", [2, 3])
def test_spectral_leq_matches_numeric_oracle(d):
    for A, B in _samples(150, d, 11 + d):
        for X, Y in ((A, B), (spectral_meet(A, B), A), (A, spectral_join(A, B))):
            assert spectral_leq(X, Y) == _numeric_leq(X, Y)


def test_projection_order_is_range_inclusion():
    rng = random.Random(9)
    for _ in range(100):
        V, W = random_subspace(rng, 3), random_subspace(rng, 3)
        assert spectral_leq(projection_effect(V), projection_effect(W)) == W.contains(V)
        PV, PW = projection_effect(V), projection_effect(W)
        assert spectral_join(PV, PW) == projection_effect(subspace_sum(V, W))
        assert spectral_meet(PV, PW) == projection_effect(subspace_intersect(V, W))
        assert spectral_complement(PV) == projection_effect(orthocomplement(V))


@pytest.mark.parametrize("d", [2, 3])
def test_lattice_identities(d):
    for A, B in _samples(250, d, 20 + d):
        J, M = spectral_join(A, B), spectral_meet(A, B)
        assert spectral_join(A, M) == A and spectral_meet(A, J) == A
        assert spectral_leq(A, J) and spectral_leq(B, J)
        assert spectral_leq(M, A) and spectral_leq(M, B)
        assert spectral_complement(spectral_complement(A)) == A


def test_join_is_least_upper_bound():
    rng = random.Random(4)
    for _ in range(200):
        A, B, C = (random_effect(rng, 2) for _ in range(3))
        if spectral_leq(A, C) and spectral_leq(B, C):
            assert spectral_leq(spectral_join(A, B), C)


def test_complement_bounds():
    for d in (1, 2, 3):
        assert spectral_complement(zero_effect(d)) == identity_effect(d)
        assert spectral_complement(identity_effect(d)) == zero_effect(d)


def test_complement_is_one_minus_operator():
    for A, _ in _samples(60, 3, 8):
        op = to_operator(A)
        comp = to_operator(spectral_complement(A))
        assert all(comp[i][j] == int(i == j) - op[i][j] for i in range(3) for j in range(3))


def test_sharp_effects():
    rng = random.Random(2)
    for _ in range(30):
        assert is_sharp_effect(projection_effect(random_subspace(rng, 3)))
    assert is_sharp_effect(identity_effect(2))
    assert not is_sharp_effect(from_eigen(2, [(half, [[1, 0]]), (1, [[0, 1]])]))
    for A, _ in _samples(100, 3, 6):
        assert is_sharp_effect(A) == has_01_thresholds(A)


def test_canonical_order_does_not_imply_spectral():
    A = from_eigen(2, [(0, [[1, -1]]), (Fraction(1, 3), [[1, 1]])])
    B = from_eigen(2, [(1, [[1, 0]]), (Fraction(1, 4), [[0, 1]])])
    assert canonical_leq(A, B)
    assert np.linalg.eigvalsh(_op(B) - _op(A)).min() > -1e-12
    assert not spectral_leq(A, B)
    assert not _numeric_leq(A, B)


def test_spectral_implies_canonical():
    for A, B in _samples(200, 3, 31):
        if spectral_leq(A, B):
            assert canonical_leq(A, B)


def test_psd_by_minors_matches_eigenvalues():
    rng = random.Random(12)
    for _ in range(100):
        A, B = random_effect(rng, 3), random_effect(rng, 3)
        D = [[b - a for a, b in zip(ra, rb)] for ra, rb in zip(to_operator(A), to_operator(B))]
        num = np.linalg.eigvalsh(np.array(D, dtype=float)).min()
        if abs(num) > 1e-9:
            assert is_psd(D) == (num > 0)


def test_text_round_trip():
    for A, B in _samples(20, 3, 0):
        assert parse_effect(emit_effect(A)) == A
        assert parse_effects(emit_effect(A) + emit_effect(B)) == [A, B]
    with pytest.raises(ParseError):
        parse_effect("effect 2 1\n1 ; 1 0\n")
    with pytest.raises(ParseError):
        parse_effect("effect 2 2\n0 ; 1 0\n")
    with pytest.raises(ParseError):
        parse_effect("effect 2 1\n1/0 ; 1 0 ; 0 1\n")
