import random

import pytest

from involat.catalog import catalog_get, names
from involat.classify import classify
from involat.enumeration import models
from involat.errors import NotDistributive
from involat.refmat import (
    HALF, ONE, TOP, build_refmat, check_matrix_axioms, embedding_injective, entails,
    entails_structural, extend_partial_hom, format_formula, lor, neg, parse_formula,
    prime_filters, representation_check, substitute, substitution_trial, two_state_matrix, var,
    variables,
)
from involat.subalg import is_tame

x, y, u, v = var("x"), var("y"), var("u"), var("v")


def _brute_prime_filters(K):
    """Proper nonempty subsets closed upward and under ∧, with x∨y ∈ F
    forcing x ∈ F or y ∈ F; checked directly on all subsets."""
    out = []
    for bits in range(1, 1 << K.n):
        F = {i for i in range(K.n) if bits >> i & 1}
        if K.bottom in F:
            continue
        if any(K.le(a, b) and b not in F for a in F for b in range(K.n)):
            continue
        if any(K.m(a, b) not in F for a in F for b in F):
            continue
        if any(K.j(a, b) in F and a not in F and b not in F for a in range(K.n) for b in range(K.n)):
            continue
        out.append(frozenset(F))
    return out


def _kleene_models(upto):
    return [p for n in range(1, upto + 1) for p in models(n) if classify(p)["KL"]]


def test_prime_filters_small():
    K3 = catalog_get("K3")
    got = {frozenset(K3.name(i) for i in F) for F in prime_filters(K3)}
    assert got == {frozenset({"1"}), frozenset({"1", "h"})}
    B2 = catalog_get("B2")
    assert [set(F) for F in prime_filters(B2)] == [{B2.top}]
    with pytest.raises(NotDistributive):
        prime_filters(catalog_get("B6"))


def test_prime_filters_match_brute_force():
    for K in _kleene_models(8):
        if K.n == 1:
            continue
        assert set(map(frozenset, prime_filters(K))) == set(_brute_prime_filters(K))


def test_prime_filter_extension():
    # every proper filter avoiding a extends to a prime filter avoiding a
    for K in _kleene_models(8):
        if K.n == 1:
            continue
        primes = [frozenset(F) for F in prime_filters(K)]
        for bits in range(1, 1 << K.n):
            F = {i for i in range(K.n) if bits >> i & 1}
            if K.bottom in F:
                continue
            upward = all(b in F for a in F for b in range(K.n) if K.le(a, b))
            if not upward or any(K.m(a, b) not in F for a in F for b in F):
                continue
            for a in range(K.n):
                if a not in F:
                    assert any(F <= G and a not in G for G in primes)


def test_k3_matrix():
    K3 = catalog_get("K3")
    M = build_refmat(K3)
    assert len(M) == 3
    h = K3.index("h")
    own = [k for k, F in enumerate(M.filters) if h in M.sublattices[F.sub]]
    assert len(own) == 2 and all(M.carrier[h].f[k] == HALF for k in own)
    top = M.carrier[M.one]
    assert top.domain == frozenset(M.index) and set(top.f.values()) == {ONE}
    r = representation_check(K3, M)
    assert r.holds and r.isomorphism is not None


@pytest.mark.parametrize("name", names())
def test_catalog_matrices(name):
    A = catalog_get(name)
    M = build_refmat(A)
    assert embedding_injective(M)
    assert all(check_matrix_axioms(M).values())
    r = representation_check(A, M)
    assert r.forward and r.injective
    if is_tame(A):
        assert r.isomorphism is not None


def test_b8_pair_not_represented():
    B8 = catalog_get("B8")
    r = representation_check(B8)
    assert not r.converse
    a, b = r.converse.witness
    assert B8.le(a, b)


def test_one_point_structure_has_empty_matrix():
    p = models(1)[0]
    M = build_refmat(p)
    assert M.index == [] and M.carrier[0].domain == frozenset()
    assert representation_check(p, M).isomorphism is None


def test_representation_on_small_spo_models():
    for n in range(2, 7):
        for p in models(n):
            if classify(p)["SPO"]:
                r = representation_check(p)
                assert r.tame and r.isomorphism is not None


def test_excluded_middle_term():
    B = catalog_get("B")
    M = build_refmat(B)
    for a in range(B.n):
        got = extend_partial_hom(M, {"x": a}, lor(x, neg(x)))
        assert got == B.j(a, B.inv[a])
        assert extend_partial_hom(M, {"x": a}, TOP) == M.one


def test_two_state_matrix():
    M = two_state_matrix()
    I, O, a, na, b = range(5)
    h = {"x": a, "u": a, "v": b}
    assert extend_partial_hom(M, h, lor(lor(x, neg(x)), lor(u, v))) is None
    assert entails(M, [x], lor(lor(x, neg(x)), y))
    assert not entails(M, [x], lor(lor(x, neg(x)), lor(u, v)))
    axioms = check_matrix_axioms(M)
    assert not axioms["join_unique"]
    assert all(v for k, v in axioms.items() if k != "join_unique")


def test_entailment_basics():
    M = build_refmat(catalog_get("B"))
    for f in (x, lor(x, y), neg(lor(x, neg(y)))):
        assert entails_structural(M, [f, y], f)
    assert not entails_structural(M, [x], lor(x, y))


def test_formula_text():
    f = parse_formula("or(neg(x), or(y, 1))")
    assert f == lor(neg(x), lor(y, TOP))
    assert parse_formula(format_formula(f)) == f
    assert variables(f) == {"x", "y"}
    assert substitute(f, {"x": y}) == lor(neg(y), lor(y, TOP))
    with pytest.raises(ValueError):
        parse_formula("or(x")


@pytest.mark.parametrize("name", ["K3", "B6", "B8", "B", "Diamond", "FH"])
def test_substitution_invariance(name):
    M = build_refmat(catalog_get(name))
    assert len(M) <= 12
    rng = random.Random(len(name) * 101)
    for _ in range(20):
        assert substitution_trial(M, rng) is None
