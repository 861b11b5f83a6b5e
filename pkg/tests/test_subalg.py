import pytest

from involat.canon import find_orthoisomorphism, is_orthoisomorphism
from involat.catalog import catalog_get, entry, names, theta_of
from involat.classify import classify
from involat.subalg import (
    congruence_from_classes, congruences, forbidden_configuration, generated_subalgebra,
    is_congruence, is_tame, kleene_blocks, principal_congruence, quotient, subuniverses,
)


def _named(L, members):
    return {L.name(x) for x in members}


def _classes(name):
    out = {}
    for x, c in enumerate(theta_of(name)):
        out.setdefault(c, []).append(x)
    return list(out.values())


def test_generated_subalgebra():
    B8 = catalog_get("B8")
    assert len(generated_subalgebra(B8, [B8.index("x"), B8.index("y")])) == 8
    K3 = catalog_get("K3")
    assert generated_subalgebra(K3, [K3.index("h")]).members == [0, 1, 2]
    assert _named(B8, generated_subalgebra(B8, []).members) == {"0", "1"}


@pytest.mark.parametrize("name", ["K3", "B6", "B8", "B", "FH"])
def test_subuniverses_are_closed(name):
    L = catalog_get(name)
    for s in subuniverses(L):
        m = set(s.members)
        assert L.bottom in m and L.top in m
        for x in m:
            assert L.inv[x] in m
            for y in m:
                assert L.m(x, y) in m and L.j(x, y) in m


def test_kleene_blocks():
    K3 = catalog_get("K3")
    assert [b.members for b in kleene_blocks(K3)] == [[0, 1, 2]]
    B8 = catalog_get("B8")
    got = {frozenset(b.names()) for b in kleene_blocks(B8)}
    assert got == {frozenset({"0", "z'", "x", "x'", "z", "1"}), frozenset({"0", "z'", "y", "y'", "z", "1"})}
    B6 = catalog_get("B6")
    got = {frozenset(b.names()) for b in kleene_blocks(B6)}
    assert got == {frozenset({"0", "x", "x'", "1"}), frozenset({"0", "y", "y'", "1"})}


def test_blocks_match_brute_force():
    # maximal distributive subuniverses by direct inspection of all subuniverses
    for name in ("B6", "B8", "B", "FH", "MO2"):
        L = catalog_get(name)
        dist = []
        for s in subuniverses(L):
            m = s.members
            if all(L.m(x, L.j(y, z)) == L.j(L.m(x, y), L.m(x, z)) for x in m for y in m for z in m):
                dist.append(frozenset(m))
        maximal = {d for d in dist if not any(d < e for e in dist)}
        assert {frozenset(b.members) for b in kleene_blocks(L)} == maximal


def test_tameness():
    B8 = catalog_get("B8")
    v = is_tame(B8)
    assert not v
    assert _named(B8, v.witness) == {"x", "y"}
    assert is_tame(catalog_get("B"))
    assert is_tame(catalog_get("K3"))


def test_congruences():
    B2 = catalog_get("B2")
    assert len(principal_congruence(B2, 0, 1)) == 1
    C = catalog_get("C")
    assert is_congruence(C, congruence_from_classes(C, _classes("C")))
    for name in ("B6", "K3", "C"):
        L = catalog_get(name)
        for theta in congruences(L):
            assert is_congruence(L, theta)


def test_named_quotients():
    for name in names():
        e = entry(name)
        if e.theta is None:
            continue
        L = catalog_get(name)
        Q = quotient(L, congruence_from_classes(L, _classes(name)))
        assert find_orthoisomorphism(Q, catalog_get(e.quotient)) is not None, name


def test_orthoisomorphism():
    B8 = catalog_get("B8")
    f = find_orthoisomorphism(B8, B8)
    assert f is not None and is_orthoisomorphism(B8, B8, f)
    assert find_orthoisomorphism(catalog_get("B6"), B8) is None


def test_forbidden_configurations():
    B6 = catalog_get("B6")
    w = forbidden_configuration(B6)
    assert w.kind == "B6" and sorted(w.members) == list(range(6))
    w = forbidden_configuration(catalog_get("F11"))
    assert w.kind == "QuotB10"
    assert forbidden_configuration(catalog_get("B")) is None
    for name in names():
        L = catalog_get(name)
        if classify(L)["PKL"]:
            assert (forbidden_configuration(L) is None) == bool(classify(L)["SPO"]), name
