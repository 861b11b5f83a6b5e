import itertools

import pytest

from involat.canon import find_orthoisomorphism
from involat.catalog import catalog_get
from involat.classify import classify, is_distributive, is_orthomodular, is_sp, is_sp2
from involat.constructs import (
    direct_product, is_left_residuated, local_bounds, localizer, localizer_identities,
    localizer_sp2_condition, moisil_interval, moisil_sharp_diagonal, ordinal_sum, pi,
    residual_groupoid, sasaki_total, total_groupoid,
)
from involat.enumeration import models


def _models_upto(n):
    return [p for k in range(1, n + 1) for p in models(k)]


def test_ordinal_sum_of_chain_is_chain():
    S = ordinal_sum(catalog_get("K3"))
    assert S.n == 5 and all(S.comparable(a, b) for a in range(5) for b in range(5))


def test_ordinal_sum_keeps_distributivity():
    assert not is_distributive(ordinal_sum(catalog_get("B6")))
    for L in _models_upto(7):
        assert bool(is_distributive(ordinal_sum(L))) == bool(is_distributive(L))


def test_direct_product(k3b2):
    assert k3b2.n == 6
    B2 = catalog_get("B2")
    assert find_orthoisomorphism(direct_product(B2, B2), catalog_get("B4")) is not None


def test_moisil_interval():
    assert find_orthoisomorphism(moisil_interval(catalog_get("B2")), catalog_get("K3")) is not None
    assert moisil_interval(catalog_get("B4")).n == 9
    M = moisil_interval(catalog_get("MO2"))
    assert is_sp(M)
    assert moisil_sharp_diagonal(catalog_get("MO2"))


def test_localizer_basics():
    K3 = catalog_get("K3")
    h = K3.index("h")
    loc = localizer(K3, h, h)
    assert loc.members == [h] and loc.lo == loc.hi == h
    for name in ("B8", "B", "FH"):
        L = catalog_get(name)
        for x, y in itertools.product(range(L.n), repeat=2):
            lo, hi = local_bounds(L, x, y)
            mem = localizer(L, x, y).members
            assert all(L.le(lo, z) and L.le(z, hi) for z in mem)
            for z, u in itertools.product(mem, repeat=2):
                assert L.m(z, u) in mem and L.j(z, u) in mem
            assert pi(L, L.bottom, y) == y


def test_localizer_x_form_fails_on_b2():
    got = localizer_identities(catalog_get("B2"))
    assert not got["x_form"]


def test_localizer_sp2_condition_on_small_pkls():
    for L in _models_upto(7):
        if classify(L)["PKL"]:
            assert bool(is_sp2(L)) == bool(localizer_sp2_condition(L))


@pytest.mark.parametrize("name", ["B10", "F5", "F7", "F9", "F11"])
def test_localizer_subposet_reading_misses_sp2_failures(name):
    # the closed reading tracks SP2; the subposet reading accepts these
    L = catalog_get(name)
    assert not is_sp2(L)
    assert not localizer_sp2_condition(L)
    assert localizer_sp2_condition(L, "subposet")


def test_sasaki_pair_on_orthomodular_lattices():
    for name in ("B2", "B4", "MO2"):
        L = catalog_get(name)
        assert is_orthomodular(L)
        assert is_left_residuated(total_groupoid(L))


def test_residual_groupoid(k3b2):
    K3 = catalog_get("K3")
    g = residual_groupoid(K3)
    assert is_left_residuated(g)
    assert all(g.odot[K3.bottom, y] == K3.bottom for y in range(K3.n))
    assert not is_left_residuated(residual_groupoid(k3b2))
    assert not is_left_residuated(residual_groupoid(catalog_get("B6")))


def test_total_sasaki_unit_laws():
    L = catalog_get("MO2")
    odot, _ = sasaki_total(L)
    for x in range(L.n):
        assert odot[x, L.top] == x == odot[L.top, x]


@pytest.mark.parametrize("name", ["B2", "B4", "MO2"])
def test_interval_of_oml_is_sp(name):
    assert is_sp(moisil_interval(catalog_get(name)))
