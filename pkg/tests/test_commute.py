import itertools

import pytest

from involat.catalog import catalog_get
from involat.classify import classify, is_modular, sharp_elements
from involat.commute import (
    commutation_equivalences, commutation_equivalences_hold, commutes, commutes_mpkl,
    commutes_omp, foulis_holland_check, jonsson_agrees, sg_distributive_iff_commutes,
    sharp_commutation, sharp_commutation_holds,
)
from involat.enumeration import models
from involat.errors import NotModular, NotSharp


def _small(pred, upto=7):
    return [p for n in range(1, upto + 1) for p in models(n) if pred(classify(p))]


def _ix(L, *names):
    return [L.index(s) for s in names]


def test_omp_commutation():
    MO2 = catalog_get("MO2")
    for x, y in itertools.product(range(MO2.n), repeat=2):
        if MO2.le(x, y):
            assert commutes_omp(MO2, x, y)
        assert commutes_omp(MO2, x, MO2.top)
    B6 = catalog_get("B6")
    y, x = _ix(B6, "y", "x")
    assert not commutes_omp(B6, y, x)
    assert commutes_omp(B6, x, y)


def test_diamond_pair():
    L = catalog_get("Diamond")
    a, b = _ix(L, "a", "b")
    r = commutes_mpkl(L, a, b)
    assert (r.c1, r.c2, r.c3) == (True, False, True)
    assert not r.commutes
    eq = commutation_equivalences(L, a, b)
    assert [eq[k] for k in "12345"] == [False] * 5


def test_failure_of_foulis_holland():
    L = catalog_get("FH")
    a, b, c = _ix(L, "a", "b", "c")
    assert commutes(L, a, b) and commutes(L, a, c)
    assert not foulis_holland_check(L, a, b, c)
    assert sg_distributive_iff_commutes(L)
    assert foulis_holland_check(L, L.bottom, L.top, a)


def test_pairs_commute_with_themselves_and_top():
    for name in ("Diamond", "FH", "K3", "MO2"):
        L = catalog_get(name)
        for x in range(L.n):
            assert commutes(L, x, x)
            eq = commutation_equivalences(L, x, L.top)
            assert all(eq[k] for k in "12345")


def test_equivalences_need_modularity():
    with pytest.raises(NotModular):
        commutation_equivalences(catalog_get("B8"), 1, 2)


def test_mpkl_commutation_exhaustive():
    for L in _small(lambda r: r["MPKL"]):
        assert is_modular(L)
        assert sg_distributive_iff_commutes(L)
        assert commutation_equivalences_hold(L)
        for a, b in itertools.product(range(L.n), repeat=2):
            assert jonsson_agrees(L, a, b)
    assert sg_distributive_iff_commutes(catalog_get("K3"))


def test_sharp_commutation():
    B = catalog_get("B")
    assert sharp_commutation_holds(B)
    assert sharp_commutation_holds(catalog_get("MO2"))
    nonsharp = next(x for x in range(B.n) if x not in sharp_elements(B))
    with pytest.raises(NotSharp):
        sharp_commutation(B, nonsharp, B.top)
    for L in _small(lambda r: r["SPO"]):
        assert sharp_commutation_holds(L)
