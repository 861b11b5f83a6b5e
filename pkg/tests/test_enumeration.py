import time

import pytest
from hypothesis import given, settings, strategies as st

from involat.canon import canonical_form
from involat.catalog import catalog_get, names
from involat.classify import CLASS_NAMES, classify
from involat.enumeration import (
    antitone_involutions, census, census_counts, classify_all, enumerate_models, lattice_count,
    model_count, models,
)
from involat.errors import BudgetExceeded
from involat.subalg import is_tame, subalgebra_copy
from naive_enum import naive_count, naive_lattice_count

# unlabelled lattices on n elements (a standard integer sequence)
LATTICES = {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15, 7: 53, 8: 222}
# frozen from the enumerator after agreement with the naive oracle for n ≤ 6
MODELS = {1: 1, 2: 1, 3: 1, 4: 3, 5: 4, 6: 12, 7: 20, 8: 61}


@pytest.mark.parametrize("n", range(1, 7))
def test_counts_match_naive_oracle(n):
    assert lattice_count(n) == naive_lattice_count(n)
    assert model_count(n) == naive_count(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_frozen_counts(n):
    assert lattice_count(n) == LATTICES[n]
    assert model_count(n) == MODELS[n]


def test_tiny_sizes():
    assert canonical_form(models(2)[0]) == canonical_form(catalog_get("B2"))
    assert canonical_form(models(3)[0]) == canonical_form(catalog_get("K3"))


def test_models_are_distinct_and_valid():
    for n in range(1, 9):
        ms = models(n)
        assert len({canonical_form(p) for p in ms}) == len(ms)
        assert all(p.is_lattice() and p.n == n for p in ms)


def test_catalog_entries_appear_in_enumeration():
    for name in names():
        p = catalog_get(name)
        if p.n <= 8:
            assert canonical_form(p) in {canonical_form(q) for q in models(p.n)}, name


def test_antitone_involutions_of_b4():
    B4 = catalog_get("B4")
    # one involution swaps the two atoms, the other fixes both
    assert len(antitone_involutions(B4.leq)) == 2


def test_budget():
    with pytest.raises(BudgetExceeded):
        models(9)
    assert len(models(9, cap=9)) == 122


def test_constraint_filters():
    spo = list(enumerate_models(6, ["SPO"]))
    assert spo and all(classify(p)["SPO"] for p in spo)
    non = list(enumerate_models(6, exclude=["PKL"]))
    assert len(spo) + len(non) <= model_count(6)
    with pytest.raises(KeyError):
        list(enumerate_models(4, ["nope"]))


def test_census_table():
    tsv, counts = classify_all(6)
    lines = tsv.splitlines()
    assert lines[0].split("\t") == ["name", "size", *CLASS_NAMES]
    assert len(lines) == 1 + model_count(6)
    assert counts["UOP"] == sum(1 for ln in lines[1:] if ln.split("\t")[2] == "1")
    rows = census([1])
    assert all(rows[0]["flags"][c] for c in CLASS_NAMES)


def test_census_n6_characterizations():
    B6 = catalog_get("B6")
    for row in census(range(1, 7)):
        p, f = row["model"], row["flags"]
        if f["PKL"]:
            assert f["SPO"] == bool(is_tame(p))
        if f["UOP"] and not f["PMP"]:
            assert subalgebra_copy(p, B6) is not None


def test_census_counts_n8():
    counts = census_counts(census([8]))
    assert (counts["SPO"], counts["POML"], counts["PKL"], counts["OML"], counts["MPKL"]) == (16, 18, 24, 2, 9)


def test_enumeration_is_fast():
    t = time.perf_counter()
    for n in range(1, 9):
        models(n)
    assert time.perf_counter() - t < 30


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(names()), st.randoms(use_true_random=False))
def test_canonical_form_is_relabelling_invariant(name, rnd):
    p = catalog_get(name)
    order = list(range(p.n))
    rnd.shuffle(order)
    assert canonical_form(p.permuted(order)) == canonical_form(p)


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 7), st.data())
def test_canonical_form_separates_models(n, data):
    ms = models(n)
    i = data.draw(st.integers(0, len(ms) - 1))
    order = data.draw(st.permutations(range(n)))
    q = ms[i].permuted(order)
    assert [canonical_form(q) == canonical_form(m) for m in ms].count(True) == 1
