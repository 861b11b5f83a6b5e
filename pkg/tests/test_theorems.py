import pytest

from involat.catalog import catalog_get, names
from involat.enumeration import models
from involat.theorems import THEOREM_NAMES, counterexamples, theorem_checks


@pytest.mark.parametrize("n", range(1, 9))
def test_no_counterexamples_in_enumeration(n):
    bad = counterexamples(models(n))
    assert bad == [], [(k, v.note) for _, k, v in bad]


@pytest.mark.parametrize("name", names())
def test_no_counterexamples_in_catalog(name):
    bad = counterexamples([catalog_get(name)])
    assert bad == [], [(k, v.note) for _, k, v in bad]


def test_every_check_runs_on_a_pkl():
    got = theorem_checks(catalog_get("B"))
    assert set(got) == set(THEOREM_NAMES)


def test_only_filter():
    got = theorem_checks(catalog_get("B8"), only=["spo_iff_tame"])
    assert list(got) == ["spo_iff_tame"] and got["spo_iff_tame"]


def test_non_pkl_gets_general_checks_only():
    p = next(q for q in models(5) if not theorem_checks(q).keys() >= {"sp_iff_sp1_sp2"})
    assert set(theorem_checks(p)) == {"inclusions", "ordinal_sum_distributive"}
