"""Per-model cross-checks of the characterization results.

Each check evaluates both sides of a biconditional (or the conclusion of
an implication) on one finite structure and reports agreement.  Running
them over an exhaustive enumeration turns every theorem into a
brute-force test.
"""

from __future__ import annotations

from typing import Callable, Iterable, Optional

from .catalog import catalog_get
from .classify import (
    aux1_identity, class_verdict, classify, inclusion_violations, is_distributive, is_modular,
    is_omp, is_orthomodular, is_paraorthomodular, is_sp, is_sp1, is_sp2, is_sp_at,
    is_sp_equational, is_sp_equational_alt, residuation_condition, sh_poset,
)
from .commute import (
    commutation_equivalences_hold, jonsson_agrees, sg_distributive_iff_commutes,
    sharp_commutation_holds,
)
from .constructs import (
    is_left_residuated, localizer_sp2_condition, moisil_interval, moisil_sharp_diagonal,
    ordinal_sum, residual_groupoid, total_groupoid,
)
from .core import TRUE, InvolutivePoset, Verdict
from .subalg import forbidden_configuration, is_tame, pasting_terms_check, subalgebra_copy


def _agree(name: str, left: bool, right: bool) -> Verdict:
    if bool(left) == bool(right):
        return TRUE
    return Verdict(False, None, f"{name}: left={bool(left)} right={bool(right)}")


def _all_pairs(L, fn, cond=lambda x, y: True) -> Verdict:
    for x in range(L.n):
        for y in range(L.n):
            if cond(x, y):
                v = fn(L, x, y)
                if not v:
                    return v if isinstance(v, Verdict) else Verdict(False, (x, y))
    return TRUE


def _b6_b8(L) -> tuple[bool, bool]:
    return (subalgebra_copy(L, catalog_get("B6")) is not None,
            subalgebra_copy(L, catalog_get("B8")) is not None)


def _pkl_checks(L) -> dict[str, Callable[[], Verdict]]:
    sp = lambda: bool(is_sp(L, cross_check=False))
    spo = lambda: bool(class_verdict(L, "SPO"))

    def moisil():
        if not class_verdict(L, "OML"):
            return TRUE
        M = moisil_interval(L)
        if not is_sp(M) or not moisil_sharp_diagonal(L):
            return Verdict(False, None, "interval algebra check")
        return TRUE

    def modular_only(fn):
        return lambda: fn(L) if is_modular(L) else TRUE

    def spo_only(fn):
        return lambda: fn(L) if spo() else TRUE

    return {
        "sp_iff_sp1_sp2": lambda: _agree("sp", sp(), is_sp1(L) and is_sp2(L)),
        "sp_iff_equational": lambda: _agree("eq", sp(), is_sp_equational(L)),
        "sp_iff_equational_alt": lambda: _agree("eq2", sp(), is_sp_equational_alt(L)),
        "at_iff_sp1": lambda: _agree("@", is_sp_at(L), is_sp1(L)),
        "sp1_iff_no_b6_b8": lambda: _agree("sp1", is_sp1(L), not any(_b6_b8(L))),
        "pmp_iff_no_b6": lambda: _agree("pmp", is_paraorthomodular(L), not _b6_b8(L)[0]),
        "spo_iff_tame": lambda: _agree("tame", spo(), is_tame(L)),
        "spo_iff_no_forbidden": lambda: _agree("forbidden", spo(), forbidden_configuration(L) is None),
        "total_sasaki_iff_oml": lambda: _agree("sasaki", is_left_residuated(total_groupoid(L)),
                                               is_orthomodular(L)),
        "resleft": lambda: _agree("resleft", is_left_residuated(residual_groupoid(L)),
                                  spo() and residuation_condition(L)),
        "localizer_sp2": lambda: _agree("localizer", is_sp2(L), localizer_sp2_condition(L)),
        "commutes_iff_sg_distributive": modular_only(sg_distributive_iff_commutes),
        "commutation_equivalences": modular_only(commutation_equivalences_hold),
        "jonsson": modular_only(lambda L: _all_pairs(L, jonsson_agrees)),
        "sharp_commutation": spo_only(sharp_commutation_holds),
        "aux1": spo_only(aux1_identity),
        "sharp_subposet_omp": spo_only(lambda L: is_omp(sh_poset(L))),
        "pasting_terms": spo_only(lambda L: _all_pairs(L, pasting_terms_check, L.le)),
        "moisil": moisil,
    }


def theorem_checks(p: InvolutivePoset, only: Optional[Iterable[str]] = None) -> dict[str, Verdict]:
    """Evaluate every applicable cross-check on ``p``.

    The general checks (inclusion diagram, ordinal sums) run on every
    lattice; the rest require a pseudo-Kleene lattice.
    """
    checks: dict[str, Callable[[], Verdict]] = {
        "inclusions": lambda: TRUE if not inclusion_violations(classify(p))
        else Verdict(False, tuple(inclusion_violations(classify(p)))),
        "ordinal_sum_distributive": lambda: _agree("ordsum", is_distributive(ordinal_sum(p)),
                                                   is_distributive(p)),
    }
    if classify(p)["PKL"]:
        checks.update(_pkl_checks(p))
    if only is not None:
        only = set(only)
        checks = {k: v for k, v in checks.items() if k in only}
    return {k: fn() for k, fn in checks.items()}


THEOREM_NAMES = (
    "inclusions", "ordinal_sum_distributive", "sp_iff_sp1_sp2", "sp_iff_equational",
    "sp_iff_equational_alt", "at_iff_sp1", "sp1_iff_no_b6_b8", "pmp_iff_no_b6", "spo_iff_tame",
    "spo_iff_no_forbidden", "total_sasaki_iff_oml", "resleft", "localizer_sp2",
    "commutes_iff_sg_distributive", "commutation_equivalences", "jonsson", "sharp_commutation",
    "aux1", "sharp_subposet_omp", "pasting_terms", "moisil",
)


def counterexamples(models: Iterable[InvolutivePoset], only: Optional[Iterable[str]] = None) -> list[tuple]:
    """(model, check name, verdict) for every failed check."""
    out = []
    for p in models:
        for k, v in theorem_checks(p, only).items():
            if not v:
                out.append((p, k, v))
    return out
