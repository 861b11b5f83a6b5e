"""Referential matrices: the representation of a small pseudo-Kleene lattice
by partial three-valued propositions, and a non-structural consequence."""

from involat.catalog import catalog_get
from involat.refmat import (
    VALUE_NAMES, build_refmat, entailment_counterexample, format_formula, lor, neg,
    representation_check, two_state_matrix, var,
)

for name in ("K3", "B", "B8"):
    A = catalog_get(name)
    M = build_refmat(A)
    r = representation_check(A, M)
    print(f"{name}: {len(M.sublattices)} Kleene sublattices, {len(M.filters)} prime filters, "
          f"tame={r.tame}, orthoisomorphic={r.isomorphism is not None}")
    if not r.converse:
        a, b = r.converse.witness
        print(f"    {A.name(a)} <= {A.name(b)} but not represented")

K3 = catalog_get("K3")
M = build_refmat(K3)
for a in range(K3.n):
    vals = ", ".join(f"{M.filters[i].describe(K3)}={VALUE_NAMES[v]}" for i, v in M.carrier[a].values)
    print(f"  {K3.name(a)}: {vals}")

T = two_state_matrix()
x, y, u, v = (var(s) for s in "xyuv")
for phi in (lor(lor(x, neg(x)), y), lor(lor(x, neg(x)), lor(u, v))):
    ce = entailment_counterexample(T, [x], phi)
    verdict = "holds" if ce is None else f"fails at {ce[1]} with " + ", ".join(
        f"{k}={T.name(p)}" for k, p in sorted(ce[0].items()))
    print(f"x |- {format_formula(phi)}: {verdict}")
