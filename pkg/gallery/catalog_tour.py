"""Classify every catalog structure and show why the non-sp-orthomodular
ones fail: a block-cover witness and a forbidden configuration."""

from involat.catalog import catalog_get, entry, names
from involat.classify import classify
from involat.subalg import forbidden_configuration, is_tame, kleene_blocks

for name in names():
    L = catalog_get(name)
    r = classify(L)
    print(f"{name:8} n={L.n:2}  {' '.join(r.members())}")
    if r["PKL"] and not r["SPO"]:
        blocks = kleene_blocks(L)
        t = is_tame(L)
        w = forbidden_configuration(L)
        print(f"    {len(blocks)} blocks; untamed pair {tuple(L.name(v) for v in t.witness)}; {w.describe(L)}")
    if entry(name).quotient:
        print(f"    stored congruence has quotient {entry(name).quotient}")
