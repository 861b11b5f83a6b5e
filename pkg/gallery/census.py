"""Enumerate all bounded lattices with antitone involution up to n elements,
count class memberships and run every cross-check on each model."""

import sys
import time

from involat.classify import CLASS_NAMES
from involat.enumeration import census, census_counts, lattice_count
from involat.theorems import counterexamples

top = int(sys.argv[1]) if len(sys.argv) > 1 else 8
print("n  lattices  models  " + " ".join(f"{c:>4}" for c in CLASS_NAMES))
for n in range(1, top + 1):
    rows = census([n], cap=max(top, 8))
    counts = census_counts(rows)
    print(f"{n:<2} {lattice_count(n):>9} {len(rows):>7}  " + " ".join(f"{counts[c]:>4}" for c in CLASS_NAMES))

t = time.perf_counter()
models = [row["model"] for row in census(range(1, top + 1), cap=max(top, 8))]
bad = counterexamples(models)
print(f"\n{len(models)} models checked in {time.perf_counter() - t:.1f}s, {len(bad)} counterexamples")
for p, name, v in bad:
    print(f"  {name}: {v.note}")
