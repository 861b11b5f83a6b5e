"""The spectral order on rational effects: a pair that is ordered by the
usual operator order but not by the spectral order, and the identity suite
on random effects."""

from fractions import Fraction

import numpy as np

from involat.spectral import (
    canonical_leq, emit_effect, from_eigen, spectral_join, spectral_leq, to_operator,
    verify_identities,
)

A = from_eigen(2, [(0, [[1, -1]]), (Fraction(1, 3), [[1, 1]])])
B = from_eigen(2, [(1, [[1, 0]]), (Fraction(1, 4), [[0, 1]])])
print("A =", to_operator(A))
print("B =", to_operator(B))
diff = np.array(to_operator(B), dtype=float) - np.array(to_operator(A), dtype=float)
print("eigenvalues of B - A:", np.linalg.eigvalsh(diff))
print("A <= B as operators:", canonical_leq(A, B))
print("A <= B spectrally:  ", spectral_leq(A, B))
print("spectral join:\n" + emit_effect(spectral_join(A, B)))

for d in (2, 3):
    found = verify_identities(300, d, seed=7)
    print(f"d={d}:", {k: ("ok" if w is None else "counterexample") for k, w in found.items()})
