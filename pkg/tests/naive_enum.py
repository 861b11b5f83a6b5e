"""Brute-force oracle for counting bounded lattices with antitone involution.

Deliberately shares no code with the package: every strict order on the
middle elements is tried, every involutive permutation is tested for
antitonicity, and isomorphism classes are separated by minimising an
encoding over all n! relabelings.
"""

from itertools import combinations, permutations, product


def _strict_orders(k):
    """All strict partial orders on range(k), as sets of pairs."""
    pairs = [(a, b) for a in range(k) for b in range(k) if a != b]
    for choice in product((False, True), repeat=len(pairs)):
        rel = {p for p, c in zip(pairs, choice) if c}
        if any((b, a) in rel for a, b in rel):
            continue
        if all((a, d) in rel for a, b in rel for c, d in rel if b == c):
            yield rel


def _bounded(n, middle):
    """Order matrix with 0 at the bottom, n-1 at the top, middle shifted by 1."""
    le = [[i == j for j in range(n)] for i in range(n)]
    for i in range(n):
        le[0][i] = True
        le[i][n - 1] = True
    for a, b in middle:
        le[a + 1][b + 1] = True
    return le


def _is_lattice(le):
    n = len(le)
    for x, y in combinations(range(n), 2):
        ub = [z for z in range(n) if le[x][z] and le[y][z]]
        if not any(all(le[z][w] for w in ub) for z in ub):
            return False
        lb = [z for z in range(n) if le[z][x] and le[z][y]]
        if not any(all(le[w][z] for w in lb) for z in lb):
            return False
    return True


def _involutions(le):
    n = len(le)
    for p in permutations(range(n)):
        if any(p[p[i]] != i for i in range(n)):
            continue
        if all(le[x][y] == le[p[y]][p[x]] for x in range(n) for y in range(n)):
            yield p


def _code(le, inv, perm):
    n = len(le)
    pos = [0] * n
    for k, v in enumerate(perm):
        pos[v] = k
    bits = tuple(le[a][b] for a in perm for b in perm)
    return bits, tuple(pos[inv[v]] for v in perm)


def naive_models(n):
    """Isomorphism-class representatives as (le, inv) with le a list of lists."""
    if n == 1:
        return [([[True]], (0,))]
    seen = {}
    for middle in _strict_orders(n - 2):
        le = _bounded(n, middle)
        if not _is_lattice(le):
            continue
        for inv in _involutions(le):
            code = min(_code(le, inv, perm) for perm in permutations(range(n)))
            seen.setdefault(code, (le, inv))
    return list(seen.values())


def naive_lattice_count(n):
    """Number of unlabelled lattices on n elements."""
    if n == 1:
        return 1
    seen = set()
    for middle in _strict_orders(n - 2):
        le = _bounded(n, middle)
        if _is_lattice(le):
            seen.add(min(tuple(le[a][b] for a in perm for b in perm) for perm in permutations(range(n))))
    return len(seen)


def naive_count(n):
    return len(naive_models(n))


if __name__ == "__main__":
    for n in range(1, 7):
        print(n, naive_lattice_count(n), naive_count(n))
