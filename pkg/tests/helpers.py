"""Shared brute-force helpers used as independent oracles in the tests."""

import itertools
from fractions import Fraction

from coxeter_ehrhart.linalg import determinant, dot


def acyclic(n, edges):
    """True when the given edges on vertices 0..n-1 contain no cycle."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            return False
        parent[ri] = rj
    return True


def forest_counts_by_edges(n):
    """Number of k-edge forests on n labeled vertices, for k = 0..n-1."""
    pairs = list(itertools.combinations(range(n), 2))
    counts = [0] * n
    for k in range(n):
        counts[k] = sum(1 for es in itertools.combinations(pairs, k) if acyclic(n, es))
    return counts


def count_parallelepiped_points(vectors):
    """Lattice points in the half-open cell {sum lam_i v_i : 0 <= lam_i < 1}.

    For independent integer vectors this count equals the index of the
    subgroup they generate inside the saturated lattice of their span, which
    is exactly the gcd of the maximal minors.  Solved exactly with Cramer's
    rule on the Gram matrix.
    """
    k = len(vectors)
    d = len(vectors[0])
    gram = [[dot(u, w) for w in vectors] for u in vectors]
    g = determinant(gram)
    if g == 0:
        raise ValueError("vectors must be independent")
    lows = [sum(min(v[j], 0) for v in vectors) for j in range(d)]
    highs = [sum(max(v[j], 0) for v in vectors) for j in range(d)]
    count = 0
    for point in itertools.product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs))):
        rhs = [dot(v, point) for v in vectors]
        lambdas = []
        for i in range(k):
            m = [list(row) for row in gram]
            for r in range(k):
                m[r][i] = rhs[r]
            lambdas.append(Fraction(determinant(m), g))
        if any(lam < 0 or lam >= 1 for lam in lambdas):
            continue
        if all(
            sum(lam * v[j] for lam, v in zip(lambdas, vectors)) == point[j] for j in range(d)
        ):
            count += 1
    return count
