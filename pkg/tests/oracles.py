"""Slow, obviously-correct reference computations used only by the tests."""

from fractions import Fraction
from itertools import combinations, permutations, product

import numpy as np


def perm_sign(p):
    sign, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(m):
    m = [[int(x) for x in row] for row in np.asarray(m).tolist()]
    n = len(m)
    total = 0
    for p in permutations(range(n)):
        term = perm_sign(p)
        for i in range(n):
            term *= m[i][p[i]]
            if not term:
                break
        total += term
    return total


def gauss_det(m):
    """Exact determinant by fraction-valued Gaussian elimination."""
    a = [[Fraction(int(x)) for x in row] for row in np.asarray(m).tolist()]
    n, det = len(a), Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            for k in range(c, n):
                a[r][k] -= f * a[c][k]
    return int(det)


def charpoly_by_minors(m):
    """c_k = (-1)^k * (sum of k x k principal minors)."""
    m = np.asarray(m)
    n = m.shape[0]
    coeffs = [1]
    for k in range(1, n + 1):
        s = sum(gauss_det(m[np.ix_(idx, idx)]) for idx in map(list, combinations(range(n), k)))
        coeffs.append((-1) ** k * s)
    return tuple(coeffs)


def brute_independence(adj):
    adj = np.asarray(adj, dtype=bool)
    n = adj.shape[0]
    for size in range(n, 0, -1):
        for s in combinations(range(n), size):
            if not adj[np.ix_(s, s)].any():
                return size
    return 0


def brute_clique(adj):
    adj = np.asarray(adj, dtype=bool)
    n = adj.shape[0]
    for size in range(n, 0, -1):
        for s in combinations(range(n), size):
            sub = adj[np.ix_(s, s)]
            if sub.sum() == size * (size - 1):
                return size
    return 0


def brute_chromatic(adj):
    adj = np.asarray(adj, dtype=bool)
    n = adj.shape[0]
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if adj[u, v]]
    for k in range(1, n + 1):
        for col in product(range(k), repeat=n):
            if all(col[u] != col[v] for u, v in edges):
                return k
    return n


def brute_cycle_count(adj, length):
    """Cycles of a given length: vertex sequences / (2 * length)."""
    adj = np.asarray(adj, dtype=bool)
    n = adj.shape[0]
    count = 0
    for seq in permutations(range(n), length):
        if all(adj[seq[i], seq[(i + 1) % length]] for i in range(length)):
            count += 1
    return count // (2 * length)


def circulant_eigenvalues(first_row):
    """Eigenvalues of a symmetric circulant via sum_j c_j w^(jk)."""
    c = np.asarray(first_row, dtype=float)
    n = len(c)
    k = np.arange(n)
    w = np.exp(2j * np.pi * np.outer(k, k) / n)
    return np.sort((w @ c).real)[::-1]
