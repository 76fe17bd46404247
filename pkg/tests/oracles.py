"""Slow reference implementations, independent of the package code paths."""

import itertools

import numpy as np


def taylor_expm(m, terms=120):
    """Unscaled Taylor series with Kahan-compensated accumulation."""
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    total = np.eye(n, dtype=complex)
    comp = np.zeros_like(total)
    term = np.eye(n, dtype=complex)
    for k in range(1, terms):
        term = term @ m / k
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total


def leibniz_det(m):
    """Determinant by the permutation expansion (fine for n <= 6)."""
    m = np.asarray(m)
    n = m.shape[0]
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i, p in enumerate(perm):
            prod = prod * m[i, p]
        total += -prod if inversions % 2 else prod
    return total


def closure(generators):
    """Breadth-first closure of integer matrices under right multiplication."""
    key = lambda a: a.tobytes()
    ident = np.eye(generators[0].shape[0], dtype=np.int64)
    seen = {key(ident): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = x @ g
                if key(y) not in seen:
                    seen[key(y)] = y
                    nxt.append(y)
        frontier = nxt
    return list(seen.values())


def blockwise_embed(m):
    """Complex n x n to real 2n x 2n, one 2x2 block at a time."""
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    out = np.zeros((2 * n, 2 * n))
    for i in range(n):
        for j in range(n):
            a, b = m[i, j].real, m[i, j].imag
            out[2 * i:2 * i + 2, 2 * j:2 * j + 2] = [[a, b], [-b, a]]
    return out
