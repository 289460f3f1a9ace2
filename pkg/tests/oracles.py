"""Slow, direct reference implementations used only to check the library."""

from __future__ import annotations

import cmath
from collections import Counter
from fractions import Fraction
from itertools import combinations, product
from math import lcm, prod

import numpy as np


def strength_holds(levels, rows_with_mult, t):
    """Tabulate every t-column projection value by value."""
    N = sum(m for _, m in rows_with_mult)
    n = len(levels)
    for cols in combinations(range(n), t):
        expected = Fraction(N, prod(levels[c] for c in cols))
        tally = Counter()
        for row, m in rows_with_mult:
            tally[tuple(row[c] for c in cols)] += m
        for vals in product(*(range(levels[c]) for c in cols)):
            if tally[vals] != expected:
                return False
    return True


def q_t_lcm(levels, t):
    return lcm(*(prod(levels[i] for i in S) for S in combinations(range(len(levels)), t)))


def adjacency(levels):
    """Dense adjacency matrix of H(q1*...*qn), vertices in lexicographic order."""
    Q = lcm(*levels)
    V = list(product(*(range(q) for q in levels)))
    index = {v: i for i, v in enumerate(V)}
    A = np.zeros((len(V), len(V)), dtype=np.int64)
    for v in V:
        for i, q in enumerate(levels):
            for a in range(q):
                if a != v[i]:
                    u = v[:i] + (a,) + v[i + 1:]
                    A[index[v], index[u]] = Q // q
    return V, A


def cr_params(levels, members):
    """(b, c) if the set is CR-1 by explicit adjacency counting, else None."""
    V, A = adjacency(levels)
    f = np.array([v in members for v in V], dtype=np.int64)
    into = A @ f
    k = A[0].sum()
    bs = {int(k - into[i]) for i in range(len(V)) if f[i]}
    cs = {int(into[i]) for i in range(len(V)) if not f[i]}
    if len(bs) == 1 and len(cs) == 1:
        b, c = bs.pop(), cs.pop()
        if b > 0 and c > 0:
            return b, c
    return None


def character_value(levels, b, x):
    return prod(cmath.exp(2j * cmath.pi * bi * xi / q) for bi, xi, q in zip(b, x, levels))


def hamming_distance_matrices(n, q):
    V = list(product(range(q), repeat=n))
    X = np.array(V)
    D = (X[:, None, :] != X[None, :, :]).sum(axis=2)
    return V, [(D == i).astype(float) for i in range(n + 1)]
