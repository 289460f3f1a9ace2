from collections import Counter
from itertools import product

import numpy as np
import pytest

from mixoa.alphabet import ArrayMultiset, MixedAlphabet
from mixoa.multigraph import (GuardError, check_cr1, eigenvalue, graph_params, is_independent,
                              weighted_neighbors)

from generators import random_alphabet
from oracles import adjacency, character_value, cr_params


@pytest.mark.parametrize("levels, Q, k, mu", [
    ((2, 4, 4, 4, 4), 4, 14, (2, 1, 1, 1, 1)),
    ((3, 3, 3), 3, 6, (1, 1, 1)),
    ((2, 3), 6, 7, (3, 2)),
])
def test_graph_params(levels, Q, k, mu):
    g = graph_params(MixedAlphabet(levels))
    assert (g.Q, g.k, g.mu) == (Q, k, mu)


def test_eigenvalues():
    g = graph_params(MixedAlphabet((2, 4, 4, 4, 4)))
    assert eigenvalue(g, 4) == -2
    assert eigenvalue(g, 0) == g.k
    assert eigenvalue(graph_params(MixedAlphabet((2, 3))), 2) == -5
    ladder = g.eigenvalues()
    assert all(a - b == g.Q for a, b in zip(ladder, ladder[1:]))
    with pytest.raises(ValueError):
        eigenvalue(g, 6)


def test_weighted_neighbors():
    g = graph_params(MixedAlphabet((2, 2)))
    assert dict(weighted_neighbors(g, (0, 0))) == {(1, 0): 1, (0, 1): 1}
    g = graph_params(MixedAlphabet((2, 3)))
    assert dict(weighted_neighbors(g, (0, 0))) == {(1, 0): 3, (0, 1): 2, (0, 2): 2}


def test_neighbor_multiplicity_sums_to_degree():
    rng = np.random.default_rng(5)
    for _ in range(30):
        a = random_alphabet(rng, max_size=200)
        g = graph_params(a)
        for idx in rng.integers(0, a.size, size=5):
            assert sum(m for _, m in weighted_neighbors(g, a.word(int(idx)))) == g.k


def test_characters_are_eigenfunctions():
    rng = np.random.default_rng(8)
    worst = 0.0
    for _ in range(25):
        a = random_alphabet(rng, max_size=256, max_n=5)
        g = graph_params(a)
        V = list(product(*(range(q) for q in a.levels)))
        for _ in range(4):
            b = tuple(int(rng.integers(q)) for q in a.levels)
            w = sum(1 for x in b if x)
            chi = {v: character_value(a.levels, b, v) for v in V}
            for v in V:
                lhs = sum(m * chi[u] for u, m in weighted_neighbors(g, v))
                worst = max(worst, abs(lhs - eigenvalue(g, w) * chi[v]))
    assert worst < 1e-8


def test_cr_example(example_oa):
    g = graph_params(example_oa.alphabet)
    rep = check_cr1(example_oa, g)
    assert rep.is_cr and (rep.b, rep.c) == (14, 2)
    assert is_independent(example_oa, g)


def test_cr_even_weight(even_weight):
    g = graph_params(even_weight.alphabet)
    rep = check_cr1(even_weight, g)
    assert rep.is_cr and (rep.b, rep.c) == (3, 3)
    assert is_independent(even_weight, g)


def test_cr_singleton():
    a = MixedAlphabet((2, 2, 2))
    rep = check_cr1([(0, 0, 0)], graph_params(a))
    assert not rep.is_cr
    # 001 receives one edge from 000, 011 receives none
    assert rep.c == 1 and rep.violator == (0, 1, 1) and rep.violator_count == 0


def test_cr_rejects_degenerate_sets():
    a = MixedAlphabet((2, 2))
    g = graph_params(a)
    with pytest.raises(ValueError):
        check_cr1([], g)
    with pytest.raises(ValueError):
        check_cr1(list(product(range(2), repeat=2)), g)
    with pytest.raises(ValueError):
        check_cr1(ArrayMultiset(a, {(0, 0): 2}), g)


def test_cr_guard(monkeypatch):
    from mixoa import multigraph
    monkeypatch.setattr(multigraph, "VERTEX_GUARD", 10)
    g = graph_params(MixedAlphabet((2, 2, 2, 2)))
    with pytest.raises(GuardError):
        check_cr1([(0, 0, 0, 0)], g)
    assert not check_cr1([(0, 0, 0, 0)], g, force=True).is_cr


def test_independence():
    g = graph_params(MixedAlphabet((2, 2)))
    assert not is_independent([(0, 0), (0, 1)], g)
    assert is_independent([(0, 0), (1, 1)], g)


def test_cr_against_adjacency_oracle():
    rng = np.random.default_rng(21)
    found = Counter()
    for _ in range(150):
        a = random_alphabet(rng, max_size=48, max_n=4)
        g = graph_params(a)
        V = list(product(*(range(q) for q in a.levels)))
        size = int(rng.integers(1, len(V)))
        members = {V[i] for i in rng.choice(len(V), size=size, replace=False)}
        rep = check_cr1(members, g)
        expected = cr_params(a.levels, members)
        assert rep.is_cr == (expected is not None)
        if rep.is_cr:
            assert (rep.b, rep.c) == expected
            # double counting of edges between C and its complement
            assert rep.b * len(members) == rep.c * (len(V) - len(members))
        found[rep.is_cr] += 1
        _, A = adjacency(a.levels)
        f = np.array([v in members for v in V])
        indep = not (A[np.ix_(f, f)] > 0).any()
        assert is_independent(members, g) == indep
    assert found[True] > 0
