from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from mixoa.alphabet import ArrayMultiset, MixedAlphabet, full_factorial
from mixoa.bounds import (bf_mixed, bf_pure, diestelkamp, generic_design_bound, rounded_bound,
                          tightness_verdict)
from mixoa.multigraph import eigenvalue, graph_params

levels_st = st.lists(st.integers(2, 9), min_size=1, max_size=8)


def test_bf_mixed_example():
    r = bf_mixed(MixedAlphabet((2, 4, 4, 4, 4)), 3)
    assert r.raw == 64 and r.harmonic_mean == Fraction(10, 3) and r.rounded == 64


@pytest.mark.parametrize("n, q, t, value", [
    (13, 2, 7, 1536),
    (11, 3, 8, 5 * 3**8),
    (5, 2, 4, 2**4),
])
def test_bf_pure_table(n, q, t, value):
    assert bf_pure(n, q, t).raw == value
    assert bf_mixed(MixedAlphabet((q,) * n), t).raw == value


def test_bf_pure_n_equals_t_plus_one():
    for n in range(2, 12):
        assert bf_pure(n, 2, n - 1).raw == 2 ** (n - 1)


def test_diestelkamp_example():
    r = diestelkamp(MixedAlphabet((2, 4, 4, 4, 4)), 3)
    assert r.applicable and r.raw == Fraction(16, 7)
    assert r.q_min == 2 and r.q_mean == Fraction(18, 5) and r.q_max == 4


def test_diestelkamp_not_applicable():
    # n q~ + (t + 1 - n) q_M = 15 - 2 * 9 < 0
    r = diestelkamp(MixedAlphabet((2, 2, 2, 9)), 1)
    assert not r.applicable and r.raw is None and r.rounded is None


@given(st.integers(1, 8), st.integers(2, 9), st.data())
def test_diestelkamp_equals_bf_on_pure_levels(n, q, data):
    t = data.draw(st.integers(1, n))
    d = diestelkamp(MixedAlphabet((q,) * n), t)
    assert d.applicable and d.raw == bf_pure(n, q, t).raw


@given(levels_st, st.data())
def test_bf_equals_generic_design_bound(levels, data):
    a = MixedAlphabet(tuple(levels))
    t = data.draw(st.integers(0, a.n - 1)) if a.n > 1 else 0
    g = graph_params(a)
    assert bf_mixed(a, t).raw == generic_design_bound(g.k, eigenvalue(g, t + 1), a.size)


@given(levels_st, st.integers(2, 9), st.data())
def test_appending_a_level(levels, q, data):
    """Appending q changes the bound by prod * (q-1) * (t - n + sum 1/q_i) / (t+1)."""
    a = MixedAlphabet(tuple(levels))
    t = data.draw(st.integers(1, a.n))
    b = MixedAlphabet(tuple(levels) + (q,))
    old, new = bf_mixed(a, t).raw, bf_mixed(b, t).raw
    slack = t - a.n + sum(Fraction(1, x) for x in levels)
    assert new - old == a.size * (q - 1) * slack / (t + 1)
    if slack < 0:
        assert new < old


def test_generic_design_bound():
    assert generic_design_bound(14, -2, 512) == 64
    assert generic_design_bound(5, 0, 100) == 0
    assert generic_design_bound(3, -3, 8) == 4
    with pytest.raises(ValueError):
        generic_design_bound(3, 3, 8)


def test_rounded_bound():
    assert rounded_bound(MixedAlphabet((2, 3)), 1, Fraction(5, 2)) == 6
    assert rounded_bound(MixedAlphabet((2, 4, 4, 4, 4)), 3, Fraction(64)) == 64
    assert rounded_bound(MixedAlphabet((2, 4, 4, 4, 4)), 3, Fraction(-5)) == 64
    assert rounded_bound(MixedAlphabet((2, 3)), 1, Fraction(0)) == 6
    assert bf_mixed(MixedAlphabet((2, 3)), 1).raw == Fraction(5, 2)


def test_negative_bound_reported_unclamped():
    r = bf_mixed(MixedAlphabet((2,) * 10), 2)
    assert r.raw < 0 and r.rounded == 4


def test_tightness_example(example_oa):
    v = tightness_verdict(example_oa, 3)
    assert v.attains and v.simple and v.independent
    assert (v.cr.b, v.cr.c) == (14, 2) == (v.expected_b, v.expected_c)
    assert v.agrees


def test_tightness_even_weight(even_weight):
    v = tightness_verdict(even_weight, 2)
    assert v.attains and v.bound == 4
    assert (v.cr.b, v.cr.c) == (3, 3) and v.agrees


def test_tightness_not_attaining():
    v = tightness_verdict(full_factorial(MixedAlphabet((2, 3))), 2)
    assert not v.attains and v.N == 6 and v.bound == Fraction(11, 3)
    assert v.agrees is None


def test_tightness_precondition():
    C = ArrayMultiset.from_rows(MixedAlphabet((2, 2)), [(0, 0), (1, 1)])
    with pytest.raises(ValueError):
        tightness_verdict(C, 2)


def test_bf_dominates_positive_diestelkamp():
    """Where the Diestelkamp bound is positive the mixed bound is never weaker."""
    rng = np.random.default_rng(17)
    checked = 0
    while checked < 1000:
        n = int(rng.integers(1, 9))
        a = MixedAlphabet(tuple(int(q) for q in rng.integers(2, 10, size=n)))
        t = int(rng.integers(1, n + 1))
        d = diestelkamp(a, t)
        if not d.applicable or d.raw <= 0:
            continue
        b = bf_mixed(a, t).raw
        assert b >= d.raw
        assert (b == d.raw) == a.is_pure()
        checked += 1
