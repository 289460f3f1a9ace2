from itertools import product

import numpy as np
import pytest

from mixoa.alphabet import ArrayMultiset, MixedAlphabet, check_strength, full_factorial
from mixoa.design import character_sum, fourier_profile, is_algebraic_design

from generators import random_alphabet, random_multiset
from oracles import character_value


def test_trivial_character_is_exact(example_oa):
    assert character_sum(example_oa, (0,) * 5) == 64


def test_full_factorial_orthogonality():
    a = MixedAlphabet((2, 3, 4))
    C = full_factorial(a)
    for b in product(range(2), range(3), range(4)):
        if any(b):
            assert abs(character_sum(C, b)) < 1e-9 * C.N


def test_example_low_weight_sums_vanish(example_oa):
    a = example_oa.alphabet
    for b in product(*(range(q) for q in a.levels)):
        w = sum(1 for x in b if x)
        if 1 <= w <= 3:
            assert abs(character_sum(example_oa, b)) < 1e-9 * 64


def test_example_design(example_oa):
    ok, profile = is_algebraic_design(example_oa, 3)
    assert ok and profile.max_modulus[0] == 64
    ok4, profile4 = is_algebraic_design(example_oa, 4)
    assert not ok4
    assert profile4.max_modulus[4] == pytest.approx(64)


def test_two_word_code_design():
    C = ArrayMultiset.from_rows(MixedAlphabet((2, 2)), [(0, 0), (1, 1)])
    assert is_algebraic_design(C, 1)[0]
    assert not is_algebraic_design(C, 2)[0]
    assert is_algebraic_design(C, 0)[0]


def test_character_sum_against_direct_evaluation():
    rng = np.random.default_rng(2)
    for _ in range(40):
        a = random_alphabet(rng)
        C = random_multiset(rng, a, "random")
        b = tuple(int(rng.integers(q)) for q in a.levels)
        direct = sum(m * character_value(a.levels, b, x) for x, m in C.counts.items())
        got = character_sum(C, b)
        assert abs(got - direct) < 1e-9 * C.N
        assert abs(got) <= C.N + 1e-9


def test_profile_matches_character_sums():
    rng = np.random.default_rng(4)
    for _ in range(20):
        a = random_alphabet(rng, max_size=40)
        C = random_multiset(rng, a, "cosets")
        profile = fourier_profile(C)
        best = [0.0] * (a.n + 1)
        for b in product(*(range(q) for q in a.levels)):
            w = sum(1 for x in b if x)
            best[w] = max(best[w], abs(character_sum(C, b)))
        assert np.allclose(profile.max_modulus, best, atol=1e-9 * C.N)


def test_character_sum_additive():
    rng = np.random.default_rng(6)
    a = MixedAlphabet((3, 4, 2))
    for _ in range(10):
        A = random_multiset(rng, a, "random")
        B = random_multiset(rng, a, "random")
        union = dict(A.counts)
        for w, m in B.counts.items():
            union[w] = union.get(w, 0) + m
        U = ArrayMultiset(a, union)
        b = tuple(int(rng.integers(q)) for q in a.levels)
        assert abs(character_sum(U, b) - character_sum(A, b) - character_sum(B, b)) < 1e-9


def test_design_argument_checks(example_oa):
    with pytest.raises(ValueError):
        is_algebraic_design(example_oa, 6)
    with pytest.raises(ValueError):
        is_algebraic_design(example_oa, 2, tol=0)


def test_design_agrees_with_strength_small():
    rng = np.random.default_rng(9)
    for i in range(60):
        a = random_alphabet(rng)
        C = random_multiset(rng, a, ["random", "cosets"][i % 2])
        for t in range(a.n + 1):
            assert check_strength(C, t).holds == is_algebraic_design(C, t)[0]
