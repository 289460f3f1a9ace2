"""Character sums over Z_q1 x ... x Z_qn and the algebraic t-design test.

The characters chi_b(x) = prod_i exp(2 pi i b_i x_i / q_i) form an
eigenbasis of H(q1*...*qn); chi_b lies in the eigenspace of weight
w = #{i : b_i != 0}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .alphabet import ArrayMultiset, MixedAlphabet
from .multigraph import GuardError

CHARACTER_GUARD = 10**7
DEFAULT_TOL = 1e-6


@dataclass(frozen=True)
class FourierProfile:
    """Largest |(f_C, chi_b)| among characters of each weight 0..n."""

    N: int
    max_modulus: tuple[float, ...]

    def relative(self) -> tuple[float, ...]:
        return tuple(x / self.N for x in self.max_modulus)


def character_exponents(alphabet: MixedAlphabet, b: Sequence[int], rows: np.ndarray) -> np.ndarray:
    """Exponent of chi_b at each row, as an integer mod Q.

    chi_b(x) = exp(2 pi i e / Q) with e = sum_i b_i x_i (Q / q_i) mod Q.
    """
    Q = alphabet.Q
    scale = np.array([b_i * (Q // q) for b_i, q in zip(b, alphabet.levels)], dtype=np.int64)
    return (rows @ scale) % Q


def character_sum(C: ArrayMultiset, b: Sequence[int]) -> complex:
    b = C.alphabet.validate(b)
    rows, mult = C.arrays()
    e = character_exponents(C.alphabet, b, rows)
    if not any(b):
        return complex(C.N)
    roots = np.exp(2j * np.pi * np.arange(C.alphabet.Q) / C.alphabet.Q)
    return complex(np.dot(mult, roots[e]))


def weight_tensor(alphabet: MixedAlphabet) -> np.ndarray:
    """Number of nonzero coordinates of every character index b."""
    w = np.zeros(alphabet.levels, dtype=np.int64)
    for axis, q in enumerate(alphabet.levels):
        shape = [1] * alphabet.n
        shape[axis] = q
        w = w + (np.arange(q) != 0).reshape(shape)
    return w


def fourier_profile(C: ArrayMultiset) -> FourierProfile:
    """All character sums at once via an n-dimensional DFT of f_C.

    numpy's forward transform uses exp(-2 pi i ...), i.e. it returns the
    complex conjugates of the character sums; only moduli are kept.
    """
    alphabet = C.alphabet
    if alphabet.size > CHARACTER_GUARD:
        raise GuardError(f"{alphabet.size} characters exceed guard {CHARACTER_GUARD}")
    spectrum = np.abs(np.fft.fftn(C.indicator().astype(float)))
    weights = weight_tensor(alphabet)
    maxima = np.zeros(alphabet.n + 1)
    np.maximum.at(maxima, weights.ravel(), spectrum.ravel())
    # the trivial character sums multiplicities exactly
    maxima[0] = C.N
    return FourierProfile(C.N, tuple(float(x) for x in maxima))


def is_algebraic_design(C: ArrayMultiset, t: int, tol: float = DEFAULT_TOL) -> tuple[bool, FourierProfile]:
    if not 0 <= t <= C.alphabet.n:
        raise ValueError(f"t={t} out of range [0, {C.alphabet.n}]")
    if tol <= 0:
        raise ValueError("tol must be positive")
    profile = fourier_profile(C)
    ok = all(profile.max_modulus[w] <= tol * C.N for w in range(1, t + 1))
    return ok, profile
