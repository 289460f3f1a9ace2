"""The Hamming multigraph H(q1*...*qn) and radius-1 complete regularity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .alphabet import ArrayMultiset, MixedAlphabet, Word

# Vertex scans in check_cr1 refuse larger graphs unless forced.
VERTEX_GUARD = 2**24


class GuardError(RuntimeError):
    """An enumeration would exceed its configured size guard."""


@dataclass(frozen=True)
class MultigraphParams:
    alphabet: MixedAlphabet
    Q: int
    k: int
    mu: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.alphabet.n

    def eigenvalues(self) -> list[int]:
        return [self.k - w * self.Q for w in range(self.n + 1)]


@dataclass(frozen=True)
class CrReport:
    is_cr: bool
    b: int | None
    c: int | None
    violator: Word | None = None
    violator_count: int | None = None


def graph_params(alphabet: MixedAlphabet) -> MultigraphParams:
    Q = alphabet.Q
    mu = tuple(Q // q for q in alphabet.levels)
    k = sum(m * (q - 1) for m, q in zip(mu, alphabet.levels))
    return MultigraphParams(alphabet, Q, k, mu)


def eigenvalue(params: MultigraphParams, w: int) -> int:
    """theta_w = k - wQ, the eigenvalue of every weight-w character."""
    if not 0 <= w <= params.n:
        raise ValueError(f"weight w={w} out of range [0, {params.n}]")
    return params.k - w * params.Q


def weighted_neighbors(params: MultigraphParams, v: Sequence[int]) -> Iterator[tuple[Word, int]]:
    v = params.alphabet.validate(v)
    for i, (q, m) in enumerate(zip(params.alphabet.levels, params.mu)):
        for a in range(q):
            if a != v[i]:
                yield v[:i] + (a,) + v[i + 1:], m


def _as_simple_set(C, alphabet: MixedAlphabet) -> set[Word]:
    if isinstance(C, ArrayMultiset):
        if any(m > 1 for m in C.counts.values()):
            raise ValueError("CR-1 is defined for simple sets; C has repeated rows")
        return set(C.counts)
    return {alphabet.validate(w) for w in C}


def edges_into(members: np.ndarray, params: MultigraphParams) -> np.ndarray:
    """For every vertex, the edge multiplicity it sends into the set.

    ``members`` is a 0/1 tensor of shape ``alphabet.levels``. A vertex's
    position-i neighbours are its axis-i line minus itself.
    """
    f = members.astype(np.int64)
    out = np.zeros_like(f)
    for axis, m in enumerate(params.mu):
        out += m * (f.sum(axis=axis, keepdims=True) - f)
    return out


def check_cr1(C: ArrayMultiset | Iterable[Sequence[int]], params: MultigraphParams,
              force: bool = False) -> CrReport:
    """Decide whether C is a {b; c}-CR code of covering radius 1.

    Every member must send exactly b edges (with multiplicity) out of C and
    every non-member exactly c edges into C, with b, c > 0. The first
    violating vertex in ascending mixed-radix order is reported.
    """
    alphabet = params.alphabet
    S = _as_simple_set(C, alphabet)
    if not S:
        raise ValueError("CR-1 is undefined for the empty set")
    if len(S) == alphabet.size:
        raise ValueError("CR-1 is undefined for C = V (no complement)")
    if alphabet.size > VERTEX_GUARD and not force:
        raise GuardError(f"|V| = {alphabet.size} exceeds vertex guard {VERTEX_GUARD}")

    f = np.zeros(alphabet.levels, dtype=bool)
    f[tuple(np.array(sorted(S), dtype=np.int64).T)] = True
    inside = edges_into(f, params).ravel()
    flat = f.ravel()
    # edges leaving C for members, edges entering C for non-members
    counts = np.where(flat, params.k - inside, inside)
    first_member = int(np.argmax(flat))
    first_other = int(np.argmax(~flat))
    b = int(counts[first_member])
    c = int(counts[first_other])
    ref = np.where(flat, b, c)
    bad = np.flatnonzero(counts != ref)
    if bad.size:
        idx = int(bad[0])
        return CrReport(False, b, c, alphabet.word(idx), int(counts[idx]))
    return CrReport(b > 0 and c > 0, b, c)


def is_independent(C: ArrayMultiset | Iterable[Sequence[int]], params: MultigraphParams) -> bool:
    """True iff no two members of C are at Hamming distance 1."""
    if isinstance(C, ArrayMultiset):
        words = list(C.counts)
    else:
        words = list({params.alphabet.validate(w) for w in C})
    for i in range(params.n):
        seen = set()
        for w in words:
            key = w[:i] + w[i + 1:]
            if key in seen:
                return False
            seen.add(key)
    return True
