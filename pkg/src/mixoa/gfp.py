"""Dense linear algebra over the prime field GF(p) on small integer arrays."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def rref(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p and the pivot columns."""
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        others = np.flatnonzero(A[:, c])
        others = others[others != r]
        if others.size:
            A[others] = (A[others] - np.outer(A[others, c], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(M: np.ndarray, p: int) -> int:
    return len(rref(M, p)[1])


def null_space(M: np.ndarray, p: int) -> np.ndarray:
    """Basis of {x : M x = 0} mod p, one basis vector per row."""
    M = np.asarray(M, dtype=np.int64)
    cols = M.shape[1]
    R, pivots = rref(M, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for j, f in enumerate(free):
        basis[j, f] = 1
        for i, pc in enumerate(pivots):
            basis[j, pc] = (-R[i, f]) % p
    return basis


def span_elements(basis: np.ndarray, p: int) -> np.ndarray:
    """All p^d linear combinations of the d rows of ``basis``, in lex order of coefficients."""
    basis = np.asarray(basis, dtype=np.int64)
    d, m = basis.shape
    if d == 0:
        return np.zeros((1, m), dtype=np.int64)
    coeffs = np.indices((p,) * d).reshape(d, -1).T
    return (coeffs @ basis) % p


def vector_index(vectors: np.ndarray, p: int) -> np.ndarray:
    """Big-endian base-p integer code of each row."""
    vectors = np.atleast_2d(np.asarray(vectors, dtype=np.int64))
    m = vectors.shape[1]
    place = p ** np.arange(m - 1, -1, -1, dtype=np.int64)
    return vectors @ place


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(p)^m kept as its canonical reduced echelon basis."""

    p: int
    m: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence[int]], p: int, m: int) -> "Subspace":
        V = np.array(list(vectors), dtype=np.int64).reshape(-1, m)
        R, _ = rref(V, p)
        return cls(p, m, tuple(tuple(int(x) for x in row) for row in R))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> np.ndarray:
        return np.array(self.basis, dtype=np.int64).reshape(self.dim, self.m)

    def __contains__(self, v) -> bool:
        v = np.asarray(v, dtype=np.int64) % self.p
        if self.dim == 0:
            return not v.any()
        return rank(np.vstack([self.matrix(), v]), self.p) == self.dim

    def elements(self) -> np.ndarray:
        return span_elements(self.matrix(), self.p)

    def dual(self) -> "Subspace":
        """Orthogonal complement under the standard dot product."""
        if self.dim == 0:
            return Subspace.span(np.eye(self.m, dtype=np.int64), self.p, self.m)
        return Subspace.span(null_space(self.matrix(), self.p), self.p, self.m)
