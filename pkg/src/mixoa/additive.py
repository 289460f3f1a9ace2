"""Additive mixed-level arrays over GF(p) given by block-structured check matrices.

A check matrix H has its columns split into blocks of sizes 1..s; the null
space of H, read block by block, is an array over the alphabet with one
position of size p^i per size-i block. :func:`additive_audit` evaluates six
conditions on H that must be simultaneously true or simultaneously false:

* ``i``     C attains the mixed Bierbrauer-Friedman bound at some strength t
* ``i'``    C has strength t = (mu + k)/p^s - 1
* ``ii``    C is a {k; mu}-CR code in the Hamming multigraph
* ``iii``   the row space of H is an alphabet-effective one-weight code of weight mu p^(m-s)
* ``iv``    the block spans, block i taken p^(s-i) times, cover GF(p)^m \\ {0} exactly mu times
* ``v``     their duals cover GF(p)^m \\ {0} exactly nu = n - p^(m-s) mu times
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy as np

from .alphabet import ArrayMultiset, FormatError, MixedAlphabet, check_strength
from .bounds import bf_mixed_value
from .gfp import Subspace, is_prime, null_space, rank, span_elements, vector_index
from .multigraph import CrReport, GuardError, check_cr1, graph_params

SOLUTION_GUARD = 2**24
AMBIENT_GUARD = 2**20

ASSERTIONS = ("i", "i'", "ii", "iii", "iv", "v")


@dataclass(frozen=True, eq=False)
class CheckMatrix:
    p: int
    block_sizes: tuple[int, ...]
    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        sizes = tuple(int(i) for i in self.block_sizes)
        if not sizes or any(i < 1 for i in sizes):
            raise ValueError(f"block sizes must be positive, got {sizes}")
        E = np.array(self.entries, dtype=np.int64)
        if E.ndim != 2 or E.shape[0] < 1:
            raise ValueError("check matrix needs at least one row")
        if E.shape[1] != sum(sizes):
            raise ValueError(f"{E.shape[1]} columns but blocks sum to {sum(sizes)}")
        if ((E < 0) | (E >= self.p)).any():
            raise ValueError(f"entries must lie in [0, {self.p})")
        r = rank(E, self.p)
        if r != E.shape[0]:
            raise ValueError(f"check matrix has rank {r}, expected full row rank {E.shape[0]}")
        E.setflags(write=False)
        object.__setattr__(self, "block_sizes", sizes)
        object.__setattr__(self, "entries", E)

    @property
    def m(self) -> int:
        return self.entries.shape[0]

    @property
    def s(self) -> int:
        return max(self.block_sizes)

    @property
    def length(self) -> int:
        """Number of blocks, i.e. positions of the mixed array."""
        return len(self.block_sizes)

    def block_counts(self) -> dict[int, int]:
        """n_i: number of blocks of each size i = 1..s."""
        return {i: self.block_sizes.count(i) for i in range(1, self.s + 1)}

    def block_columns(self, j: int) -> np.ndarray:
        start = sum(self.block_sizes[:j])
        return self.entries[:, start:start + self.block_sizes[j]]

    def alphabet(self) -> MixedAlphabet:
        return MixedAlphabet(tuple(self.p**i for i in self.block_sizes))

    def degree(self) -> int:
        """k = sum_i n_i (p^s - p^(s-i))."""
        p, s = self.p, self.s
        return sum(p**s - p**(s - i) for i in self.block_sizes)

    def mu(self) -> Fraction:
        return Fraction(self.degree(), self.p**self.m - 1)


def parse_check_matrix(text: str) -> CheckMatrix:
    """Parse ``p <prime> m <rows>`` / ``blocks i1 ... iB`` / m rows of digits."""
    lines = [s for s in (x.split("#", 1)[0].strip() for x in text.splitlines()) if s]
    if len(lines) < 2:
        raise FormatError("check-matrix file needs a header, a blocks line and rows")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "p" or head[2] != "m":
        raise FormatError("first line must be 'p <prime> m <rows>'")
    try:
        p, m = int(head[1]), int(head[3])
        blocks_line = lines[1].split()
        if blocks_line[0] != "blocks":
            raise FormatError("second line must be 'blocks i1 i2 ... iB'")
        sizes = tuple(int(x) for x in blocks_line[1:])
        rows = [[int(x) for x in line.split()] for line in lines[2:]]
    except ValueError as exc:
        raise FormatError(f"non-integer token: {exc}") from None
    if len(rows) != m:
        raise FormatError(f"header says m={m} rows, found {len(rows)}")
    if any(len(r) != sum(sizes) for r in rows):
        raise FormatError(f"every row must have {sum(sizes)} entries")
    try:
        return CheckMatrix(p, sizes, np.array(rows, dtype=np.int64))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def read_check_matrix(path: str | Path) -> CheckMatrix:
    return parse_check_matrix(Path(path).read_text())


def format_check_matrix(H: CheckMatrix) -> str:
    out = [f"p {H.p} m {H.m}", "blocks " + " ".join(map(str, H.block_sizes))]
    for row in H.entries:
        parts, start = [], 0
        for i in H.block_sizes:
            parts.append(" ".join(map(str, row[start:start + i])))
            start += i
        out.append("   ".join(parts))
    return "\n".join(out) + "\n"


def blocks_to_words(H: CheckMatrix, vectors: np.ndarray) -> np.ndarray:
    """Read each size-i block of every vector as a big-endian base-p symbol in [0, p^i)."""
    out = np.empty((vectors.shape[0], H.length), dtype=np.int64)
    start = 0
    for j, i in enumerate(H.block_sizes):
        out[:, j] = vector_index(vectors[:, start:start + i], H.p)
        start += i
    return out


def null_space_array(H: CheckMatrix, force: bool = False) -> ArrayMultiset:
    dim = H.entries.shape[1] - H.m
    if H.p**dim > SOLUTION_GUARD and not force:
        raise GuardError(f"null space has {H.p}^{dim} words, above guard {SOLUTION_GUARD}")
    solutions = span_elements(null_space(H.entries, H.p), H.p)
    words = blocks_to_words(H, solutions)
    return ArrayMultiset(H.alphabet(), {tuple(int(x) for x in w): 1 for w in words})


def block_span(H: CheckMatrix, j: int) -> Subspace:
    """Span of the columns of block j (0-based) as a subspace of GF(p)^m."""
    if not 0 <= j < H.length:
        raise IndexError(f"block index {j} out of range")
    return Subspace.span(H.block_columns(j).T, H.p, H.m)


def _ambient_guard(H: CheckMatrix, force: bool):
    if H.p**H.m > AMBIENT_GUARD and not force:
        raise GuardError(f"GF({H.p})^{H.m} exceeds guard {AMBIENT_GUARD}")


def _coverage(H: CheckMatrix, spaces: Sequence[Subspace], weights: Sequence[int]) -> np.ndarray:
    cover = np.zeros(H.p**H.m, dtype=np.int64)
    for S, w in zip(spaces, weights):
        cover[vector_index(S.elements(), H.p)] += w
    return cover


def _violations(H: CheckMatrix, cover: np.ndarray, target: Fraction) -> dict[tuple[int, ...], int]:
    out = {}
    for idx in range(1, cover.size):
        if cover[idx] != target:
            digits = np.unravel_index(idx, (H.p,) * H.m)
            out[tuple(int(d) for d in digits)] = int(cover[idx])
    return out


@dataclass(frozen=True)
class MultispreadReport:
    mu: Fraction
    is_mu_fold: bool
    lam: int
    dims: tuple[int, ...]
    violations: dict[tuple[int, ...], int]


def multispread_check(H: CheckMatrix, force: bool = False) -> MultispreadReport:
    """Does M = {p^(s-i) x H_(i,j)} cover every nonzero vector exactly mu times?"""
    _ambient_guard(H, force)
    p, s = H.p, H.s
    spaces = [block_span(H, j) for j in range(H.length)]
    weights = [p**(s - i) for i in H.block_sizes]
    cover = _coverage(H, spaces, weights)
    mu = H.mu()
    viol = _violations(H, cover, mu)
    lam = sum(p**(s - i) - 1 for i in H.block_sizes)
    return MultispreadReport(mu, mu.denominator == 1 and mu > 0 and not viol, lam,
                             tuple(S.dim for S in spaces), viol)


@dataclass(frozen=True)
class DualPartitionReport:
    nu: Fraction
    is_nu_fold: bool
    dual_dims: tuple[int, ...]
    violations: dict[tuple[int, ...], int]


def dual_partition_check(H: CheckMatrix, force: bool = False) -> DualPartitionReport:
    """Do the duals of the block spans cover every nonzero vector exactly nu times?"""
    _ambient_guard(H, force)
    duals = [block_span(H, j).dual() for j in range(H.length)]
    cover = _coverage(H, duals, [1] * len(duals))
    nu = H.length - Fraction(H.p) ** (H.m - H.s) * H.mu()
    viol = _violations(H, cover, nu)
    ok = nu.denominator == 1 and nu >= 0 and not viol
    return DualPartitionReport(nu, ok, tuple(S.dim for S in duals), viol)


@dataclass(frozen=True)
class OneWeightReport:
    target_weight: Fraction
    weights: tuple[int, ...]
    one_weight: bool
    alphabet_effective: bool

    @property
    def holds(self) -> bool:
        return (self.one_weight and self.alphabet_effective
                and len(self.weights) == 1 and self.weights[0] == self.target_weight)


def one_weight_check(H: CheckMatrix, force: bool = False) -> OneWeightReport:
    """Block weights of all nonzero codewords of the row space of H."""
    _ambient_guard(H, force)
    words = blocks_to_words(H, span_elements(H.entries, H.p))
    # row 0 is the zero combination; H has full rank so no other row is zero
    weights = (words[1:] != 0).sum(axis=1)
    distinct = tuple(sorted(set(int(w) for w in weights)))
    effective = all(np.unique(words[:, j]).size == H.p**i for j, i in enumerate(H.block_sizes))
    target = H.mu() * Fraction(H.p) ** (H.m - H.s)
    return OneWeightReport(target, distinct, len(distinct) == 1, effective)


@dataclass(frozen=True)
class AdditiveAuditReport:
    p: int
    m: int
    s: int
    block_sizes: tuple[int, ...]
    N: int
    k: int
    mu: Fraction
    t: Fraction
    nu: Fraction
    weight: Fraction
    parameters_compatible: bool
    verdicts: dict[str, bool]
    attained_t: int | None
    cr: CrReport
    multispread: MultispreadReport
    dual: DualPartitionReport
    one_weight: OneWeightReport

    @property
    def consistent(self) -> bool:
        return len(set(self.verdicts.values())) == 1


def additive_audit(H: CheckMatrix, force: bool = False) -> AdditiveAuditReport:
    p, s, m = H.p, H.s, H.m
    k = H.degree()
    mu = H.mu()
    t = (mu + k) / p**s - 1
    nu = H.length - Fraction(p) ** (m - s) * mu
    weight = mu * Fraction(p) ** (m - s)

    C = null_space_array(H, force=force)
    alphabet = C.alphabet
    params = graph_params(alphabet)
    assert params.k == k, "graph degree disagrees with the block-size formula"

    # (i): search every strength for exact attainment, independent of the formula for t
    attained = None
    for tt in range(alphabet.n + 1):
        if C.N == bf_mixed_value(alphabet, tt) and check_strength(C, tt).holds:
            attained = tt
            break
    compatible = t.denominator == 1 and 0 <= t <= alphabet.n
    v_i_prime = compatible and check_strength(C, int(t)).holds

    cr = check_cr1(C, params, force=force)
    v_ii = cr.is_cr and cr.b == k and cr.c == mu

    ow = one_weight_check(H, force=force)
    ms = multispread_check(H, force=force)
    dual = dual_partition_check(H, force=force)

    verdicts = {
        "i": attained is not None,
        "i'": bool(v_i_prime),
        "ii": bool(v_ii),
        "iii": ow.holds,
        "iv": ms.is_mu_fold,
        "v": dual.is_nu_fold,
    }
    return AdditiveAuditReport(p, m, s, H.block_sizes, C.N, k, mu, t, nu, weight,
                               compatible, verdicts, attained, cr, ms, dual, ow)
