"""Mixed alphabets, array multisets and counting-based orthogonal-array strength."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm, prod
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

Word = tuple[int, ...]


class FormatError(ValueError):
    """Raised for malformed level specs and OA files."""


@dataclass(frozen=True)
class MixedAlphabet:
    levels: tuple[int, ...]

    def __post_init__(self):
        levels = tuple(int(q) for q in self.levels)
        if not levels:
            raise ValueError("alphabet needs at least one position")
        if any(q < 2 for q in levels):
            raise ValueError(f"every level must be >= 2, got {levels}")
        object.__setattr__(self, "levels", levels)

    @property
    def n(self) -> int:
        return len(self.levels)

    @property
    def Q(self) -> int:
        return lcm(*self.levels)

    @property
    def size(self) -> int:
        return prod(self.levels)

    def is_pure(self) -> bool:
        return len(set(self.levels)) == 1

    def validate(self, word: Sequence[int]) -> Word:
        w = tuple(int(x) for x in word)
        if len(w) != self.n:
            raise ValueError(f"word {w} has length {len(w)}, alphabet has {self.n}")
        for x, q in zip(w, self.levels):
            if not 0 <= x < q:
                raise ValueError(f"symbol {x} out of range [0, {q}) in {w}")
        return w

    def strides(self) -> np.ndarray:
        """Mixed-radix place values, first position most significant."""
        s = np.ones(self.n, dtype=np.int64)
        for i in range(self.n - 2, -1, -1):
            s[i] = s[i + 1] * self.levels[i + 1]
        return s

    def index(self, word: Sequence[int]) -> int:
        return int(np.dot(self.strides(), np.asarray(word, dtype=np.int64)))

    def word(self, index: int) -> Word:
        out = []
        for q in reversed(self.levels):
            index, r = divmod(index, q)
            out.append(r)
        return tuple(reversed(out))

    def __str__(self):
        return format_levels(self)


_EXP_TOKEN = re.compile(r"^(\d+)\^(\d+)$")


def parse_levels(spec: str) -> MixedAlphabet:
    """Parse ``"2 4 4 4 4"`` or the grouped form ``"2^1 4^4"``.

    Both forms may be mixed; groups expand left to right.
    """
    levels: list[int] = []
    for tok in spec.replace(",", " ").split():
        m = _EXP_TOKEN.match(tok)
        if m:
            q, e = int(m.group(1)), int(m.group(2))
        elif tok.isdigit():
            q, e = int(tok), 1
        else:
            raise FormatError(f"bad level token {tok!r}")
        if q < 2:
            raise FormatError(f"level must be >= 2, got {q}")
        levels.extend([q] * e)
    if not levels:
        raise FormatError(f"level spec {spec!r} has zero total length")
    return MixedAlphabet(tuple(levels))


def format_levels(alphabet: MixedAlphabet) -> str:
    """Canonical grouped form: runs of equal consecutive levels become ``q^e``."""
    parts = []
    levels = alphabet.levels
    i = 0
    while i < len(levels):
        j = i
        while j < len(levels) and levels[j] == levels[i]:
            j += 1
        parts.append(f"{levels[i]}^{j - i}")
        i = j
    return " ".join(parts)


@dataclass(frozen=True)
class ArrayMultiset:
    """A multiset of rows over a mixed alphabet.

    ``counts`` is kept sorted by row so iteration order is deterministic.
    """

    alphabet: MixedAlphabet
    counts: Mapping[Word, int] = field(repr=False)

    def __post_init__(self):
        items = sorted((tuple(int(x) for x in row), int(m)) for row, m in self.counts.items())
        if not items:
            raise ValueError("array multiset must be nonempty")
        n = self.alphabet.n
        if any(len(row) != n for row, _ in items):
            bad = next(row for row, _ in items if len(row) != n)
            raise ValueError(f"word {bad} has length {len(bad)}, alphabet has {n}")
        rows = np.array([row for row, _ in items], dtype=np.int64)
        out_of_range = (rows < 0) | (rows >= np.array(self.alphabet.levels))
        if out_of_range.any():
            self.alphabet.validate(items[int(np.flatnonzero(out_of_range.any(axis=1))[0])][0])
        for row, mult in items:
            if mult < 1:
                raise ValueError(f"multiplicity of {row} must be positive, got {mult}")
        object.__setattr__(self, "counts", dict(items))

    @classmethod
    def from_rows(cls, alphabet: MixedAlphabet, rows: Iterable[Sequence[int]]) -> "ArrayMultiset":
        return cls(alphabet, Counter(tuple(int(x) for x in r) for r in rows))

    @property
    def N(self) -> int:
        return sum(self.counts.values())

    def __len__(self):
        return self.N

    def rows(self) -> list[Word]:
        """Distinct rows in ascending order."""
        return list(self.counts)

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Distinct rows as an (R, n) int array plus their multiplicities."""
        rows = np.array(list(self.counts), dtype=np.int64).reshape(-1, self.alphabet.n)
        mult = np.fromiter(self.counts.values(), dtype=np.int64, count=len(self.counts))
        return rows, mult

    def indicator(self) -> np.ndarray:
        """Multiplicity function on V as a tensor of shape ``alphabet.levels``."""
        f = np.zeros(self.alphabet.levels, dtype=np.int64)
        rows, mult = self.arrays()
        f[tuple(rows.T)] = mult
        return f


@dataclass(frozen=True)
class StrengthReport:
    t: int
    holds: bool
    columns: tuple[int, ...] | None = None
    values: tuple[int, ...] | None = None
    observed: int | None = None
    expected: Fraction | None = None


def check_strength(C: ArrayMultiset, t: int) -> StrengthReport:
    """Test whether every t-column projection of C is uniform.

    On failure the witness is the lexicographically first (columns, values)
    pair whose count differs from N / prod(levels on those columns).
    """
    levels = C.alphabet.levels
    n = len(levels)
    if not 0 <= t <= n:
        raise ValueError(f"strength t={t} out of range [0, {n}]")
    if t == 0:
        return StrengthReport(t, True)
    rows, mult = C.arrays()
    N = C.N
    for cols in combinations(range(n), t):
        sub = MixedAlphabet(tuple(levels[c] for c in cols))
        expected = Fraction(N, sub.size)
        code = rows[:, cols] @ sub.strides()
        counts = np.bincount(code, weights=mult, minlength=sub.size).astype(np.int64)
        if expected.denominator == 1:
            bad = np.flatnonzero(counts != expected.numerator)
            if bad.size == 0:
                continue
            first = int(bad[0])
        else:
            first = 0
        return StrengthReport(t, False, cols, sub.word(first), int(counts[first]), expected)
    return StrengthReport(t, True)


def max_strength(C: ArrayMultiset) -> int:
    """Largest t for which C is an orthogonal array of strength t."""
    best = 0
    for t in range(1, C.alphabet.n + 1):
        if not check_strength(C, t).holds:
            break
        best = t
    return best


def is_simple(C: ArrayMultiset) -> bool:
    return all(m == 1 for m in C.counts.values())


def _factorize(x: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= x:
        while x % d == 0:
            out[d] = out.get(d, 0) + 1
            x //= d
        d += 1
    if x > 1:
        out[x] = out.get(x, 0) + 1
    return out


def q_t_modulus(alphabet: MixedAlphabet, t: int) -> int:
    """lcm of all products of t distinct levels; every OA(N, ., t) has Q_t | N.

    Computed prime by prime: the exponent of p in Q_t is the sum of the t
    largest exponents of p among the levels.
    """
    if not 1 <= t <= alphabet.n:
        raise ValueError(f"t={t} out of range [1, {alphabet.n}]")
    facts = [_factorize(q) for q in alphabet.levels]
    primes = sorted(set().union(*facts))
    out = 1
    for p in primes:
        exps = sorted((f.get(p, 0) for f in facts), reverse=True)
        out *= p ** sum(exps[:t])
    return out


# --- OA text format -------------------------------------------------------

def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_oa(text: str) -> ArrayMultiset:
    lines = [s for s in (_strip(x) for x in text.splitlines()) if s]
    if not lines:
        raise FormatError("empty OA file")
    head = lines[0].split()
    if head[0] != "levels" or len(head) < 2:
        raise FormatError("first line must be 'levels q1 q2 ... qn'")
    try:
        alphabet = MixedAlphabet(tuple(int(x) for x in head[1:]))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    counts: Counter = Counter()
    for lineno, line in enumerate(lines[1:], start=2):
        toks = line.split()
        mult = 1
        if len(toks) >= 2 and toks[-2] == "x":
            try:
                mult = int(toks[-1])
            except ValueError:
                raise FormatError(f"row {lineno}: bad multiplicity {toks[-1]!r}") from None
            toks = toks[:-2]
        try:
            row = alphabet.validate([int(x) for x in toks])
        except ValueError as exc:
            raise FormatError(f"row {lineno}: {exc}") from None
        if mult < 1:
            raise FormatError(f"row {lineno}: multiplicity must be positive")
        counts[row] += mult
    if not counts:
        raise FormatError("OA file has no rows")
    return ArrayMultiset(alphabet, counts)


def format_oa(C: ArrayMultiset) -> str:
    out = ["levels " + " ".join(map(str, C.alphabet.levels))]
    for row, mult in C.counts.items():
        line = " ".join(map(str, row))
        out.append(line if mult == 1 else f"{line} x {mult}")
    return "\n".join(out) + "\n"


def read_oa(path: str | Path) -> ArrayMultiset:
    return parse_oa(Path(path).read_text())


def full_factorial(alphabet: MixedAlphabet) -> ArrayMultiset:
    return ArrayMultiset(alphabet, {alphabet.word(i): 1 for i in range(alphabet.size)})
