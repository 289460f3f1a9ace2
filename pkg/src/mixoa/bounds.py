"""Lower bounds on the size of (mixed-level) orthogonal arrays.

Everything here is exact rational arithmetic; attainment is an equality test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from .alphabet import ArrayMultiset, MixedAlphabet, check_strength, is_simple, q_t_modulus
from .multigraph import CrReport, check_cr1, eigenvalue, graph_params, is_independent


@dataclass(frozen=True)
class BoundReport:
    name: str
    raw: Fraction | None
    applicable: bool
    rounded: int | None
    n: int
    t: int
    harmonic_mean: Fraction
    q_min: int
    q_mean: Fraction
    q_max: int


def _check_t(alphabet: MixedAlphabet, t: int, low: int = 0):
    if not low <= t <= alphabet.n:
        raise ValueError(f"t={t} out of range [{low}, {alphabet.n}]")


def _means(alphabet: MixedAlphabet) -> tuple[Fraction, Fraction]:
    n = alphabet.n
    inv = sum(Fraction(1, q) for q in alphabet.levels) / n
    return 1 / inv, Fraction(sum(alphabet.levels), n)


def _report(name, alphabet, t, raw, applicable) -> BoundReport:
    hm, am = _means(alphabet)
    rounded = rounded_bound(alphabet, t, raw) if applicable and t >= 1 else None
    return BoundReport(name, raw, applicable, rounded, alphabet.n, t, hm,
                       min(alphabet.levels), am, max(alphabet.levels))


def bf_mixed_value(alphabet: MixedAlphabet, t: int) -> Fraction:
    """prod(q_i) * (1 - (1 - 1/q) n/(t+1)), q the harmonic mean of the levels."""
    _check_t(alphabet, t)
    n = alphabet.n
    inv_q = sum(Fraction(1, q) for q in alphabet.levels) / n
    return alphabet.size * (1 - (1 - inv_q) * Fraction(n, t + 1))


def bf_mixed(alphabet: MixedAlphabet, t: int) -> BoundReport:
    raw = bf_mixed_value(alphabet, t)
    return _report("bf_mixed", alphabet, t, raw, True)


def bf_pure(n: int, q: int, t: int) -> BoundReport:
    """The classical pure-level bound q^n (1 - (1 - 1/q) n/(t+1))."""
    alphabet = MixedAlphabet((q,) * n)
    _check_t(alphabet, t)
    raw = Fraction(q) ** n * (1 - (1 - Fraction(1, q)) * Fraction(n, t + 1))
    return _report("bf_pure", alphabet, t, raw, True)


def diestelkamp(alphabet: MixedAlphabet, t: int) -> BoundReport:
    """q_m^n (1 - (n q~ - n)/(n q~ + (t+1-n) q_M)), when that denominator is positive."""
    _check_t(alphabet, t, low=1)
    n = alphabet.n
    q_min, q_max = min(alphabet.levels), max(alphabet.levels)
    n_mean = Fraction(sum(alphabet.levels))
    denom = n_mean + (t + 1 - n) * q_max
    if denom <= 0:
        return _report("diestelkamp", alphabet, t, None, False)
    raw = Fraction(q_min) ** n * (1 - (n_mean - n) / denom)
    return _report("diestelkamp", alphabet, t, raw, True)


def generic_design_bound(k: int, theta: int, V_size: int) -> Fraction:
    """|V| * (-theta) / (k - theta): lower bound on an algebraic design in a k-regular graph."""
    if k <= theta:
        raise ValueError(f"need k > theta, got k={k}, theta={theta}")
    return Fraction(V_size * -theta, k - theta)


def rounded_bound(alphabet: MixedAlphabet, t: int, raw: Fraction) -> int:
    """Round a lower bound up to the next multiple of Q_t (at least Q_t)."""
    Qt = q_t_modulus(alphabet, t)
    if raw <= 0:
        return Qt
    return ceil(Fraction(raw) / Qt) * Qt


@dataclass(frozen=True)
class TightnessVerdict:
    N: int
    t: int
    bound: Fraction
    attains: bool
    simple: bool | None = None
    independent: bool | None = None
    expected_b: int | None = None
    expected_c: int | None = None
    cr: CrReport | None = field(default=None)

    @property
    def agrees(self) -> bool | None:
        """Attaining arrays must be simple, independent {k; -theta_(t+1)}-CR codes."""
        if not self.attains:
            return None
        return bool(self.simple and self.independent and self.cr is not None
                    and self.cr.is_cr and self.cr.b == self.expected_b
                    and self.cr.c == self.expected_c)


def tightness_verdict(C: ArrayMultiset, t: int, force: bool = False) -> TightnessVerdict:
    if not check_strength(C, t).holds:
        raise ValueError(f"C is not an orthogonal array of strength {t}")
    bound = bf_mixed_value(C.alphabet, t)
    attains = C.N == bound
    if not attains:
        return TightnessVerdict(C.N, t, bound, False)
    params = graph_params(C.alphabet)
    k = params.k
    c = -eigenvalue(params, t + 1) if t < C.alphabet.n else None
    simple = is_simple(C)
    cr = None
    if simple and len(C.counts) < C.alphabet.size:
        cr = check_cr1(C, params, force=force)
    return TightnessVerdict(C.N, t, bound, True, simple, is_independent(C, params), k, c, cr)

