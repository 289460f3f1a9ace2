"""Polynomial refinement of the Bierbrauer-Friedman bound in H(n, q).

For the Hamming graph the distance-i graph has adjacency K^(i)(A), where
K^(i)(theta) = P_i(((q-1)n - theta)/q) and P_i is the Krawtchouk
polynomial. For any nonnegative combination P = sum_i alpha_i K^(i) with
mu = max_{j > t} P(theta_j) < 0, an algebraic t-design C satisfies
|C|/|V| >= -mu / (P(theta_0) - mu). The best such P is found by an LP.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, isqrt, sqrt
from typing import Iterable, Mapping, Sequence

from .simplex import LPError, linprog_exact


@dataclass(frozen=True)
class KrawtchoukContext:
    n: int
    q: int

    @property
    def eigenvalues(self) -> tuple[int, ...]:
        return tuple((self.q - 1) * self.n - self.q * j for j in range(self.n + 1))

    def K(self, i: int, theta: int) -> Fraction:
        return distance_poly_value(i, theta, self.n, self.q)


def gbinom(a: int, j: int) -> int:
    """Generalised binomial coefficient a(a-1)...(a-j+1)/j! for integer a."""
    if j < 0:
        return 0
    num = 1
    for r in range(j):
        num *= a - r
    return num // factorial(j)


def krawtchouk(w: int, x: int, n: int, q: int) -> Fraction:
    if not 0 <= w <= n:
        raise ValueError(f"degree w={w} out of range [0, {n}]")
    total = sum((-1) ** j * (q - 1) ** (w - j) * gbinom(x, j) * gbinom(n - x, w - j)
                for j in range(w + 1))
    return Fraction(total)


def distance_poly_value(i: int, theta: int, n: int, q: int) -> Fraction:
    """K^(i)(theta): the Krawtchouk polynomial P_i at P_1^{-1}(theta)."""
    j, r = divmod((q - 1) * n - theta, q)
    if r:
        raise ValueError(f"theta={theta} is not on the eigenvalue lattice of H({n},{q})")
    return krawtchouk(i, j, n, q)


@dataclass(frozen=True)
class PolyBoundResult:
    n: int
    q: int
    t: int
    alpha: tuple[Fraction, ...]  # alpha_1 .. alpha_n
    values: tuple[Fraction, ...]  # P(theta_j), j = 0..n
    mu_star: Fraction
    unique_maximizer: bool

    @property
    def nontrivial(self) -> bool:
        return self.mu_star < 0

    @property
    def degree(self) -> Fraction:
        return self.values[0]

    @property
    def bound_ratio(self) -> Fraction | None:
        if not self.nontrivial:
            return None
        return -self.mu_star / (self.values[0] - self.mu_star)

    @property
    def bound_N(self) -> Fraction | None:
        r = self.bound_ratio
        return None if r is None else r * self.q**self.n


def _alpha_vector(alpha: Sequence | Mapping[int, Fraction], n: int) -> tuple[Fraction, ...]:
    if isinstance(alpha, Mapping):
        vec = [Fraction(0)] * n
        for i, a in alpha.items():
            if not 1 <= i <= n:
                raise ValueError(f"degree {i} out of range [1, {n}]")
            vec[i - 1] = Fraction(a)
    else:
        vec = [Fraction(a) for a in alpha]
        if len(vec) > n:
            raise ValueError(f"at most {n} coefficients allowed")
        vec += [Fraction(0)] * (n - len(vec))
    return tuple(vec)


def eval_poly_bound(alpha: Sequence | Mapping[int, Fraction], n: int, q: int, t: int) -> PolyBoundResult:
    """Evaluate the bound for P = sum alpha_i K^(i); ``alpha[0]`` is alpha_1."""
    if not 0 <= t < n:
        raise ValueError(f"need 0 <= t < n, got t={t}, n={n}")
    vec = _alpha_vector(alpha, n)
    if any(a < 0 for a in vec) or not any(vec):
        raise ValueError("coefficients must be nonnegative and not all zero")
    ctx = KrawtchoukContext(n, q)
    values = tuple(sum((a * ctx.K(i, th) for i, a in enumerate(vec, start=1) if a), Fraction(0))
                   for th in ctx.eigenvalues)
    tail = values[t + 1:]
    mu = max(tail)
    at = values[t + 1]
    unique = at == mu and all(v != at for j, v in enumerate(values) if j != t + 1)
    return PolyBoundResult(n, q, t, vec, values, mu, unique)


def lp_bound(n: int, q: int, t: int, degrees: Iterable[int]) -> PolyBoundResult:
    """Minimise mu over alpha >= 0 with P(theta_0) = 1 and P(theta_j) <= mu for j > t."""
    degrees = sorted(set(degrees))
    if not degrees:
        raise ValueError("degrees must be nonempty")
    if any(not 1 <= i <= n for i in degrees):
        raise ValueError(f"degrees must lie in [1, {n}]")
    if not 0 <= t < n:
        raise ValueError(f"need 0 <= t < n, got t={t}, n={n}")
    ctx = KrawtchoukContext(n, q)
    thetas = ctx.eigenvalues
    d = len(degrees)
    # variables: alpha_i for i in degrees, then mu = mu_plus - mu_minus
    c = [0] * d + [1, -1]
    A_ub = [[ctx.K(i, thetas[j]) for i in degrees] + [-1, 1] for j in range(t + 1, n + 1)]
    b_ub = [0] * len(A_ub)
    A_eq = [[ctx.K(i, thetas[0]) for i in degrees] + [0, 0]]
    res = linprog_exact(c, A_ub, b_ub, A_eq, [1])
    if res.status != "optimal":
        raise LPError(f"polynomial LP returned {res.status}")
    alpha = {i: a for i, a in zip(degrees, res.x[:d])}
    out = eval_poly_bound(alpha, n, q, t)
    if out.mu_star != res.objective or out.degree != 1:
        raise LPError("LP optimum failed exact re-evaluation")
    return out


def sqrt3_rational(m: int, scale: int = 10**12) -> Fraction:
    """A rational within m/(3 * scale) of m / sqrt(3)."""
    return Fraction(m * isqrt(3 * scale * scale), 3 * scale)


def cubic_alpha(m: int, beta: Fraction | None = None) -> tuple[Fraction, ...]:
    """Coefficients (alpha_1, alpha_2, alpha_3) of K^(3) + beta K^(2) + alpha K^(1) in H(2m, 2).

    With alpha = beta^2/2 + m - 1/3 one gets 6P(x) = (x + beta)^3 - beta^3 - 6 beta m,
    which increases on the whole real line; beta defaults to m/sqrt(3) rounded.
    """
    if beta is None:
        beta = sqrt3_rational(m)
    return (beta * beta / 2 + m - Fraction(1, 3), Fraction(beta), Fraction(1))


def cubic_closed_form(m: int) -> float:
    """1 / (m (5/sqrt(3) + 2)); note m times this is about 0.204634."""
    if m < 1:
        raise ValueError("m must be positive")
    return 1.0 / (m * (5.0 / sqrt(3.0) + 2.0))
