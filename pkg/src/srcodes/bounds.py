"""Counting and bound evaluators for the sum-rank metric.

Exact counts (Gaussian binomials, rank counts, ball volumes) use Python
integers; real-valued bounds work in the log domain so that astronomically
large counts never touch floating point directly.

Several formulas are printed in the literature with an ordinary binomial
where only the Gaussian binomial matches direct enumeration (e.g. there are
9 rank-1 2x2 binary matrices, not 6).  The corrected (Gaussian) count is the
default everywhere; `as_printed=True` reproduces the ordinary-binomial text
variant for comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb, log

from .sumrank import SumRankSpace


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n, exact (0 outside 0 <= k <= n)."""
    if n < 0:
        raise ValueError(f"need n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    assert num % den == 0
    return num // den


def rank_count(n: int, m: int, s: int, q: int) -> int:
    """Number of n x m matrices over F_q of rank exactly s, exact."""
    if not 0 <= s <= min(n, m):
        raise ValueError(f"need 0 <= s <= min(n,m), got s={s}")
    out = gaussian_binomial(n, s, q)
    for j in range(s):
        out *= q**m - q**j
    return out


def _shell_counts(n: int, m: int, q: int, as_printed: bool) -> list[int]:
    """Matrix counts by rank 0..n; ordinary-binomial prefactor if as_printed."""
    if as_printed:
        return [comb(n, s) * math.prod(q**m - q**j for j in range(s)) for s in range(n + 1)]
    return [rank_count(n, m, s, q) for s in range(n + 1)]


def weight_distribution(space: SumRankSpace, as_printed: bool = False) -> list[int]:
    """Count of ambient points at each sum-rank weight 0..N (shell convolution)."""
    dist = [1]
    for n, m in space.sizes:
        sh = _shell_counts(n, m, space.q, as_printed)
        new = [0] * (len(dist) + n)
        for w, c in enumerate(dist):
            if c:
                for s, cs in enumerate(sh):
                    new[w + s] += c * cs
        dist = new
    return dist


def ball_volume(space: SumRankSpace, r: int, as_printed: bool = False) -> int:
    """Number of points within sum-rank distance r of any center, exact."""
    if not 0 <= r <= space.N:
        raise ValueError(f"radius must be in [0, {space.N}], got {r}")
    return sum(weight_distribution(space, as_printed)[: r + 1])


# ---------------------------------------------------------------------------
# entropy
# ---------------------------------------------------------------------------


def f_poly_coeffs(n: int, m: int, q: int, as_printed: bool = False) -> list[int]:
    """Coefficients of f(z) = sum_s (count of rank-s n x m matrices) z^s."""
    return _shell_counts(n, m, q, as_printed)


def f_poly_eval(n: int, m: int, q: int, z: float, as_printed: bool = False) -> float:
    if not 0 < z <= 1:
        raise ValueError(f"need z in (0, 1], got {z}")
    return sum(c * z**s for s, c in enumerate(f_poly_coeffs(n, m, q, as_printed)))


def _log_sum_exp(vals: list[float]) -> float:
    top = max(vals)
    return top + log(sum(math.exp(v - top) for v in vals))


def entropy_hsr(n: int, m: int, q: int, rho: float, as_printed: bool = False) -> float:
    """(1/mn) min over z in (0,1] of log_q(f(z) / z^rho).

    The objective is convex in ln z, so a coarse log-spaced grid (1024
    points) plus golden-section refinement finds the global minimum; all
    work happens on logarithms, never on f(z) itself.
    """
    if not 0 < rho < n:
        raise ValueError(f"need 0 < rho < n, got rho={rho}")
    lnq = log(q)
    ln_coeffs = [(s, math.log(c)) for s, c in enumerate(f_poly_coeffs(n, m, q, as_printed)) if c]

    def objective(lz: float) -> float:
        return (_log_sum_exp([lc + s * lz for s, lc in ln_coeffs]) - rho * lz) / lnq

    lo = -((n + m) * lnq + 25.0)  # past any minimizer for rho down to ~1e-9
    grid = [lo + (0.0 - lo) * i / 1023 for i in range(1024)]
    best = min(range(1024), key=lambda i: objective(grid[i]))
    a = grid[max(best - 1, 0)]
    b = grid[min(best + 1, 1023)]
    # golden-section down to a bracket far tighter than the 1e-9 tolerance
    invphi = (math.sqrt(5) - 1) / 2
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = objective(c), objective(d)
    while b - a > 1e-12:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = objective(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = objective(d)
    return min(fc, fd, objective(0.0)) / (m * n)


def gamma_q(q: int) -> float:
    """prod_{i>=1} (1 - q^{-i})^{-1}, truncated to relative error < 1e-12."""
    if q < 2:
        raise ValueError(f"need q >= 2, got {q}")
    out = 1.0
    i = 1
    while True:
        x = float(q) ** (-i)
        out /= 1.0 - x
        # remaining factors multiply by exp(~ sum of tail q^{-k}) < exp(2x)
        if 2 * x < 1e-13:
            return out
        i += 1


# ---------------------------------------------------------------------------
# existence bound (finite form and limits)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GvParams:
    """Equal-size parameters for the existence bound: t blocks of n x m over F_q."""

    q: int
    n: int
    m: int
    t: int
    d: int

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("need q >= 2")
        if not 1 <= self.n <= self.m:
            raise ValueError("need 1 <= n <= m")
        if self.t < 1:
            raise ValueError("need t >= 1")
        if not 2 < self.d <= self.N:
            raise ValueError(f"need 2 < d <= N = {self.N}, got d={self.d}")

    @property
    def N(self) -> int:
        return self.n * self.t

    @property
    def delta(self) -> float:
        return self.d / self.N

    @property
    def xi(self) -> float:
        return self.m / self.n


def gv_rhs(params: GvParams) -> float:
    """Right-hand side of the finite-length existence bound.

    Any rate at or below this value is achievable at relative distance d/N:

        delta^2 (n/m) - delta (1 + n/m + 2n/(Nm)) + 1 + 1/N + n/(Nm) + n/(N^2 m)
        - [sum_{i=1}^{d-1} log_q(1 + (t-1)/i) + log_q(d-1)] / (Nm)
        - log_q(gamma_q) / (nm)
    """
    q, n, m, t, d = params.q, params.n, params.m, params.t, params.d
    N = params.N
    delta = params.delta
    lnq = log(q)

    def log_q(x: float) -> float:
        return log(x) / lnq

    corr = sum(log_q(1 + (t - 1) / i) for i in range(1, d)) + log_q(d - 1)
    return (
        delta * delta * n / m
        - delta * (1 + n / m + 2 * n / (N * m))
        + 1
        + 1 / N
        + n / (N * m)
        + n / (N * N * m)
        - corr / (N * m)
        - log_q(gamma_q(q)) / (n * m)
    )


def gv_asymptotic(delta: float, xi: float) -> float:
    """Large-size limit of the existence bound: delta^2 - delta(1 + 1/xi) + 1."""
    if not 0 <= delta <= 1:
        raise ValueError(f"need 0 <= delta <= 1, got {delta}")
    if xi <= 0:
        raise ValueError(f"need xi > 0, got {xi}")
    return delta * delta - delta * (1 + 1 / xi) + 1


def tradeoff_lhs(rate: float, delta: float) -> float:
    """Combined figure R + 2*delta - delta^2 used in the rate/distance tradeoff."""
    return rate + 2 * delta - delta * delta


def tradeoff_rhs(n: int, v: int, q: int) -> float:
    """Guaranteed lower bound on R + 2*delta - delta^2 for the code sequences
    built from algebraic-geometry component codes:

        (1/n) (v + 3 - sum_{i=0}^v 1/(n-i) - 1/(q^{n/2} - 1) - 1/n)
    """
    if not 0 <= v <= n - 1:
        raise ValueError(f"need 0 <= v <= n-1, got v={v}, n={n}")
    if q < 2:
        raise ValueError("need q >= 2")
    harmonic = sum(1 / (n - i) for i in range(v + 1))
    return (v + 3 - harmonic - 1 / (q ** (n / 2) - 1) - 1 / n) / n
