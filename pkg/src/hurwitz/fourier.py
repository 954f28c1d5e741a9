"""Fourier-side representations of zeta(s, alpha) on 0 < alpha < 1.

Hurwitz's formula

    zeta(s, a) = 2^s pi^{s-1} Gamma(1-s) sum_{n>=1} sin(pi s/2 + 2 pi n a) n^{s-1}

and two trigonometric series derived from it: the log-sine cosine sum and
Kummer's series for zeta'(0, a).  These converge slowly (the last two only
conditionally); the Euler-Maclaurin kernel is the accurate path and this
module exists as an independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError
from .gamma import EULER_GAMMA, log_gamma
from .kernel import EPS, ComplexLike, ComplexValue, ZetaResult

__all__ = [
    "FourierParams",
    "hurwitz_formula",
    "log_sine_cosine_sum",
    "zeta_sderiv_at_zero_fourier",
    "averaged_partial_sum",
]


@dataclass(frozen=True)
class FourierParams:
    n_terms: int = 100_000
    use_averaging: bool = True
    levels: int = 4
    tail_tol: float = 1e-3

    def __post_init__(self) -> None:
        if self.n_terms < 8:
            raise ValueError("n_terms must be >= 8")
        if not 0 <= self.levels < self.n_terms:
            raise ValueError("levels must lie in [0, n_terms)")


DEFAULT_FOURIER = FourierParams()


def averaged_partial_sum(terms: np.ndarray, levels: int) -> tuple[float | complex, float]:
    """Sum a series by iterated pairwise means of its last partial sums.

    Takes S_{N-levels}, ..., S_N and replaces the list by the means of
    neighbours ``levels`` times.  Returns the final value and the spread of
    the two values at the level before it (zero when ``levels`` is 0).
    """
    partial = np.cumsum(terms)
    window = partial[len(partial) - levels - 1 :]
    spread = 0.0
    for _ in range(levels):
        if len(window) == 2:
            spread = float(abs(window[1] - window[0]))
        window = 0.5 * (window[:-1] + window[1:])
    return window[-1].item(), spread


def _sum(terms: np.ndarray, params: FourierParams) -> tuple[float | complex, float]:
    if params.use_averaging:
        return averaged_partial_sum(terms, params.levels)
    return np.sum(terms).item(), 0.0


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0 < alpha < 1:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    return alpha


def _angles(alpha: float, n: np.ndarray) -> np.ndarray:
    # 2 pi n alpha reduced mod 2 pi before the trig call
    return 2 * np.pi * np.mod(n * alpha, 1.0)


def _oscillatory_tail_bound(f_first: float, alpha: float) -> float:
    # Abel summation: |sum_{n>=n0} f(n) e^{i(c + 2 pi n a)}| <= f(n0) / |sin(pi a)|
    # for f positive and decreasing
    return f_first / abs(math.sin(math.pi * alpha))


def _fourier_prefactor(s: float) -> float:
    return 2.0**s * math.pi ** (s - 1)


def _real_s(s: ComplexLike) -> float:
    z = complex(s)
    if z.imag != 0:
        raise DomainError("the Fourier side is implemented for real s only")
    if not z.real <= 0:
        raise DomainError(f"Hurwitz's formula needs Re s <= 0 here, got {z.real}")
    return z.real


def hurwitz_formula(s: ComplexLike, alpha: float, params: FourierParams | None = None) -> ZetaResult:
    """zeta(s, alpha) from Hurwitz's Fourier series, s real and <= 0."""
    params = params or DEFAULT_FOURIER
    s = _real_s(s)
    alpha = _check_alpha(alpha)
    n = np.arange(1, params.n_terms + 1, dtype=float)
    weights = n ** (s - 1)
    terms = np.sin(np.pi * s / 2 + _angles(alpha, n)) * weights
    series, _ = _sum(terms, params)

    pref = _fourier_prefactor(s) * math.exp(log_gamma(1 - s))
    first_unsummed = params.n_terms + 1 - (params.levels if params.use_averaging else 0)
    tail = _oscillatory_tail_bound(first_unsummed ** (s - 1), alpha)
    if s < 0:
        tail = min(tail, (first_unsummed - 1) ** s / -s)
    rounding = 8 * EPS * float(np.sum(np.abs(terms))) + 1e-13 * abs(series)
    return ZetaResult(ComplexValue(pref * series), pref * (tail + rounding), params.n_terms)


def _hurwitz_formula_exponential(s: float, alpha: float, params: FourierParams | None = None) -> complex:
    """Gamma(1-s) sum_{|n|>=1} e^{2 pi i n a} (2 pi i n)^{s-1}; equal to
    :func:`hurwitz_formula` and kept for mutual consistency checks."""
    params = params or DEFAULT_FOURIER
    s = _real_s(s)
    alpha = _check_alpha(alpha)
    n = np.arange(1, params.n_terms + 1, dtype=float)
    phase = np.exp(1j * _angles(alpha, n))
    pos = phase * (2j * np.pi * n) ** (s - 1)
    neg = np.conj(phase) * (-2j * np.pi * n) ** (s - 1)
    total, _ = _sum(pos + neg, params)
    return math.exp(log_gamma(1 - s)) * total


def log_sine_cosine_sum(alpha: float, params: FourierParams | None = None) -> float:
    """sum_{n>=1} cos(2 pi n alpha)/n, which converges to -log(2 sin(pi alpha))."""
    params = params or DEFAULT_FOURIER
    alpha = _check_alpha(alpha)
    n = np.arange(1, params.n_terms + 1, dtype=float)
    value, _ = _sum(np.cos(_angles(alpha, n)) / n, params)
    return value


def zeta_sderiv_at_zero_fourier(alpha: float, params: FourierParams | None = None) -> float:
    """Kummer's series for zeta'(0, alpha) = log(Gamma(alpha)/sqrt(2 pi)).

    (1/pi) [ (log 2pi + gamma) sum sin(2 pi n a)/n
             + sum (pi/2 cos(2 pi n a) + log n sin(2 pi n a)) / n ]

    The log n / n part converges only conditionally, so averaging is required.
    """
    params = params or DEFAULT_FOURIER
    alpha = _check_alpha(alpha)
    if not params.use_averaging or params.levels == 0:
        raise DomainError("Kummer's series needs averaging (use_averaging with levels >= 1)")
    n = np.arange(1, params.n_terms + 1, dtype=float)
    theta = _angles(alpha, n)
    sin_t = np.sin(theta)
    terms = ((math.log(2 * math.pi) + EULER_GAMMA) * sin_t + 0.5 * np.pi * np.cos(theta) + np.log(n) * sin_t) / n
    value, spread = averaged_partial_sum(terms, params.levels)
    if spread > params.tail_tol:
        raise ConvergenceError(f"averaged tail still oscillates by {spread:.3g}")
    return value / math.pi
