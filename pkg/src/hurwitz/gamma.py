"""log Gamma, digamma and their classical identities, built on the zeta kernel.

log Gamma(a) = zeta'(0, a) + log sqrt(2 pi), and psi(a) is the s -> 1 limit
of d/ds[(1 - s) zeta(s, a)].  The identity checks return residuals so that
callers (tests, the ``verify`` command) can compare them against their own
tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bernoulli import bernoulli_number
from .errors import DomainError
from .kernel import EvalParams, hurwitz_zeta_sderiv, psi_via_pole_limit

__all__ = [
    "EULER_GAMMA",
    "HALF_LOG_2PI",
    "RationalArgument",
    "log_gamma",
    "stirling_log_gamma",
    "psi",
    "gauss_digamma",
    "gauss_digamma_proof_form",
    "sin_product",
    "gamma_multiplication_residual",
    "gamma_reflection_residual",
]

EULER_GAMMA = 0.5772156649015329
HALF_LOG_2PI = 0.5 * math.log(2 * math.pi)

STIRLING_SHIFT = 15.0
STIRLING_TERMS = 10


@dataclass(frozen=True)
class RationalArgument:
    """a/q with integers 1 <= a < q; a and q need not be coprime."""

    a: int
    q: int

    def __post_init__(self) -> None:
        if not (isinstance(self.a, int) and isinstance(self.q, int)):
            raise DomainError("a and q must be integers")
        if not 1 <= self.a < self.q:
            raise DomainError(f"need 1 <= a < q, got a={self.a}, q={self.q}")

    def __float__(self) -> float:
        return self.a / self.q


def _positive(alpha: float) -> float:
    alpha = float(alpha)
    if not (math.isfinite(alpha) and alpha > 0):
        raise DomainError(f"argument must be a positive real, got {alpha}")
    return alpha


def log_gamma(alpha: float, params: EvalParams | None = None) -> float:
    """log Gamma(alpha) for alpha > 0, via zeta'(0, alpha)."""
    alpha = _positive(alpha)
    return hurwitz_zeta_sderiv(0.0, alpha, params).real + HALF_LOG_2PI


@lru_cache(maxsize=None)
def _stirling_coefficients(terms: int) -> tuple[float, ...]:
    # B_{2k} / ((2k)(2k-1)), k = 1..terms
    return tuple(
        float(bernoulli_number(2 * k) / Fraction(2 * k * (2 * k - 1)))
        for k in range(1, terms + 1)
    )


def stirling_log_gamma(
    alpha: float,
    shift_threshold: float = STIRLING_SHIFT,
    terms: int = STIRLING_TERMS,
) -> float:
    """log Gamma from Stirling's series.

    (a - 1/2) log a - a + log sqrt(2 pi) + sum_k B_{2k} / ((2k)(2k-1) a^{2k-1}),
    after lifting a above ``shift_threshold`` with
    log Gamma(a) = log Gamma(a + K) - sum_{j<K} log(a + j).
    """
    return _stirling(alpha, shift_threshold, terms)[0]


def _stirling(alpha: float, shift_threshold: float, terms: int) -> tuple[float, float]:
    # returns (value, |first omitted series term|)
    alpha = _positive(alpha)
    if shift_threshold <= 0:
        raise DomainError("shift_threshold must be positive")
    logs = []
    x = alpha
    while x < shift_threshold:
        logs.append(math.log(x))
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    series = 0.0
    p = inv
    coeffs = _stirling_coefficients(terms + 1)
    for c in coeffs[:-1]:
        series += c * p
        p *= inv2
    value = (x - 0.5) * math.log(x) - x + HALF_LOG_2PI + series - math.fsum(logs)
    return value, abs(coeffs[-1] * p)


def psi(alpha: float, params: EvalParams | None = None) -> float:
    """Digamma function for alpha > 0."""
    alpha = _positive(alpha)
    return psi_via_pole_limit(alpha, params)


def _as_argument(a: int | RationalArgument, q: int | None) -> RationalArgument:
    if isinstance(a, RationalArgument):
        return a
    if q is None:
        raise DomainError("q is required")
    return RationalArgument(a, q)


def gauss_digamma(a: int | RationalArgument, q: int | None = None) -> float:
    """psi(a/q) by Gauss's finite formula::

        -(gamma + log q) + sum_{r=1}^{q-1} cos(2 pi r a/q) log(2 sin(pi r/q))
                         + (pi/q) sum_{r=1}^{q-1} r sin(2 pi r a/q)
    """
    arg = _as_argument(a, q)
    a, q = arg.a, arg.q
    cos_part = math.fsum(
        math.cos(2 * math.pi * r * a / q) * math.log(2 * math.sin(math.pi * r / q))
        for r in range(1, q)
    )
    sin_part = math.fsum(r * math.sin(2 * math.pi * r * a / q) for r in range(1, q))
    return -(EULER_GAMMA + math.log(q)) + cos_part + math.pi / q * sin_part


def gauss_digamma_proof_form(a: int | RationalArgument, q: int | None = None) -> float:
    """Equivalent arrangement with log sin instead of log(2 sin) and log 2q
    in place of log q; the extra log 2 * sum cos(2 pi r a/q) = -log 2 cancels."""
    arg = _as_argument(a, q)
    a, q = arg.a, arg.q
    cos_part = math.fsum(
        math.cos(2 * math.pi * r * a / q) * math.log(math.sin(math.pi * r / q))
        for r in range(1, q)
    )
    sin_part = math.fsum(r * math.sin(2 * math.pi * r * a / q) for r in range(1, q))
    return -(EULER_GAMMA + math.log(2 * q)) + math.pi / q * sin_part + cos_part


def sin_product(alpha: float, m: int, tol: float = 1e-12) -> float:
    """prod_{k=0}^{m-1} sin(pi (alpha + k/m)), computed factor by factor."""
    alpha = float(alpha)
    if not 0 < alpha < 1:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")
    prod = 1.0
    for k in range(m):
        x = alpha + k / m
        if abs(x - round(x)) < tol:
            raise DomainError(f"factor sin(pi * {x}) vanishes")
        prod *= math.sin(math.pi * x)
    return prod


def gamma_multiplication_residual(alpha: float, n: int, params: EvalParams | None = None) -> float:
    """sum_k log Gamma(a + k/n) minus the log of (2 pi)^{(n-1)/2} n^{1/2 - n a} Gamma(n a)."""
    alpha = _positive(alpha)
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    lhs = math.fsum(log_gamma(alpha + k / n, params) for k in range(n))
    rhs = (n - 1) / 2 * math.log(2 * math.pi) + (0.5 - n * alpha) * math.log(n) + log_gamma(n * alpha, params)
    return lhs - rhs


def gamma_reflection_residual(alpha: float, params: EvalParams | None = None) -> float:
    """log Gamma(a) + log Gamma(1 - a) - log pi + log sin(pi a)."""
    alpha = float(alpha)
    if not 0 < alpha < 1:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    return (
        log_gamma(alpha, params)
        + log_gamma(1 - alpha, params)
        - math.log(math.pi)
        + math.log(math.sin(math.pi * alpha))
    )
