"""Brute-force reference values that share no code path with the evaluators.

Used by ``verify`` and the test-suite to check the Euler-Maclaurin kernel,
the digamma routines and the L-series assembly.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "direct_hurwitz_sum",
    "euler_gamma_harmonic",
    "alternating_odd_series",
    "stirling_constant_quadrature",
]


def direct_hurwitz_sum(s: float, alpha: float, n_terms: int = 1_000_000) -> float:
    """sum_{n>=0} (n+alpha)^{-s} for real s > 1: direct sum plus integral tail.

    The tail sum_{n>=N} (N+alpha)^{-s} is replaced by the midpoint integral
    (N + alpha - 1/2)^{1-s}/(s-1), accurate to O(N^{-s-1}).
    """
    if not s > 1:
        raise ValueError("direct summation needs s > 1")
    n = np.arange(n_terms, dtype=float) + alpha
    head = math.fsum((n ** (-s))[::-1])
    x = n_terms + alpha - 0.5
    return head + x ** (1 - s) / (s - 1)


def euler_gamma_harmonic(n: int = 1_000_000) -> float:
    """gamma = lim (H_n - log n), with the first terms of the asymptotic tail."""
    h = math.fsum(1.0 / k for k in range(n, 0, -1))
    return h - math.log(n) - 1 / (2 * n) + 1 / (12 * n**2) - 1 / (120 * n**4)


def alternating_odd_series(power: int, n_terms: int = 10_000_000, chunk: int = 1_000_000) -> float:
    """sum_{n>=0} (-1)^n / (2n+1)^power, averaging the last two partial sums."""
    total = 0.0
    last_term = 0.0
    for start in range(0, n_terms, chunk):
        n = np.arange(start, min(start + chunk, n_terms), dtype=float)
        terms = np.where(n % 2 == 0, 1.0, -1.0) / (2 * n + 1) ** power
        total += float(np.sum(terms[::-1]))
        last_term = float(terms[-1])
    # S_N and S_{N-1} straddle the limit; their mean cancels the leading error
    return total - 0.5 * last_term


def stirling_constant_quadrature(upper: int = 10_000, nodes: int = 8) -> float:
    """1 + int_1^upper phi(u)/u du with phi(u) = u - floor(u) - 1/2.

    Gauss-Legendre on each unit interval, where phi is linear.
    """
    x, w = np.polynomial.legendre.leggauss(nodes)
    t = 0.5 * (x + 1.0)  # nodes on [0, 1]
    k = np.arange(1, upper, dtype=float)[:, None]
    u = k + t[None, :]
    integrand = (t[None, :] - 0.5) / u
    return 1.0 + float(np.sum(integrand @ (0.5 * w)))
