"""Hurwitz zeta evaluation by Euler-Maclaurin summation.

For N directly summed terms and X = N + alpha::

    zeta(s, alpha) ~ sum_{n<N} (n+alpha)^{-s} + X^{1-s}/(s-1) + X^{-s}/2
                     + sum_{k=1}^{M} B_{2k}/(2k)! * (s)_{2k-1} * X^{-s-2k+1}

where (s)_j = s(s+1)...(s+j-1).  Every term is elementary in s, so the
s-derivative is obtained term by term.  The (M+1)-th correction is the
truncation estimate.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .bernoulli import bernoulli_number
from .errors import ConvergenceError, DomainError, PoleError

__all__ = [
    "ComplexValue",
    "EvalParams",
    "ZetaResult",
    "sawtooth",
    "hurwitz_zeta",
    "hurwitz_zeta_sderiv",
    "psi_via_pole_limit",
    "taylor_zeta_shift",
    "MAX_TAIL_ORDER",
    "MAX_TRUNCATION",
]

EPS = sys.float_info.epsilon
MAX_TAIL_ORDER = 30
MAX_TRUNCATION = 100_000
POLE_RADIUS = 10 * EPS


@dataclass(frozen=True)
class ComplexValue:
    re: float
    im: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError(f"non-finite complex value ({self.re}, {self.im})")

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    @classmethod
    def of(cls, z: "ComplexLike") -> "ComplexValue":
        if isinstance(z, ComplexValue):
            return z
        z = complex(z)
        return cls(z.real, z.imag)

    def to_dict(self) -> dict[str, float]:
        return {"re": self.re, "im": self.im}


ComplexLike = Union[ComplexValue, complex, float, int]


@dataclass(frozen=True)
class EvalParams:
    """Controls for the Euler-Maclaurin evaluator.

    ``N=None`` lets the evaluator pick the smallest truncation on a doubling
    ladder that meets ``target_tol``; an explicit N is the starting point
    for the same escalation.
    """

    N: int | None = None
    M: int = 12
    target_tol: float = 1e-12

    def __post_init__(self) -> None:
        if self.N is not None and self.N < 1:
            raise ValueError("truncation N must be >= 1")
        if not 0 <= self.M <= MAX_TAIL_ORDER:
            raise ValueError(f"tail order M must lie in [0, {MAX_TAIL_ORDER}]")
        if not self.target_tol > 0:
            raise ValueError("target_tol must be positive")


DEFAULT_PARAMS = EvalParams()


@dataclass(frozen=True)
class ZetaResult:
    value: ComplexValue
    err_estimate: float
    terms: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        if not (self.err_estimate >= 0 and math.isfinite(self.err_estimate)):
            raise ValueError(f"invalid error estimate {self.err_estimate}")

    def __complex__(self) -> complex:
        return complex(self.value)

    @property
    def real(self) -> float:
        return self.value.re


def sawtooth(u: float) -> float:
    """phi(u) = u - floor(u) - 1/2, periodic with mean zero on [0, 1)."""
    frac = u - math.floor(u)
    if frac >= 1.0:  # u just below an integer: 1 - tiny rounded up to 1
        return math.nextafter(0.5, 0.0)
    return frac - 0.5


@lru_cache(maxsize=None)
def _em_coefficients() -> tuple[float, ...]:
    # index k holds B_{2k}/(2k)!, k = 0 .. MAX_TAIL_ORDER + 1
    return tuple(
        float(bernoulli_number(2 * k) / Fraction(math.factorial(2 * k)))
        for k in range(MAX_TAIL_ORDER + 2)
    )


@lru_cache(maxsize=None)
def _psi_coefficients() -> tuple[float, ...]:
    # index k holds B_{2k}/(2k), k >= 1; index 0 unused
    return (0.0,) + tuple(
        float(bernoulli_number(2 * k) / (2 * k)) for k in range(1, MAX_TAIL_ORDER + 2)
    )


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not (math.isfinite(alpha) and alpha > 0):
        raise DomainError(f"alpha must be a positive real, got {alpha}")
    return alpha


def _check_s(s: ComplexLike) -> complex:
    s = complex(s)
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise DomainError(f"s must be finite, got {s}")
    if abs(s - 1) < POLE_RADIUS:
        raise PoleError("zeta(s, alpha) has a pole at s = 1")
    return s


@dataclass
class _Expansion:
    value: complex
    deriv: complex
    trunc: float  # |first omitted correction| for the requested quantity
    prev: float  # |last retained correction| for the same quantity
    rounding: float


def _expand(s: complex, alpha: float, n: int, m: int, want_deriv: bool) -> _Expansion:
    x = n + alpha
    logx = math.log(x)
    val = 0j
    der = 0j
    mag = 0.0
    dmag = 0.0
    for j in range(n):
        y = j + alpha
        t = y ** (-s)
        val += t
        mag += abs(t)
        if want_deriv:
            dt = -math.log(y) * t
            der += dt
            dmag += abs(dt)

    xs = x ** (-s)  # X^{-s}
    head = x * xs / (s - 1)
    half = 0.5 * xs
    val += head + half
    mag += abs(head) + abs(half)
    if want_deriv:
        dhead = -logx * head - head / (s - 1)
        dhalf = -logx * half
        der += dhead + dhalf
        dmag += abs(dhead) + abs(dhalf)

    coeffs = _em_coefficients()
    # poch = (s)_{2k-1}, dpoch its s-derivative; start at k=1: (s)_1 = s
    poch, dpoch = s, 1 + 0j
    xpow = xs / x  # X^{-s-1}
    inv_x2 = 1.0 / (x * x)
    last_v = last_d = 0.0
    for k in range(1, m + 2):
        c = coeffs[k]
        tv = c * poch * xpow
        if want_deriv:
            td = c * (dpoch - logx * poch) * xpow
        if k <= m:
            val += tv
            mag += abs(tv)
            last_v = abs(tv)
            if want_deriv:
                der += td
                dmag += abs(td)
                last_d = abs(td)
        else:
            omitted_v = abs(tv)
            omitted_d = abs(td) if want_deriv else 0.0
        # (s)_{2k+1} = (s)_{2k-1} (s+2k-1)(s+2k)
        for j in (2 * k - 1, 2 * k):
            dpoch = dpoch * (s + j) + poch
            poch = poch * (s + j)
        xpow *= inv_x2

    # each power carries relative error ~ (1 + |s| log x) eps; sums add ~n eps
    scale = EPS * (2.0 + abs(s) * abs(logx)) * 4.0
    if want_deriv:
        return _Expansion(val, der, omitted_d, last_d, scale * (dmag + mag))
    return _Expansion(val, der, omitted_v, last_v, scale * mag)


def _tail_order(s: complex, m: int) -> int:
    # corrections with 2k - 1 <= -Re s grow with X and buy no accuracy;
    # count M only over the decaying ones
    extra = max(0, math.ceil(-s.real / 2))
    return min(MAX_TAIL_ORDER, m + extra)


def _is_nonpositive_integer(s: complex) -> bool:
    return s.imag == 0 and s.real <= 0 and s.real == math.floor(s.real)


def _initial_truncation(s: complex, alpha: float, m: int, want_deriv: bool) -> int:
    if not want_deriv and _is_nonpositive_integer(s) and 1 - s.real <= 2 * m:
        # (s)_{2k-1} vanishes for 2k - 2 >= -s: the expansion is exact
        return 1
    # corrections stop decreasing once |s + 2k| ~ 2 pi X; start just past that
    x0 = (abs(s) + 2 * m + 1) / (2 * math.pi)
    return max(1, math.ceil(x0 - alpha))


def _evaluate(s: ComplexLike, alpha: float, params: EvalParams | None, want_deriv: bool) -> tuple[_Expansion, int]:
    params = params or DEFAULT_PARAMS
    s = _check_s(s)
    alpha = _check_alpha(alpha)
    m = _tail_order(s, params.M)
    n = params.N if params.N is not None else _initial_truncation(s, alpha, m, want_deriv)
    while True:
        ex = _expand(s, alpha, n, m, want_deriv)
        if ex.trunc <= params.target_tol and ex.trunc <= ex.prev + params.target_tol:
            return ex, n
        if n >= MAX_TRUNCATION:
            raise ConvergenceError(
                f"truncation estimate {ex.trunc:.3g} exceeds target {params.target_tol:.3g} at N={n}"
            )
        n = min(2 * n, MAX_TRUNCATION)


def hurwitz_zeta(s: ComplexLike, alpha: float, params: EvalParams | None = None) -> ZetaResult:
    """zeta(s, alpha) for complex s != 1 and real alpha > 0."""
    ex, n = _evaluate(s, alpha, params, want_deriv=False)
    return ZetaResult(ComplexValue.of(ex.value), ex.trunc + ex.rounding, n)


def hurwitz_zeta_sderiv(s: ComplexLike, alpha: float, params: EvalParams | None = None) -> ZetaResult:
    """d/ds zeta(s, alpha), by termwise differentiation of the expansion."""
    ex, n = _evaluate(s, alpha, params, want_deriv=True)
    return ZetaResult(ComplexValue.of(ex.deriv), ex.trunc + ex.rounding, n)


def psi_via_pole_limit(alpha: float, params: EvalParams | None = None) -> float:
    """Digamma as the s -> 1 limit of d/ds[(1 - s) zeta(s, alpha)].

    Removing the pole term analytically leaves::

        psi(a) = log X - sum_{n<N} 1/(n+a) - 1/(2X) - sum_{k=1}^{M} B_{2k}/(2k) X^{-2k}
    """
    params = params or DEFAULT_PARAMS
    alpha = _check_alpha(alpha)
    m = params.M
    coeffs = _psi_coefficients()
    n = params.N if params.N is not None else max(1, math.ceil((2 * m + 1) / (2 * math.pi) - alpha))
    while True:
        x = n + alpha
        inv_x2 = 1.0 / (x * x)
        tail = 0.0
        xpow = inv_x2
        last = 0.0
        for k in range(1, m + 1):
            last = coeffs[k] * xpow
            tail += last
            xpow *= inv_x2
        omitted = abs(coeffs[m + 1] * xpow)
        if omitted <= params.target_tol and omitted <= abs(last) + params.target_tol:
            break
        if n >= MAX_TRUNCATION:
            raise ConvergenceError(f"psi expansion did not converge at N={n}")
        n = min(2 * n, MAX_TRUNCATION)
    direct = math.fsum(1.0 / (j + alpha) for j in range(n))
    return math.log(x) - direct - 0.5 / x - tail


def taylor_zeta_shift(
    s: ComplexLike,
    alpha: float,
    K: int = 64,
    params: EvalParams | None = None,
) -> ZetaResult:
    """zeta(s, alpha + 1) from the Taylor series about alpha + 1 = 1::

        zeta(s, 1 + a) = zeta(s) + sum_{n=1}^{K} (-a)^n / n! * (s)_n * zeta(s + n)

    When s is an integer <= 0 the argument s + n hits the pole for
    n = 1 - s, but (s)_n then carries the vanishing factor (s + n - 1); the
    product has the finite limit (s)_{n-1} * residue, with residue 1.
    """
    params = params or DEFAULT_PARAMS
    s = _check_s(s)
    alpha = float(alpha)
    if not abs(alpha) < 1:
        raise DomainError(f"Taylor shift needs |alpha| < 1, got {alpha}")
    if K < 1:
        raise DomainError("K must be >= 1")

    base = hurwitz_zeta(s, 1.0, params)
    total = complex(base)
    err = base.err_estimate
    mag = abs(total)
    # weight = (-a)^{n-1}/(n-1)! * (s)_{n-1} at the top of iteration n; carried
    # as one product so that neither factor overflows for large K
    weight = 1 + 0j
    last = 0.0
    for n in range(1, K + 1):
        step = weight * (-alpha / n)
        arg = s + n
        if abs(arg - 1) < POLE_RADIUS:
            term = step  # removable: (s+n-1) zeta(s+n) -> 1
            term_err = 0.0
        else:
            z = hurwitz_zeta(arg, 1.0, params)
            w = step * (s + n - 1)
            term = w * complex(z)
            term_err = abs(w) * z.err_estimate
        total += term
        err += term_err
        mag += abs(term)
        last = abs(term)
        weight = step * (s + n - 1)
    if last > params.target_tol:
        raise ConvergenceError(f"last retained Taylor term {last:.3g} exceeds target")
    err += last + 4 * EPS * mag
    return ZetaResult(ComplexValue.of(total), err, K)
