"""Exact Bernoulli numbers and polynomials over the rationals.

Convention: B_n(x) are the coefficients of z^n/n! in z e^{xz}/(e^z - 1),
so B_1 = -1/2.  Everything here is exact; rationals are
:class:`fractions.Fraction`, which is always reduced with a positive
denominator.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence, Union

__all__ = [
    "Rational",
    "BernoulliCache",
    "BernoulliPolynomial",
    "bernoulli_number",
    "bernoulli_polynomial",
    "eval_poly",
    "zeta_neg_int_exact",
    "zeta_neg_int_via_zeta_values",
    "riemann_zeta_neg_int",
    "format_rational",
    "parse_rational",
]

Rational = Fraction
RationalLike = Union[Fraction, int, str]


def format_rational(x: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(x))


def parse_rational(text: RationalLike) -> Fraction:
    return Fraction(text)


class BernoulliCache:
    """Append-only table of Bernoulli numbers.

    Reads of already computed entries take no lock.  Extension is
    serialized, and entries are never rewritten.
    """

    def __init__(self) -> None:
        self._table: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._table)

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"Bernoulli index must be >= 0, got {n}")
        table = self._table
        if n < len(table):
            return table[n]
        with self._lock:
            self._extend_to(n)
        return self._table[n]

    def _extend_to(self, n: int) -> None:
        # sum_{k=0}^{j} C(j+1, k) B_k = 0  for j >= 1
        table = self._table
        for j in range(len(table), n + 1):
            if j > 1 and j % 2 == 1:
                table.append(Fraction(0))
                continue
            acc = Fraction(0)
            for k in range(j):
                if table[k]:
                    acc += comb(j + 1, k) * table[k]
            table.append(-acc / (j + 1))

    def snapshot(self) -> tuple[Fraction, ...]:
        return tuple(self._table)


_CACHE = BernoulliCache()


def bernoulli_number(n: int) -> Fraction:
    """Return the Bernoulli number B_n (with B_1 = -1/2)."""
    return _CACHE.get(n)


@dataclass(frozen=True)
class BernoulliPolynomial:
    """B_n(x) as an exact coefficient vector; ``coefficients[k]`` multiplies x^k."""

    degree: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.degree + 1:
            raise ValueError("coefficient vector must have length degree + 1")

    def __call__(self, x: RationalLike) -> Fraction:
        return eval_poly(self, x)

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coefficients]

    def to_json(self) -> str:
        return json.dumps(self.to_strings())

    @classmethod
    def from_json(cls, text: str) -> "BernoulliPolynomial":
        coeffs = tuple(Fraction(c) for c in json.loads(text))
        return cls(len(coeffs) - 1, coeffs)

    def pretty(self, var: str = "α") -> str:
        """Human-readable form such as ``1/6 − 1·α^1 + 1·α^2``."""
        parts: list[str] = []
        for k, c in enumerate(self.coefficients):
            if c == 0 and (k > 0 or self.degree > 0):
                continue
            body = format_rational(abs(c)) if k == 0 else f"{format_rational(abs(c))}·{var}^{k}"
            if not parts:
                parts.append(("−" if c < 0 else "") + body)
            else:
                parts.append(f"{'−' if c < 0 else '+'} {body}")
        return " ".join(parts)


def bernoulli_polynomial(n: int) -> BernoulliPolynomial:
    """B_n(x) = sum_k C(n, k) B_k x^{n-k}."""
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = comb(n, k) * bernoulli_number(k)
    return BernoulliPolynomial(n, tuple(coeffs))


def eval_poly(p: BernoulliPolynomial | Sequence[Fraction], x: RationalLike) -> Fraction:
    """Exact Horner evaluation."""
    coeffs = p.coefficients if isinstance(p, BernoulliPolynomial) else p
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def zeta_neg_int_exact(m: int, alpha: RationalLike) -> Fraction:
    """zeta(-m, alpha) = -B_{m+1}(alpha) / (m + 1)."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    return -eval_poly(bernoulli_polynomial(m + 1), alpha) / (m + 1)


def riemann_zeta_neg_int(k: int) -> Fraction:
    """zeta(-k) = zeta(-k, 1) = -B_{k+1}(1) / (k + 1).

    B_{k+1}(1) differs from B_{k+1} only for k = 0, which gives zeta(0) = -1/2.
    """
    b = bernoulli_number(k + 1)
    if k == 0:
        b = -b
    return -b / (k + 1)


def zeta_neg_int_via_zeta_values(m: int, alpha: RationalLike) -> Fraction:
    """Closed polynomial in alpha built from the Riemann values zeta(-k)::

        zeta(-m, a) = sum_{k=0}^{m} C(m, k) zeta(-k) a^{m-k} + a^m - a^{m+1}/(m+1)
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    a = Fraction(alpha)
    total = sum(
        (comb(m, k) * riemann_zeta_neg_int(k) * a ** (m - k) for k in range(m + 1)),
        Fraction(0),
    )
    return total + a**m - a ** (m + 1) / (m + 1)
