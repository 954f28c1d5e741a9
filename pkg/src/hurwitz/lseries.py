"""Dirichlet characters of small modulus and L(s, chi) from Hurwitz zeta values.

L(s, chi) = q^{-s} sum_{a=1}^{q} chi(a) zeta(s, a/q)
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, LimitError, PoleError
from .kernel import (
    EPS,
    POLE_RADIUS,
    ComplexLike,
    ComplexValue,
    EvalParams,
    ZetaResult,
    hurwitz_zeta,
    psi_via_pole_limit,
)

__all__ = [
    "MAX_MODULUS",
    "DirichletCharacter",
    "build_character_group",
    "euler_phi",
    "l_series",
    "pairwise_sum",
]

MAX_MODULUS = 200

_QUARTER_TURNS = (complex(1, 0), complex(0, 1), complex(-1, 0), complex(0, -1))


def euler_phi(q: int) -> int:
    return sum(1 for a in range(q) if math.gcd(a, q) == 1)


def _root_of_unity(angle: Fraction) -> complex:
    """exp(2 pi i angle), exact at multiples of a quarter turn."""
    if (4 * angle).denominator == 1:
        return _QUARTER_TURNS[int(4 * angle) % 4]
    return cmath.exp(2j * math.pi * float(angle))


@dataclass(frozen=True)
class DirichletCharacter:
    """A character mod q; ``values[a]`` is chi(a) for the residue a (0 stands for q)."""

    q: int
    values: tuple[complex, ...]

    def __post_init__(self) -> None:
        if self.q < 1 or len(self.values) != self.q:
            raise DomainError("a character mod q needs exactly q values")

    def __call__(self, n: int) -> complex:
        return self.values[n % self.q]

    @property
    def is_principal(self) -> bool:
        return all(
            v == (1 if math.gcd(a, self.q) == 1 else 0) for a, v in enumerate(self.values)
        )

    def to_dict(self) -> dict:
        return {"q": self.q, "values": [[v.real, v.imag] for v in self.values]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict, tol: float = 1e-9) -> "DirichletCharacter":
        try:
            q = int(data["q"])
            values = tuple(complex(float(re), float(im)) for re, im in data["values"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed character table: {exc}") from exc
        chi = cls(q, values)
        chi.validate(tol)
        return chi

    @classmethod
    def from_json(cls, text: str, tol: float = 1e-9) -> "DirichletCharacter":
        return cls.from_dict(json.loads(text), tol)

    def validate(self, tol: float = 1e-9) -> None:
        """Check the zero pattern, chi(1) = 1, complete multiplicativity and
        that every nonzero value is a phi(q)-th root of unity."""
        q = self.q
        order = euler_phi(q)
        for a, v in enumerate(self.values):
            unit = math.gcd(a, q) == 1
            if unit and abs(abs(v) - 1) > tol:
                raise DomainError(f"chi({a}) should have modulus 1, got {v}")
            if not unit and abs(v) > tol:
                raise DomainError(f"chi({a}) should vanish since gcd({a}, {q}) > 1")
            if unit and abs(v**order - 1) > tol * order:
                raise DomainError(f"chi({a}) is not a root of unity of order dividing {order}")
        if abs(self(1) - 1) > tol:
            raise DomainError("chi(1) must equal 1")
        for a in range(q):
            for b in range(a, q):
                if abs(self(a * b) - self(a) * self(b)) > tol:
                    raise DomainError(f"chi is not multiplicative at ({a}, {b})")


def _units(q: int) -> list[int]:
    return [a for a in range(q) if math.gcd(a, q) == 1]


def build_character_group(q: int) -> list[DirichletCharacter]:
    """All phi(q) characters mod q, sorted lexicographically by their angles.

    Generators of (Z/q)* are picked greedily (smallest residue outside the
    subgroup found so far).  Each partial character on the current subgroup
    H is extended to <H, g>: if k is the least exponent with g^k in H, the
    value at g is any solution of k * angle(g) = angle(g^k) mod 1.
    """
    if not isinstance(q, int) or q < 1:
        raise DomainError(f"modulus must be a positive integer, got {q}")
    if q > MAX_MODULUS:
        raise LimitError(f"modulus {q} exceeds the supported limit {MAX_MODULUS}")

    # angles are stored as integers mod phi(q): chi(a) = exp(2 pi i angle / phi(q))
    units = _units(q)
    order = len(units)
    one = 1 % q
    subgroup = [one]
    members = {one}
    partials: list[dict[int, int]] = [{one: 0}]
    for g in units:
        if g in members:
            continue
        k, power = 1, g
        while power not in members:
            power = power * g % q
            k += 1
        extended = []
        for chi in partials:
            for t in range(k):
                num = chi[power] + t * order
                if num % k:
                    raise AssertionError("character angle is not a multiple of 1/phi(q)")
                theta = num // k % order
                table = {}
                for h in subgroup:
                    x, ang = h, chi[h]
                    for _ in range(k):
                        table[x] = ang
                        x = x * g % q
                        ang = (ang + theta) % order
                extended.append(table)
        partials = extended
        subgroup = list(partials[0])
        members = set(subgroup)

    if len(partials) != order:
        raise AssertionError(f"found {len(partials)} characters mod {q}, expected {order}")
    partials.sort(key=lambda table: tuple(table[a] for a in units))
    group = []
    for table in partials:
        values = tuple(
            _root_of_unity(Fraction(table[a], order)) if a in table else 0j for a in range(q)
        )
        group.append(DirichletCharacter(q, values))
    return group


def pairwise_sum(values: Sequence[complex]) -> complex:
    """Tree reduction in fixed order; result independent of scheduling."""
    values = list(values)
    if not values:
        return 0j
    while len(values) > 1:
        paired = [values[i] + values[i + 1] for i in range(0, len(values) - 1, 2)]
        if len(values) % 2:
            paired.append(values[-1])
        values = paired
    return values[0]


def _nonzero_residues(chi: DirichletCharacter) -> Iterable[int]:
    # a runs over 1..q so that a/q lies in (0, 1]
    return (a for a in range(1, chi.q + 1) if chi(a) != 0)


def l_series(s: ComplexLike, chi: DirichletCharacter, params: EvalParams | None = None) -> ZetaResult:
    """L(s, chi) assembled from q Hurwitz zeta values.

    At s = 1 a non-principal character kills the pole: sum chi(a) = 0, so
    zeta(s, a/q) may be replaced by its regular part -psi(a/q).
    """
    s = complex(s)
    q = chi.q
    if abs(s - 1) < POLE_RADIUS:
        if chi.is_principal:
            raise PoleError("L(s, chi_0) has a pole at s = 1")
        terms = [-chi(a) * psi_via_pole_limit(a / q, params) for a in _nonzero_residues(chi)]
        tol = (params.target_tol if params else 1e-12) * len(terms) / q
        total = pairwise_sum(terms) / q
        err = tol + 4 * EPS * sum(abs(t) for t in terms) / q
        return ZetaResult(ComplexValue.of(total), err, len(terms))

    scale = q ** (-s)
    terms = []
    err = 0.0
    for a in _nonzero_residues(chi):
        z = hurwitz_zeta(s, a / q, params)
        terms.append(chi(a) * complex(z))
        err += z.err_estimate
    total = scale * pairwise_sum(terms)
    err = abs(scale) * (err + 4 * EPS * sum(abs(t) for t in terms))
    return ZetaResult(ComplexValue.of(total), err, len(terms))
