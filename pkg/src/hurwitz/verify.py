"""Identity sweep behind ``hurwitz verify``.

Each identity is a function returning one :class:`Check` per grid point.
Identities run in declaration order; the report is deterministic.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import bernoulli as bern
from . import fourier, gamma, kernel, lseries, oracles

__all__ = ["Check", "IdentityRecord", "VerifyReport", "IDENTITIES", "IDENTITY_TAGS", "run_verify", "PROFILES"]

PROFILES = {"default": 1.0, "strict": 0.5}


@dataclass(frozen=True)
class Check:
    point: str
    residual: float
    tol: float
    # False when tol is itself a computed error estimate; profiles leave it alone
    scalable: bool = True

    def limit(self, factor: float) -> float:
        return self.tol * factor if self.scalable else self.tol


@dataclass(frozen=True)
class IdentityRecord:
    name: str
    grid_size: int
    max_residual: float
    tolerance: float
    passed: bool
    worst_point: str
    failing_points: tuple[str, ...] = ()


@dataclass
class VerifyReport:
    profile: str
    records: list[IdentityRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def to_dict(self) -> dict:
        return {
            "profile": self.profile,
            "passed": self.passed,
            "records": [
                {**asdict(r), "failing_points": list(r.failing_points)} for r in self.records
            ],
        }

    def render_text(self) -> str:
        width = max((len(r.name) for r in self.records), default=10)
        lines = [f"verify profile={self.profile}"]
        for r in self.records:
            status = "PASS" if r.passed else "FAIL"
            line = (
                f"{status}  {r.name:<{width}}  n={r.grid_size:<4d} "
                f"max_residual={r.max_residual:.3e}  tol={r.tolerance:.3e}"
            )
            if not r.passed:
                line += f"  worst at {r.worst_point}"
            lines.append(line)
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


IDENTITIES: dict[str, Callable[[], list[Check]]] = {}
# Short group keys accepted by ``--only`` besides name substrings:
# prop1 unit-step recurrences, prop2 reflection, prop3 multiplication,
# prop4 Gauss's digamma formula, prop5 Stirling's series.
IDENTITY_TAGS: dict[str, tuple[str, ...]] = {}


def identity(name: str, *tags: str):
    def register(fn: Callable[[], list[Check]]) -> Callable[[], list[Check]]:
        IDENTITIES[name] = fn
        IDENTITY_TAGS[name] = tags
        return fn

    return register


RATIONAL_GRID = tuple(Fraction(x) for x in ("0", "1/2", "1/3", "-2/5", "7/4", "3", "5/6"))
NEG_INT_ALPHAS = (Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(3, 2))
S_GRID = (-3.5, -1.0, 0.5 + 2j, 3.0)
ALPHA_GRID = (0.1, 0.5, 1.0, 2.7)
KUMMER_PARAMS = fourier.FourierParams(n_terms=100_000, use_averaging=True)


def _exact(point: str, lhs: Fraction, rhs: Fraction) -> Check:
    return Check(point, float(abs(lhs - rhs)), 0.0)


# -- exact Bernoulli identities ---------------------------------------------


@identity("bernoulli-difference", "prop1")
def _bernoulli_difference() -> list[Check]:
    out = []
    for m in range(13):
        p = bern.bernoulli_polynomial(m + 1)
        for a in RATIONAL_GRID:
            out.append(_exact(f"m={m},alpha={a}", p(a + 1) - p(a), (m + 1) * a**m))
    return out


@identity("bernoulli-reflection", "prop2")
def _bernoulli_reflection() -> list[Check]:
    out = []
    for m in range(13):
        p = bern.bernoulli_polynomial(m + 1)
        for a in RATIONAL_GRID:
            out.append(_exact(f"m={m},alpha={a}", p(1 - a), (-1) ** (m + 1) * p(a)))
    return out


@identity("bernoulli-multiplication", "prop3")
def _bernoulli_multiplication() -> list[Check]:
    out = []
    for n in range(1, 11):
        p = bern.bernoulli_polynomial(n)
        for m in range(2, 7):
            for a in RATIONAL_GRID:
                lhs = sum((p(a + Fraction(r, m)) for r in range(m)), Fraction(0))
                rhs = Fraction(m) ** (1 - n) * p(m * a)
                out.append(_exact(f"n={n},m={m},alpha={a}", lhs, rhs))
    return out


@identity("bernoulli-oracle-equivalence")
def _oracle_equivalence() -> list[Check]:
    return [
        _exact(f"m={m},alpha={a}", bern.zeta_neg_int_exact(m, a), bern.zeta_neg_int_via_zeta_values(m, a))
        for m in range(13)
        for a in RATIONAL_GRID
    ]


def generating_function_coefficients(alpha: Fraction, order: int) -> list[Fraction]:
    """Coefficients c_n of z^n in z e^{alpha z}/(e^z - 1), by series division."""
    num = [alpha**k / math.factorial(k) for k in range(order + 1)]
    den = [Fraction(1, math.factorial(k + 1)) for k in range(order + 1)]  # (e^z - 1)/z
    out: list[Fraction] = []
    for n in range(order + 1):
        acc = num[n] - sum((den[n - j] * out[j] for j in range(n)), Fraction(0))
        out.append(acc / den[0])
    return out


@identity("bernoulli-generating-function")
def _generating_function() -> list[Check]:
    order = 12
    out = []
    for a in RATIONAL_GRID:
        coeffs = generating_function_coefficients(a, order)
        for n in range(order + 1):
            b = bern.bernoulli_polynomial(n)(a) / math.factorial(n)
            out.append(_exact(f"n={n},alpha={a}", b, coeffs[n]))
    return out


# -- kernel ------------------------------------------------------------------


@identity("zeta-at-zero")
def _zeta_at_zero() -> list[Check]:
    out = []
    for i in range(1, 101):
        a = 0.05 * i
        out.append(Check(f"alpha={a:g}", abs(kernel.hurwitz_zeta(0, a).real - (0.5 - a)), 1e-12))
    return out


@identity("zeta-unit-shift")
def _unit_shift() -> list[Check]:
    out = []
    for s in S_GRID:
        for a in ALPHA_GRID:
            z0 = complex(kernel.hurwitz_zeta(s, a))
            z1 = complex(kernel.hurwitz_zeta(s, a + 1))
            out.append(Check(f"s={s},alpha={a}", abs(z0 - z1 - a ** (-s)), 1e-10))
    return out


@identity("zeta-alpha-derivative")
def _alpha_derivative() -> list[Check]:
    h = 1e-5
    out = []
    for s in S_GRID:
        for a in ALPHA_GRID:
            fd = (complex(kernel.hurwitz_zeta(s, a + h)) - complex(kernel.hurwitz_zeta(s, a - h))) / (2 * h)
            exact = -s * complex(kernel.hurwitz_zeta(s + 1, a))
            out.append(Check(f"s={s},alpha={a}", abs(fd - exact) / max(abs(exact), 1.0), 1e-6))
    return out


@identity("zeta-negative-integers")
def _negative_integers() -> list[Check]:
    out = []
    for m in range(9):
        p = bern.bernoulli_polynomial(m + 1)
        for a in NEG_INT_ALPHAS:
            exact = float(bern.zeta_neg_int_exact(m, a))
            out.append(Check(f"m={m},alpha={a}", abs(kernel.hurwitz_zeta(-m, float(a)).real - exact), 1e-10))
        e = math.e
        oracle = -sum(float(c) * e**k for k, c in enumerate(p.coefficients)) / (m + 1)
        out.append(Check(f"m={m},alpha=e", abs(kernel.hurwitz_zeta(-m, e).real - oracle), 1e-10))
    return out


@identity("zeta-sderiv-difference")
def _sderiv() -> list[Check]:
    h = 1e-6
    out = []
    for s in S_GRID:
        for a in ALPHA_GRID:
            fd = (complex(kernel.hurwitz_zeta(s + h, a)) - complex(kernel.hurwitz_zeta(s - h, a))) / (2 * h)
            d = complex(kernel.hurwitz_zeta_sderiv(s, a))
            out.append(Check(f"s={s},alpha={a}", abs(fd - d), 1e-6))
    return out


@identity("zeta-taylor-shift")
def _taylor() -> list[Check]:
    out = []
    for s in S_GRID:
        for a in (-0.5, -0.25, 0.0, 0.25, 0.5):
            t = kernel.taylor_zeta_shift(s, a)
            z = kernel.hurwitz_zeta(s, a + 1)
            out.append(Check(f"s={s},alpha={a}", abs(complex(t) - complex(z)), t.err_estimate + z.err_estimate, False))
    return out


def pole_residue_limit(alpha: float) -> float:
    """(s-1) zeta(s, alpha) at s = 1 + 10^-j, j = 2..6, extrapolated to s = 1."""
    f = {j: 10.0**-j * kernel.hurwitz_zeta(1 + 10.0**-j, alpha).real for j in range(2, 7)}
    # f(h) = 1 + c1 h + c2 h^2 + ...; one Richardson step on h and h/10
    return (10 * f[6] - f[5]) / 9


@identity("zeta-pole-residue")
def _pole_residue() -> list[Check]:
    return [Check(f"alpha={a}", abs(pole_residue_limit(a) - 1), 1e-8) for a in ALPHA_GRID]


# -- gamma / psi ---------------------------------------------------------------

GAMMA_GRID = (0.1, 0.5, 1.0, 2.3, 7.0)


@identity("gamma-recurrence", "prop1")
def _gamma_recurrence() -> list[Check]:
    return [
        Check(f"alpha={a}", abs(gamma.log_gamma(a + 1) - gamma.log_gamma(a) - math.log(a)), 1e-9)
        for a in GAMMA_GRID
    ]


@identity("psi-recurrence", "prop1")
def _psi_recurrence() -> list[Check]:
    return [Check(f"alpha={a}", abs(gamma.psi(a + 1) - gamma.psi(a) - 1 / a), 1e-9) for a in GAMMA_GRID]


@identity("gamma-reflection", "prop2")
def _gamma_reflection() -> list[Check]:
    out = [Check(f"alpha={a}", abs(gamma.gamma_reflection_residual(a)), 1e-9) for a in (0.1, 0.25, 0.5, 0.9)]
    # Gamma(1/2) = sqrt(pi / sin(pi/2))
    out.append(Check("gamma(1/2)=sqrt(pi)", abs(math.exp(gamma.log_gamma(0.5)) - math.sqrt(math.pi)), 1e-10))
    return out


@identity("psi-reflection", "prop2")
def _psi_reflection() -> list[Check]:
    return [
        Check(f"alpha={a}", abs(gamma.psi(1 - a) - gamma.psi(a) - math.pi / math.tan(math.pi * a)), 1e-8)
        for a in (0.1, 0.25, 0.4)
    ]


@identity("gamma-multiplication", "prop3")
def _gamma_multiplication() -> list[Check]:
    return [
        Check(f"alpha={a},n={n}", abs(gamma.gamma_multiplication_residual(a, n)), 1e-9)
        for a in (0.3, 0.7, 1.0, 2.2)
        for n in (2, 3, 5)
    ]


@identity("sin-product", "prop3")
def _sin_product() -> list[Check]:
    return [
        Check(f"alpha={a},m={m}", abs(gamma.sin_product(a, m) - 2.0 ** (1 - m) * math.sin(math.pi * m * a)), 1e-12)
        for a in (0.1, 0.3, 0.45)
        for m in (2, 3, 5, 8)
    ]


@identity("gauss-digamma-vs-kernel", "prop4")
def _gauss_vs_kernel() -> list[Check]:
    return [
        Check(f"a={a},q={q}", abs(gamma.gauss_digamma(a, q) - gamma.psi(a / q)), 1e-9)
        for q in range(2, 21)
        for a in range(1, q)
    ]


@identity("gauss-digamma-forms", "prop4")
def _gauss_forms() -> list[Check]:
    return [
        Check(f"a={a},q={q}", abs(gamma.gauss_digamma(a, q) - gamma.gauss_digamma_proof_form(a, q)), 1e-12)
        for q in range(2, 21)
        for a in range(1, q)
    ]


@identity("stirling-vs-zeta", "prop5")
def _stirling() -> list[Check]:
    return [
        Check(f"alpha={a}", abs(gamma.stirling_log_gamma(a) - gamma.log_gamma(a)), 1e-9)
        for a in (0.5, 1.0, 2.0, 10.0, 50.0)
    ]


@identity("stirling-constant", "prop5")
def _stirling_constant() -> list[Check]:
    value = oracles.stirling_constant_quadrature(10_000)
    return [Check("u in [1, 1e4]", abs(value - gamma.HALF_LOG_2PI), 1e-3)]


@identity("euler-gamma")
def _euler_gamma() -> list[Check]:
    return [
        Check("-psi(1)", abs(gamma.EULER_GAMMA + gamma.psi(1.0)), 1e-12),
        Check("harmonic oracle", abs(gamma.EULER_GAMMA - oracles.euler_gamma_harmonic()), 1e-12),
    ]


# -- Fourier side ---------------------------------------------------------------


@identity("fourier-functional-equation")
def _functional_equation() -> list[Check]:
    out = []
    for s in (-0.5, -1.5, -2.0, -3.5):
        for a in (0.1, 0.3, 0.5, 0.7, 0.9):
            f = fourier.hurwitz_formula(s, a)
            z = kernel.hurwitz_zeta(s, a)
            out.append(Check(f"s={s},alpha={a}", abs(f.real - z.real), f.err_estimate + z.err_estimate, False))
    return out


@identity("fourier-bernoulli-reflection", "prop2")
def _fourier_reflection() -> list[Check]:
    out = []
    for m in range(4):
        for a in (0.2, 0.4):
            left = fourier.hurwitz_formula(-m, 1 - a)
            right = fourier.hurwitz_formula(-m, a)
            residual = abs(left.real - (-1) ** (m + 1) * right.real)
            out.append(Check(f"m={m},alpha={a}", residual, left.err_estimate + right.err_estimate, False))
    return out


@identity("log-sine-cosine-sum")
def _log_sine() -> list[Check]:
    out = []
    for a in (0.1, 0.25, 0.5, 1 / 6):
        for n in (1_000, 10_000, 100_000):
            params = fourier.FourierParams(n_terms=n)
            value = fourier.log_sine_cosine_sum(a, params)
            bound = 1.0 / ((n - params.levels) * math.sin(math.pi * a))
            out.append(Check(f"alpha={a:.4g},N={n}", abs(value + math.log(2 * math.sin(math.pi * a))), bound, False))
    return out


@identity("kummer-vs-kernel", "prop2")
def _kummer() -> list[Check]:
    return [
        Check(
            f"alpha={a}",
            abs(fourier.zeta_sderiv_at_zero_fourier(a, KUMMER_PARAMS) - kernel.hurwitz_zeta_sderiv(0, a).real),
            1e-3,
        )
        for a in (0.25, 0.5)
    ]


@identity("kummer-reflection", "prop2")
def _kummer_reflection() -> list[Check]:
    out = []
    for a in (0.1, 0.25, 0.3):
        total = (
            fourier.zeta_sderiv_at_zero_fourier(a, KUMMER_PARAMS)
            + fourier.zeta_sderiv_at_zero_fourier(1 - a, KUMMER_PARAMS)
            + math.log(2 * math.sin(math.pi * a))
        )
        out.append(Check(f"alpha={a}", abs(total), 1e-3))
    return out


# -- Dirichlet L-series -----------------------------------------------------------


@identity("character-orthogonality")
def _orthogonality() -> list[Check]:
    out = []
    for q in range(1, 31):
        group = lseries.build_character_group(q)
        phi = len(group)
        worst = 0.0
        for i, chi in enumerate(group):
            for j, other in enumerate(group):
                inner = sum(chi(a) * other(a).conjugate() for a in range(q))
                worst = max(worst, abs(inner - (phi if i == j else 0)))
        out.append(Check(f"q={q}", worst, 1e-10))
    return out


@identity("character-decomposition")
def _decomposition() -> list[Check]:
    s = 3.0
    out = []
    for q in range(1, 13):
        group = lseries.build_character_group(q)
        values = [complex(lseries.l_series(s, chi)) for chi in group]
        for b in range(1, q + 1):
            if math.gcd(b, q) != 1:
                continue
            lhs = sum(chi(b).conjugate() * v for chi, v in zip(group, values))
            rhs = len(group) * q ** (-s) * kernel.hurwitz_zeta(s, b / q).real
            out.append(Check(f"q={q},b={b}", abs(lhs - rhs), 1e-9))
    return out


@identity("principal-character")
def _principal() -> list[Check]:
    s = 2.0
    zeta2 = kernel.hurwitz_zeta(s, 1.0).real
    out = []
    for q in (2, 3, 4, 6):
        chi0 = lseries.build_character_group(q)[0]
        euler = zeta2
        for p in (2, 3, 5):
            if q % p == 0:
                euler *= 1 - p ** (-s)
        out.append(Check(f"q={q}", abs(lseries.l_series(s, chi0).real - euler), 1e-9))
    return out


def odd_character_mod4() -> lseries.DirichletCharacter:
    return next(chi for chi in lseries.build_character_group(4) if chi(3) == -1)


@identity("l-series-catalan")
def _catalan() -> list[Check]:
    chi = odd_character_mod4()
    return [Check("s=2", abs(lseries.l_series(2, chi).real - oracles.alternating_odd_series(2)), 1e-9)]


@identity("l-series-leibniz")
def _leibniz() -> list[Check]:
    chi = odd_character_mod4()
    return [Check("s=1", abs(lseries.l_series(1, chi).real - oracles.alternating_odd_series(1)), 1e-9)]


def _selected(only: Sequence[str] | None) -> Iterable[str]:
    if not only:
        return list(IDENTITIES)
    return [n for n in IDENTITIES if any(key in n or key in IDENTITY_TAGS[n] for key in only)]


def run_verify(profile: str = "default", only: Sequence[str] | None = None) -> VerifyReport:
    """Run the identity suite.

    ``only`` keeps identities whose name contains one of the keys or whose
    tags include one; an empty selection yields an empty, passing report.
    """
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; choose from {sorted(PROFILES)}")
    factor = PROFILES[profile]
    report = VerifyReport(profile)
    for name in _selected(only):
        checks = IDENTITIES[name]()
        failing = [c for c in checks if not c.residual <= c.limit(factor)]
        worst = max(checks, key=lambda c: (c.residual - c.limit(factor), c.residual))
        report.records.append(
            IdentityRecord(
                name=name,
                grid_size=len(checks),
                max_residual=max(c.residual for c in checks),
                tolerance=max(c.limit(factor) for c in checks),
                passed=not failing,
                worst_point=worst.point,
                failing_points=tuple(c.point for c in failing),
            )
        )
    return report
