"""Acceptance criteria, one test each, at the stated tolerances.

Each test prints a PASS/FAIL line; the lines are repeated in the pytest
terminal summary.  Run alone with ``pytest tests/test_acceptance.py``.
"""

import json
import math
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

from hurwitz import bernoulli as bern
from hurwitz.fourier import FourierParams, hurwitz_formula, zeta_sderiv_at_zero_fourier
from hurwitz.gamma import (
    HALF_LOG_2PI,
    gamma_multiplication_residual,
    gamma_reflection_residual,
    gauss_digamma,
    gauss_digamma_proof_form,
    log_gamma,
    psi,
    stirling_log_gamma,
)
from hurwitz.kernel import hurwitz_zeta, hurwitz_zeta_sderiv
from hurwitz.lseries import build_character_group, l_series
from hurwitz.oracles import alternating_odd_series, stirling_constant_quadrature

GOLDEN = Path(__file__).parent / "golden"
GOLDEN_CASES = json.loads((Path(__file__).parent / "golden_cases.json").read_text(encoding="utf-8"))
RATIONALS = [Fraction(x) for x in ("0", "1/2", "1/3", "-2/5", "7/4", "3", "5/6", "-9/7")]


def test_criterion_01_zeta_at_zero(acceptance):
    alphas = [0.05 * i for i in range(1, 101)]
    worst = max(abs(hurwitz_zeta(0, a).real - (0.5 - a)) for a in alphas)
    acceptance(1, "zeta(0, a) = 1/2 - a over 100 a in (0, 5]", worst < 1e-12, f"max residual {worst:.2e} < 1e-12")


def test_criterion_02_negative_integers(acceptance):
    worst = 0.0
    for n in range(9):
        p = bern.bernoulli_polynomial(n + 1)
        for a in (Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(3, 2)):
            worst = max(worst, abs(hurwitz_zeta(-n, float(a)).real - float(bern.zeta_neg_int_exact(n, a))))
        oracle = -sum(float(c) * math.e**k for k, c in enumerate(p.coefficients)) / (n + 1)
        worst = max(worst, abs(hurwitz_zeta(-n, math.e).real - oracle))
    acceptance(2, "B_{n+1}(a) = -(n+1) zeta(-n, a), n <= 8", worst < 1e-10, f"max residual {worst:.2e} < 1e-10")


def test_criterion_03_unit_shift(acceptance):
    worst = 0.0
    for s in (-3.5, -1.0, 0.5 + 2j, 3.0):
        for a in (0.1, 0.5, 1.0, 2.7):
            r = complex(hurwitz_zeta(s, a)) - complex(hurwitz_zeta(s, a + 1)) - a ** (-s)
            worst = max(worst, abs(r))
    acceptance(3, "zeta(s, a) - zeta(s, a+1) = a^-s on the s x a grid", worst < 1e-10, f"max residual {worst:.2e} < 1e-10")


def test_criterion_04_exact_bernoulli_identities(acceptance):
    failures = 0
    checked = 0
    for m in range(13):
        p = bern.bernoulli_polynomial(m + 1)
        for a in RATIONALS:
            failures += p(a + 1) - p(a) != (m + 1) * a**m
            failures += p(1 - a) != (-1) ** (m + 1) * p(a)
            checked += 2
    for n in range(1, 11):
        p = bern.bernoulli_polynomial(n)
        for m in range(2, 7):
            for a in RATIONALS:
                lhs = sum((p(a + Fraction(r, m)) for r in range(m)), Fraction(0))
                failures += lhs != Fraction(m) ** (1 - n) * p(m * a)
                checked += 1
    acceptance(
        4,
        "difference, reflection and multiplication of B_n, exact",
        failures == 0,
        f"{checked - failures}/{checked} exact equalities",
    )


def test_criterion_05_gamma_identities(acceptance):
    rec = max(abs(log_gamma(a + 1) - log_gamma(a) - math.log(a)) for a in (0.1, 0.5, 1.0, 2.3, 7.0))
    refl = max(abs(gamma_reflection_residual(a)) for a in (0.1, 0.25, 0.5, 0.9))
    mult = max(abs(gamma_multiplication_residual(a, n)) for a in (0.3, 0.7, 1.0, 2.2) for n in (2, 3, 5))
    # reflection at 1/2 reads Gamma(1/2)^2 = pi / sin(pi/2)
    half = abs(math.exp(log_gamma(0.5)) - math.sqrt(math.pi))
    passed = max(rec, refl, mult) < 1e-9 and half < 1e-10
    acceptance(
        5,
        "Gamma recurrence, reflection, multiplication; Gamma(1/2)",
        passed,
        f"rec {rec:.1e}, refl {refl:.1e}, mult {mult:.1e} < 1e-9; Gamma(1/2) {half:.1e} < 1e-10",
    )


def test_criterion_06_gauss_digamma(acceptance):
    vs_kernel = 0.0
    forms = 0.0
    for q in range(2, 21):
        for a in range(1, q):
            g = gauss_digamma(a, q)
            vs_kernel = max(vs_kernel, abs(g - psi(a / q)))
            forms = max(forms, abs(g - gauss_digamma_proof_form(a, q)))
    acceptance(
        6,
        "Gauss digamma for 1 <= a < q <= 20",
        vs_kernel < 1e-9 and forms < 1e-12,
        f"vs psi {vs_kernel:.1e} < 1e-9, forms {forms:.1e} < 1e-12",
    )


def test_criterion_07_stirling(acceptance):
    series = max(abs(stirling_log_gamma(a) - log_gamma(a)) for a in (0.5, 1.0, 2.0, 10.0, 50.0))
    constant = abs(stirling_constant_quadrature(10_000) - HALF_LOG_2PI)
    acceptance(
        7,
        "Stirling series vs zeta route; 1 + int phi(u)/u du = log sqrt(2 pi)",
        series < 1e-9 and constant < 1e-3,
        f"series {series:.1e} < 1e-9, constant {constant:.1e} < 1e-3",
    )


def test_criterion_08_functional_equation(acceptance):
    worst_ratio = 0.0
    for s in (-0.5, -1.5, -2.0, -3.5):
        for a in (0.1, 0.3, 0.5, 0.7, 0.9):
            f = hurwitz_formula(s, a)
            z = hurwitz_zeta(s, a)
            worst_ratio = max(worst_ratio, abs(f.real - z.real) / (f.err_estimate + z.err_estimate))
    refl_ratio = 0.0
    for m in range(4):
        for a in (0.2, 0.4):
            left = hurwitz_formula(-m, 1 - a)
            right = hurwitz_formula(-m, a)
            residual = abs(left.real - (-1) ** (m + 1) * right.real)
            refl_ratio = max(refl_ratio, residual / (left.err_estimate + right.err_estimate))
    acceptance(
        8,
        "Fourier side vs kernel; Bernoulli reflection via Fourier, m <= 3",
        worst_ratio <= 1 and refl_ratio <= 1,
        f"residual / combined estimate {worst_ratio:.2f} and {refl_ratio:.2e} <= 1",
    )


def test_criterion_09_l_series(acceptance):
    chi = next(c for c in build_character_group(4) if c(3) == -1)
    catalan = abs(l_series(2, chi).real - alternating_odd_series(2))
    leibniz = abs(l_series(1, chi).real - math.pi / 4)
    ortho = 0.0
    for q in range(1, 31):
        group = build_character_group(q)
        for i, x in enumerate(group):
            for j, y in enumerate(group):
                inner = sum(x(a) * y(a).conjugate() for a in range(q))
                ortho = max(ortho, abs(inner - (len(group) if i == j else 0)))
    acceptance(
        9,
        "L(2, chi_4) Catalan, L(1, chi_4) = pi/4, orthogonality q <= 30",
        catalan < 1e-9 and leibniz < 1e-9 and ortho < 1e-10,
        f"Catalan {catalan:.1e}, pi/4 {leibniz:.1e} < 1e-9; orthogonality {ortho:.1e} < 1e-10",
    )


def test_criterion_10_kummer(acceptance):
    params = FourierParams(n_terms=100_000, use_averaging=True)
    vs_kernel = max(
        abs(zeta_sderiv_at_zero_fourier(a, params) - hurwitz_zeta_sderiv(0, a).real) for a in (0.25, 0.5)
    )
    reflection = max(
        abs(
            zeta_sderiv_at_zero_fourier(a, params)
            + zeta_sderiv_at_zero_fourier(1 - a, params)
            + math.log(2 * math.sin(math.pi * a))
        )
        for a in (0.1, 0.25, 0.3)
    )
    acceptance(
        10,
        "Kummer series for zeta'(0, a), N = 1e5 with averaging",
        vs_kernel < 1e-3 and reflection < 1e-3,
        f"vs kernel {vs_kernel:.1e}, reflection {reflection:.1e} < 1e-3",
    )


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "hurwitz", *args], capture_output=True, text=True)


def test_criterion_11_cli(acceptance):
    first = _cli("verify", "--format", "json")
    second = _cli("verify", "--format", "json")
    report = json.loads(first.stdout)
    golden_ok = True
    for name, argv in GOLDEN_CASES.items():
        path = GOLDEN / f"{name}.json"
        out = _cli(*argv, "--format", "json")
        golden_ok &= out.returncode == 0 and out.stdout == path.read_text(encoding="utf-8")
    passed = first.returncode == 0 and report["passed"] and first.stdout == second.stdout and golden_ok
    acceptance(
        11,
        "CLI verify, JSON golden files, repeated runs",
        passed,
        f"verify exit {first.returncode} over {len(report['records'])} identities, "
        f"byte-identical {first.stdout == second.stdout}, golden {golden_ok}",
    )

