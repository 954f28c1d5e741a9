"""Special functions built on the Hurwitz zeta function zeta(s, alpha).

Exact Bernoulli numbers and polynomials, an Euler-Maclaurin evaluator for
zeta(s, alpha) and its s-derivative, log Gamma and digamma derived from it,
Fourier-series cross-checks, and Dirichlet L-series of small modulus.
"""

from .bernoulli import (
    BernoulliPolynomial,
    Rational,
    bernoulli_number,
    bernoulli_polynomial,
    zeta_neg_int_exact,
)
from .errors import ConvergenceError, DomainError, HurwitzError, LimitError, PoleError
from .fourier import FourierParams, hurwitz_formula, log_sine_cosine_sum, zeta_sderiv_at_zero_fourier
from .gamma import (
    RationalArgument,
    gauss_digamma,
    log_gamma,
    psi,
    sin_product,
    stirling_log_gamma,
)
from .kernel import (
    ComplexValue,
    EvalParams,
    ZetaResult,
    hurwitz_zeta,
    hurwitz_zeta_sderiv,
    psi_via_pole_limit,
    taylor_zeta_shift,
)
from .lseries import DirichletCharacter, build_character_group, l_series

__version__ = "0.1.0"

__all__ = [
    "BernoulliPolynomial",
    "ComplexValue",
    "ConvergenceError",
    "DirichletCharacter",
    "DomainError",
    "EvalParams",
    "FourierParams",
    "HurwitzError",
    "LimitError",
    "PoleError",
    "Rational",
    "RationalArgument",
    "ZetaResult",
    "bernoulli_number",
    "bernoulli_polynomial",
    "build_character_group",
    "gauss_digamma",
    "hurwitz_formula",
    "hurwitz_zeta",
    "hurwitz_zeta_sderiv",
    "l_series",
    "log_gamma",
    "log_sine_cosine_sum",
    "psi",
    "psi_via_pole_limit",
    "sin_product",
    "stirling_log_gamma",
    "taylor_zeta_shift",
    "zeta_neg_int_exact",
    "zeta_sderiv_at_zero_fourier",
]
