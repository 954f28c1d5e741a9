"""Command-line front end.

    hurwitz zeta --s-re 2 --alpha 1
    hurwitz gauss-digamma --a 1 --q 2 --format json
    hurwitz verify --profile strict --only prop3

Exit status: 0 success, 1 usage error, 2 domain error (including poles and
unsupported moduli), 3 convergence failure, 4 a verify identity failed.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import bernoulli as bern
from . import fourier, gamma, kernel, lseries
from .errors import ConvergenceError, DomainError
from .verify import PROFILES, run_verify

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_CONVERGENCE = 3
EXIT_VERIFY_FAILED = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits with 2 by default
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _real(text: str) -> float:
    """A finite real, written as a decimal or as p/q."""
    try:
        value = float(Fraction(text)) if "/" in text else float(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return value


def _rational(text: str) -> Fraction:
    try:
        return bern.parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _fmt(x: float) -> str:
    return format(x, ".15g")


def _fmt_complex(re: float, im: float) -> str:
    if im == 0:
        return _fmt(re)
    sign = "-" if im < 0 else "+"
    return f"{_fmt(re)} {sign} {_fmt(abs(im))}i"


def _result(op: str, inputs: dict, value: complex, err: float, exact: Any = None) -> dict:
    out = {
        "op": op,
        "inputs": inputs,
        "value": {"re": value.real, "im": value.imag},
        "err_estimate": err,
    }
    if exact is not None:
        out["exact"] = exact
    return out


def _eval_params(args: argparse.Namespace) -> kernel.EvalParams:
    try:
        return kernel.EvalParams(N=args.N, M=args.M, target_tol=args.tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _s(args: argparse.Namespace) -> complex:
    return complex(args.s_re, args.s_im)


def _s_inputs(args: argparse.Namespace) -> dict:
    return {"s_re": args.s_re, "s_im": args.s_im}


# -- operations ----------------------------------------------------------------


def op_zeta(args: argparse.Namespace) -> dict:
    r = kernel.hurwitz_zeta(_s(args), args.alpha, _eval_params(args))
    return _result("zeta", {**_s_inputs(args), "alpha": args.alpha}, complex(r), r.err_estimate)


def op_zeta_deriv(args: argparse.Namespace) -> dict:
    r = kernel.hurwitz_zeta_sderiv(_s(args), args.alpha, _eval_params(args))
    return _result("zeta-deriv", {**_s_inputs(args), "alpha": args.alpha}, complex(r), r.err_estimate)


def op_psi(args: argparse.Namespace) -> dict:
    params = _eval_params(args)
    value = gamma.psi(args.alpha, params)
    return _result("psi", {"alpha": args.alpha}, complex(value), params.target_tol)


def op_loggamma(args: argparse.Namespace) -> dict:
    if not args.alpha > 0:
        raise DomainError(f"argument must be a positive real, got {args.alpha}")
    r = kernel.hurwitz_zeta_sderiv(0.0, args.alpha, _eval_params(args))
    value = r.real + gamma.HALF_LOG_2PI
    return _result("loggamma", {"alpha": args.alpha}, complex(value), r.err_estimate)


def op_stirling(args: argparse.Namespace) -> dict:
    value, omitted = gamma._stirling(args.alpha, args.shift, args.terms)
    inputs = {"alpha": args.alpha, "shift": args.shift, "terms": args.terms}
    return _result("stirling", inputs, complex(value), omitted + 4 * kernel.EPS * abs(value))


def op_gauss_digamma(args: argparse.Namespace) -> dict:
    arg = gamma.RationalArgument(args.a, args.q)
    value = gamma.gauss_digamma(arg)
    q = arg.q
    # rounding: a few ulps of the largest partial sums involved
    scale = (
        gamma.EULER_GAMMA
        + math.log(q)
        + sum(abs(math.log(2 * math.sin(math.pi * r / q))) for r in range(1, q))
        + math.pi * (q - 1) / 2
    )
    return _result("gauss-digamma", {"a": arg.a, "q": q}, complex(value), 4 * kernel.EPS * scale)


def op_bernoulli_number(args: argparse.Namespace) -> dict:
    if args.n < 0:
        raise DomainError(f"index must be >= 0, got {args.n}")
    b = bern.bernoulli_number(args.n)
    return _result("bernoulli-number", {"n": args.n}, complex(float(b)), 0.0, bern.format_rational(b))


def op_bernoulli_poly(args: argparse.Namespace) -> dict:
    if args.n < 0:
        raise DomainError(f"degree must be >= 0, got {args.n}")
    p = bern.bernoulli_polynomial(args.n)
    at = p(args.alpha)
    exact = {
        "value": bern.format_rational(at),
        "coefficients": p.to_strings(),
        "pretty": p.pretty(),
    }
    inputs = {"n": args.n, "alpha": bern.format_rational(args.alpha)}
    return _result("bernoulli-poly", inputs, complex(float(at)), 0.0, exact)


def op_zeta_neg(args: argparse.Namespace) -> dict:
    if args.m < 0:
        raise DomainError(f"m must be >= 0, got {args.m}")
    if not args.alpha > 0:
        raise DomainError(f"alpha must be positive, got {args.alpha}")
    value = bern.zeta_neg_int_exact(args.m, args.alpha)
    inputs = {"m": args.m, "alpha": bern.format_rational(args.alpha)}
    return _result("zeta-neg", inputs, complex(float(value)), 0.0, bern.format_rational(value))


def op_hurwitz_fourier(args: argparse.Namespace) -> dict:
    try:
        params = fourier.FourierParams(n_terms=args.n_terms, use_averaging=not args.no_averaging)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    r = fourier.hurwitz_formula(_s(args), args.alpha, params)
    inputs = {**_s_inputs(args), "alpha": args.alpha, "n_terms": args.n_terms, "averaging": not args.no_averaging}
    return _result("hurwitz-fourier", inputs, complex(r), r.err_estimate)


def _load_character(path: str) -> lseries.DirichletCharacter:
    try:
        with open(path, encoding="utf-8") as fh:
            return lseries.DirichletCharacter.from_json(fh.read())
    except (OSError, json.JSONDecodeError, DomainError) as exc:
        raise UsageError(f"cannot use character table {path!r}: {exc}") from None


def op_lseries(args: argparse.Namespace) -> dict:
    if args.char_file is not None:
        if args.q is not None or args.index is not None:
            raise UsageError("--char-file excludes --q/--index")
        chi = _load_character(args.char_file)
        inputs = {**_s_inputs(args), "char_file": args.char_file}
    else:
        if args.q is None or args.index is None:
            raise UsageError("need --q and --index, or --char-file")
        group = lseries.build_character_group(args.q)
        if not 0 <= args.index < len(group):
            raise UsageError(f"--index must lie in [0, {len(group)}) for q={args.q}")
        chi = group[args.index]
        inputs = {**_s_inputs(args), "q": args.q, "index": args.index}
    r = lseries.l_series(_s(args), chi, _eval_params(args))
    return _result("lseries", inputs, complex(r), r.err_estimate)


def op_characters(args: argparse.Namespace) -> dict:
    group = lseries.build_character_group(args.q)
    return {
        "op": "characters",
        "inputs": {"q": args.q},
        "count": len(group),
        "characters": [chi.to_dict()["values"] for chi in group],
    }


# -- rendering -------------------------------------------------------------------


def _render_text(doc: dict) -> str:
    op = doc["op"]
    if op == "characters":
        lines = [f"{doc['count']} characters mod {doc['inputs']['q']}"]
        for i, values in enumerate(doc["characters"]):
            cells = ", ".join(_fmt_complex(re, im) for re, im in values)
            lines.append(f"[{i}] {cells}")
        return "\n".join(lines)
    lines = []
    exact = doc.get("exact")
    if op == "bernoulli-poly":
        lines.append(exact["pretty"])
        lines.append(json.dumps(exact["coefficients"]))
        lines.append(f"at alpha={doc['inputs']['alpha']}: {exact['value']}")
    elif exact is not None:
        lines.append(f"exact: {exact}")
    lines.append(f"value: {_fmt_complex(doc['value']['re'], doc['value']['im'])}")
    lines.append(f"err_estimate: {_fmt(doc['err_estimate'])}")
    return "\n".join(lines)


def _emit(doc: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(doc, ensure_ascii=False))
    else:
        print(_render_text(doc))


# -- parser ----------------------------------------------------------------------


def _add_s(p: argparse.ArgumentParser) -> None:
    p.add_argument("--s-re", type=_real, required=True, help="real part of s")
    p.add_argument("--s-im", type=_real, default=0.0, help="imaginary part of s (default 0)")


def _add_kernel_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--N", type=int, default=None, help="starting truncation (default: automatic)")
    p.add_argument("--M", type=int, default=12, help="Euler-Maclaurin tail order (default 12)")
    p.add_argument("--tol", type=float, default=1e-12, help="target truncation error (default 1e-12)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = _Parser(prog="hurwitz", description="Hurwitz zeta, log-gamma, digamma and Bernoulli tools.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, handler: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(handler=handler)
        return p

    p = add("zeta", op_zeta, "zeta(s, alpha)")
    _add_s(p)
    p.add_argument("--alpha", type=_real, required=True)
    _add_kernel_params(p)

    p = add("zeta-deriv", op_zeta_deriv, "d/ds zeta(s, alpha)")
    _add_s(p)
    p.add_argument("--alpha", type=_real, required=True)
    _add_kernel_params(p)

    p = add("psi", op_psi, "digamma psi(alpha)")
    p.add_argument("--alpha", type=_real, required=True)
    _add_kernel_params(p)

    p = add("loggamma", op_loggamma, "log Gamma(alpha) via zeta'(0, alpha)")
    p.add_argument("--alpha", type=_real, required=True)
    _add_kernel_params(p)

    p = add("stirling", op_stirling, "log Gamma(alpha) from Stirling's series")
    p.add_argument("--alpha", type=_real, required=True)
    p.add_argument("--shift", type=_real, default=gamma.STIRLING_SHIFT, help="shift alpha above this before summing")
    p.add_argument("--terms", type=int, default=gamma.STIRLING_TERMS, help="number of series terms")

    p = add("gauss-digamma", op_gauss_digamma, "psi(a/q) by Gauss's finite formula")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = add("bernoulli-number", op_bernoulli_number, "exact B_n")
    p.add_argument("--n", type=int, required=True)

    p = add("bernoulli-poly", op_bernoulli_poly, "exact B_n(x) coefficients")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=_rational, default=Fraction(0), help="evaluation point (default 0)")

    p = add("zeta-neg", op_zeta_neg, "exact zeta(-m, alpha) for rational alpha")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--alpha", type=_rational, required=True)

    p = add("hurwitz-fourier", op_hurwitz_fourier, "zeta(s, alpha) from the Fourier series, real s <= 0")
    _add_s(p)
    p.add_argument("--alpha", type=_real, required=True)
    p.add_argument("--n-terms", type=int, default=fourier.DEFAULT_FOURIER.n_terms)
    p.add_argument("--no-averaging", action="store_true")

    p = add("lseries", op_lseries, "Dirichlet L(s, chi)")
    _add_s(p)
    p.add_argument("--q", type=int, help="modulus; pick the character by --index")
    p.add_argument("--index", type=int, help="position in the 'characters' listing")
    p.add_argument("--char-file", help="JSON character table {q, values: [[re, im], ...]}")
    _add_kernel_params(p)

    p = add("characters", op_characters, "list all characters mod q")
    p.add_argument("--q", type=int, required=True)

    p = add("verify", None, "run the identity suite")
    p.add_argument("--profile", choices=sorted(PROFILES), default="default")
    p.add_argument(
        "--only",
        action="append",
        default=None,
        help="keep identities whose name contains KEY or tagged KEY (repeatable)",
    )
    return parser


def _run_verify(args: argparse.Namespace) -> int:
    report = run_verify(args.profile, args.only)
    if args.format == "json":
        print(json.dumps(report.to_dict()))
    else:
        print(report.render_text())
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _run_verify(args)
        _emit(args.handler(args), args.format)
    except UsageError as exc:
        print(f"hurwitz {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"hurwitz {args.command}: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        print(f"hurwitz {args.command}: no convergence: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
