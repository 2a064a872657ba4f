"""Command-line front end.

Function specs::

    phi+:J  phi-:J      germ (1-x)^J at +1, or (1+x)^J at -1
    psi+:J  psi-:J      germ (1-x)^(-alpha+J) at +1, or (1+x)^(-beta+J) at -1
    P:M                 Jacobi polynomial of degree M
    const:C             constant C (exact, e.g. 3/2 or 1/2+1i)
    terms:JSON          global term list [{"coeff": "1/1", "a": "1/2", "b": "0"}, ...]
                        or an object {"germ_minus": [...], "germ_plus": [...]}

Exit codes: 0 success, 1 claim failure, 2 usage or parse error,
3 degenerate parameter.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional

from . import __version__
from .claims import CLAIMS, run_claim
from .domains import in_maximal, in_minimal, leftdef_flags, smoothness_report
from .endpoint_algebra import MINUS, PLUS, Params, TermFunction, constant
from .errors import (
    DegenerateParameter,
    IndeterminateLimit,
    NotUnitary,
    PreconditionViolated,
)
from .exact_numbers import embed, parse_scalar
from .gkn import (
    ExtensionMatrix,
    build_pairing_matrix,
    exact_rank,
    extension_from_unitary,
    glazman_symmetry_check,
    lin_indep_mod_minimal,
)
from .jacobi_operator import apply_l, apply_ln_composed, apply_ln_symmetric, derive_symmetric_coefficients
from .sesquilinear import sesqui_eval
from .special_functions import jacobi_poly, phi, psi

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3


class SpecError(ValueError):
    pass


def parse_function(spec: str, p: Params) -> TermFunction:
    """Parse a function spec string (see module docstring)."""
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise SpecError(f"function spec needs KIND:ARG, got {spec!r}")
    try:
        if kind in ("phi+", "phi-", "psi+", "psi-", "P"):
            idx = int(arg)
            if idx < 0:
                raise SpecError("index must be nonnegative")
            if kind == "P":
                return jacobi_poly(idx, p)
            side = PLUS if kind.endswith("+") else MINUS
            return phi(idx, side) if kind.startswith("phi") else psi(idx, side, p)
        if kind == "const":
            return constant(parse_scalar(arg))
        if kind == "terms":
            data = json.loads(arg)
            if isinstance(data, list):
                data = {"global": data}
            return TermFunction.from_json(data)
    except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        if isinstance(exc, SpecError):
            raise
        raise SpecError(f"cannot parse {spec!r}: {exc}") from exc
    raise SpecError(f"unknown function kind {kind!r}")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _default_precision() -> int:
    try:
        return int(os.environ.get("JACOBI_GKN_PRECISION", "256"))
    except ValueError:
        return 256


def _params(args) -> Params:
    return Params(args.alpha, args.beta)


def _config(args) -> dict:
    cfg = {
        "command": args.command,
        "alpha": f"{args.alpha.numerator}/{args.alpha.denominator}",
        "beta": f"{args.beta.numerator}/{args.beta.denominator}",
        "n": args.n,
        "precision_bits": args.precision,
        "output": args.output,
        "seed": args.seed,
    }
    for key in ("claim", "functions", "function", "mode", "check", "side", "unitary", "indices"):
        if hasattr(args, key):
            cfg[key] = getattr(args, key)
    return cfg


def _preview(x, bits: int) -> str:
    import mpmath

    v = embed(x, bits).value
    return mpmath.nstr(v, 20)


def cmd_apply(args) -> tuple:
    p = _params(args)
    f = parse_function(args.function, p)
    if args.mode == "composed":
        out = apply_ln_composed(f, args.n, p) if args.n > 1 else apply_l(f, p)
    else:
        out = apply_ln_symmetric(f, derive_symmetric_coefficients(args.n, p), p)
    return EXIT_OK, {"result": out.to_json(), "is_zero": out.is_zero()}


def cmd_verify(args) -> tuple:
    p = _params(args)
    kwargs = {"seed": args.seed}
    if args.indices:
        kwargs["indices"] = [int(x) for x in args.indices.split(",")]
    passed, evidence = run_claim(args.claim, args.n, p, **kwargs)
    return (EXIT_OK if passed else EXIT_FAIL), {"claim": args.claim, "passed": passed, "evidence": evidence}


def cmd_matrix(args) -> tuple:
    p = _params(args)
    sides = [PLUS, MINUS] if args.side == "both" else [PLUS if args.side == "+1" else MINUS]
    out = []
    for side in sides:
        m = build_pairing_matrix(args.n, p, side)
        js = m.to_json(args.precision)
        js["rank"] = exact_rank(m)
        out.append(js)
    return EXIT_OK, {"matrices": out}


def cmd_sesqui(args) -> tuple:
    p = _params(args)
    f = parse_function(args.functions[0], p)
    g = parse_function(args.functions[1], p)
    r = sesqui_eval(f, g, args.n, p)
    js = r.to_json()
    js["full_preview"] = _preview(r.full, args.precision)
    return EXIT_OK, {"result": js}


def cmd_domain(args) -> tuple:
    p = _params(args)
    f = parse_function(args.function, p)
    if args.check == "maximal":
        return EXIT_OK, {"result": in_maximal(f, args.n, p)}
    if args.check == "minimal":
        return EXIT_OK, {"result": in_minimal(f, args.n, p)}
    if args.check == "report":
        return EXIT_OK, {"result": smoothness_report(f, args.n, p).to_json()}
    return EXIT_OK, {"result": leftdef_flags(f, args.n, p)}


def cmd_extension(args) -> tuple:
    p = _params(args)
    try:
        data = json.loads(args.unitary)
    except json.JSONDecodeError as exc:
        raise SpecError(f"--unitary is not valid JSON: {exc}") from exc
    U = ExtensionMatrix.from_json(data)
    if U.n != args.n:
        raise SpecError(f"--unitary is {2 * U.n}x{2 * U.n}, expected {2 * args.n}x{2 * args.n}")
    W = extension_from_unitary(U, p)
    sym = glazman_symmetry_check(W, p)
    indep = lin_indep_mod_minimal(W, p)
    return (EXIT_OK if sym and indep else EXIT_FAIL), {
        "unitary": U.to_json(),
        "conditions": W.to_json(),
        "glazman_symmetric": sym,
        "independent_mod_minimal": indep,
    }


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=_rational, default=Fraction(1, 2))
    common.add_argument("--beta", type=_rational, default=Fraction(1, 2))
    common.add_argument("--n", type=int, default=1)
    common.add_argument("--precision", type=int, default=_default_precision(),
                        help="bits for numeric previews (env JACOBI_GKN_PRECISION)")
    common.add_argument("--output", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(
        prog="jacobi-gkn",
        description="Exact boundary-form computations for powers of the Jacobi operator.",
        epilog=__doc__.split("\n\n", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("apply", parents=[common], help="apply l^n to a function")
    sp.add_argument("function")
    sp.add_argument("--mode", choices=("composed", "symmetric"), default="composed")
    sp.set_defaults(handler=cmd_apply)

    sp = sub.add_parser("verify", parents=[common], help="verify a named claim")
    sp.add_argument("claim", choices=sorted(CLAIMS))
    sp.add_argument("--indices", default=None, help="comma-separated Jacobi indices")
    sp.set_defaults(handler=cmd_verify)

    sp = sub.add_parser("matrix", parents=[common], help="defect pairing matrix")
    sp.add_argument("--side", choices=("+1", "-1", "both"), default="both")
    sp.set_defaults(handler=cmd_matrix)

    sp = sub.add_parser("sesqui", parents=[common], help="evaluate [f, g]_n")
    sp.add_argument("functions", nargs=2)
    sp.set_defaults(handler=cmd_sesqui)

    sp = sub.add_parser("domain", parents=[common], help="domain membership")
    sp.add_argument("function")
    sp.add_argument("--check", choices=("maximal", "minimal", "report", "leftdef"), default="maximal")
    sp.set_defaults(handler=cmd_domain)

    sp = sub.add_parser("extension", parents=[common], help="extension from a unitary matrix")
    sp.add_argument("--unitary", required=True, help='JSON 2n x 2n array, e.g. [["1","0"],["0","1"]]')
    sp.set_defaults(handler=cmd_extension)
    return parser


def _emit(payload: dict, fmt: str, stream) -> None:
    if fmt == "json":
        stream.write(json.dumps(payload, indent=2) + "\n")
        return
    for key, value in payload.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value)
        stream.write(f"{key}: {value}\n")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    payload = {"schema": SCHEMA}
    try:
        payload["config"] = _config(args)
        _params(args)
        code, body = args.handler(args)
        payload.update(body)
    except DegenerateParameter as exc:
        code = EXIT_DEGENERATE
        payload["error"] = {"type": "DegenerateParameter", "message": str(exc)}
    except (SpecError, PreconditionViolated, NotUnitary, ValueError) as exc:
        code = EXIT_USAGE
        payload["error"] = {"type": type(exc).__name__, "message": str(exc)}
    except IndeterminateLimit as exc:
        code = EXIT_FAIL
        payload["error"] = {"type": "IndeterminateLimit", "message": str(exc)}
    _emit(payload, args.output, sys.stdout)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
