"""Floating-point cross-checks of the exact engine, built on mpmath.

Quadrature never touches the singular endpoints: intervals stay inside
(-1, 1) and the boundary contributions come from the exact expressions.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

import mpmath

from .endpoint_algebra import (
    PLUS,
    Params,
    Raw,
    TermFunction,
    _endpoint,
    limit_of_raw,
    raw_add,
    raw_conj,
    raw_mul,
    raw_scale,
    raw_shift,
)
from .errors import NoGlobalForm, ToleranceNotMet
from .exact_numbers import BigFloat, to_mp
from .jacobi_operator import apply_ln_composed
from .sesquilinear import form_coefficients, sesqui_raw

__all__ = [
    "DEFAULT_PRECISION",
    "QuadratureSpec",
    "NumericReport",
    "ProbeReport",
    "eval_raw",
    "weighted_integral",
    "green_identity_check",
    "limit_probe",
    "leftdef_inner",
    "jacobi_norm",
]


def _default_precision() -> int:
    try:
        return int(os.environ.get("JACOBI_GKN_PRECISION", "256"))
    except ValueError:
        return 256


DEFAULT_PRECISION = _default_precision()


def _mp(x):
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


@dataclass(frozen=True)
class QuadratureSpec:
    """Integration interval strictly inside (-1, 1) and accuracy settings."""

    interval: tuple = (Fraction(-1, 2), Fraction(1, 2))
    method: str = "tanh-sinh"
    target_rel_error: float = 1e-20
    max_subdivisions: int = 8
    precision_bits: int = DEFAULT_PRECISION

    def __post_init__(self):
        lo, hi = (Fraction(v) if not isinstance(v, float) else Fraction(v).limit_denominator(10**18) for v in self.interval)
        if not (-1 < lo < hi < 1):
            raise ValueError("interval must satisfy -1 < lo < hi < 1")
        object.__setattr__(self, "interval", (lo, hi))
        if self.method not in ("tanh-sinh", "gauss-legendre"):
            raise ValueError("method must be 'tanh-sinh' or 'gauss-legendre'")

    def to_json(self) -> dict:
        lo, hi = self.interval
        return {
            "interval": [str(lo), str(hi)],
            "method": self.method,
            "target_rel_error": float(self.target_rel_error),
            "max_subdivisions": self.max_subdivisions,
            "precision_bits": self.precision_bits,
        }


def eval_raw(raw: Raw, x) -> object:
    """Evaluate ``sum c (1-x)^a (1+x)^b`` at a point of (-1, 1) at current precision."""
    x = mpmath.mpf(x)
    u, v = 1 - x, 1 + x
    acc = mpmath.mpf(0)
    for (a, b), c in raw.items():
        acc += to_mp(c) * mpmath.power(u, _mp(a)) * mpmath.power(v, _mp(b))
    return acc


def _eval_near(raw: Raw, endpoint: int, h) -> object:
    """Evaluate at distance ``h`` from the endpoint with ``1 -/+ x`` formed exactly."""
    acc = mpmath.mpf(0)
    near, far = h, 2 - h
    for (a, b), c in raw.items():
        ea, eb = (a, b) if endpoint == PLUS else (b, a)
        acc += to_mp(c) * mpmath.power(near, _mp(ea)) * mpmath.power(far, _mp(eb))
    return acc


def _pick_raw(f: TermFunction, germ) -> Raw:
    if f.has_global:
        return f.raw_global()
    if germ is None:
        raise NoGlobalForm("function has no global form; pass germ='+1' or '-1'")
    return f.raw_at(_endpoint(germ))


def _adaptive(fn, spec: QuadratureSpec):
    """Integrate ``fn`` on spec.interval, halving panels until the error estimate is met.

    Returns ``(value, error, scale)`` where ``scale`` is a coarse estimate of
    ``int |fn|`` used as the floor for the relative test.
    """
    lo, hi = (_mp(v) for v in spec.interval)
    samples = 64
    step = (hi - lo) / samples
    scale = sum(abs(fn(lo + (i + mpmath.mpf(1) / 2) * step)) for i in range(samples)) * step
    tol = _mp(spec.target_rel_error)
    for level in range(spec.max_subdivisions + 1):
        pts = mpmath.linspace(lo, hi, 2**level + 1)
        val, err = mpmath.quad(fn, pts, method=spec.method, error=True)
        if err <= tol * max(abs(val), scale * mpmath.eps, mpmath.eps):
            return val, err, scale
    raise ToleranceNotMet(
        f"error estimate {mpmath.nstr(err, 5)} above target after {spec.max_subdivisions} subdivisions"
    )


def weighted_integral(
    f: TermFunction, g: TermFunction, spec: QuadratureSpec, p: Params, *, germ=None
) -> BigFloat:
    """``int f g~ w dx`` over the quadrature interval.

    Germ-only functions need ``germ`` to say which endpoint piece is valid on
    the interval; choosing an interval inside that piece's region is then the
    caller's responsibility.
    """
    fr = _pick_raw(f, germ)
    gr = _pick_raw(g, germ)
    integrand = raw_shift(raw_mul(fr, raw_conj(gr)), p.alpha, p.beta)
    with mpmath.workprec(spec.precision_bits):
        val, err, _ = _adaptive(lambda t: eval_raw(integrand, t), spec)
        return BigFloat(val, spec.precision_bits, err)


@dataclass
class NumericReport:
    claim: str
    symbolic: object
    numeric: object
    abs_err: object
    rel_err: object
    spec: dict

    def to_json(self) -> dict:
        def s(x):
            return mpmath.nstr(x, 20) if x is not None else None

        return {
            "claim": self.claim,
            "symbolic": s(self.symbolic),
            "numeric": s(self.numeric),
            "abs_err": s(self.abs_err),
            "rel_err": s(self.rel_err),
            "spec": self.spec,
        }


def green_identity_check(
    f: TermFunction,
    g: TermFunction,
    n: int,
    interval=(Fraction(-9, 10), Fraction(9, 10)),
    p: Params = Params(),
    *,
    precision_bits: int = DEFAULT_PRECISION,
    method: str = "gauss-legendre",
) -> NumericReport:
    """Compare ``int (l^n[f] g~ - f l^n[g]~) w`` with the boundary expression difference."""
    if not (f.has_global and g.has_global):
        raise NoGlobalForm("Green's formula check needs global forms")
    spec = QuadratureSpec(tuple(interval), method, 1e-30, 8, precision_bits)
    lf = apply_ln_composed(f, n, p).raw_global()
    lg = apply_ln_composed(g, n, p).raw_global()
    fr, gr = f.raw_global(), g.raw_global()
    # the two products are subtracted exactly so that f = g gives a zero integrand
    integrand = raw_add(
        raw_shift(raw_mul(lf, raw_conj(gr)), p.alpha, p.beta),
        raw_scale(raw_shift(raw_mul(fr, raw_conj(lg)), p.alpha, p.beta), -1),
    )
    bound = sesqui_raw(fr, gr, n, p, form_coefficients(n, p))
    lo, hi = spec.interval
    with mpmath.workprec(precision_bits):
        if integrand:
            lhs, _, _ = _adaptive(lambda t: eval_raw(integrand, t), spec)
        else:
            lhs = mpmath.mpf(0)
        rhs = eval_raw(bound, _mp(hi)) - eval_raw(bound, _mp(lo))
        abs_err = abs(lhs - rhs)
        denom = max(abs(lhs), abs(rhs))
        rel = mpmath.mpf(0) if denom == 0 else abs_err / denom
    return NumericReport("green_identity", rhs, lhs, abs_err, rel, spec.to_json())


@dataclass
class ProbeReport:
    endpoint: int
    ks: List[int]
    values: list
    fitted_exponent: object
    numeric_tag: str
    symbolic: object
    agree: bool
    abs_err: Optional[object] = None
    precision_bits: int = DEFAULT_PRECISION

    def to_json(self) -> dict:
        return {
            "claim": "limit_probe",
            "endpoint": "+1" if self.endpoint == PLUS else "-1",
            "ks": self.ks,
            "fitted_exponent": mpmath.nstr(self.fitted_exponent, 10),
            "numeric_tag": self.numeric_tag,
            "numeric": mpmath.nstr(self.values[-1], 25),
            "symbolic": self.symbolic.to_json(),
            "abs_err": None if self.abs_err is None else mpmath.nstr(self.abs_err, 5),
            "agree": self.agree,
            "spec": {"precision_bits": self.precision_bits},
        }


def limit_probe(
    expr: TermFunction,
    endpoint,
    p: Params = Params(),
    ks: Sequence[int] = tuple(range(10, 41)),
    *,
    precision_bits: int = DEFAULT_PRECISION,
    tol: float = 1e-10,
    threshold: float = 0.05,
) -> ProbeReport:
    """Probe ``expr`` at ``x = +/-(1 - 2^-k)`` and compare with the exact classification.

    The leading exponent is fitted from the two deepest samples.  It is read as
    Infinite below ``-threshold``, Zero above ``threshold`` and Finite
    otherwise, in which case the deepest sample is the value estimate.
    """
    e = _endpoint(endpoint)
    raw = expr.raw_at(e)
    ks = sorted(ks)
    if len(ks) < 2:
        raise ValueError("need at least two probe depths")
    symbolic = limit_of_raw(raw, e)
    lowest = min((a if e == PLUS else b) for (a, b) in raw) if raw else Fraction(0)
    guard = int(max(ks) * (abs(lowest) + 1)) + 64
    with mpmath.workprec(precision_bits + guard):
        values = [_eval_near(raw, e, mpmath.ldexp(1, -k)) for k in ks]
        v1, v2 = abs(values[-2]), abs(values[-1])
        if v1 == 0 and v2 == 0:
            fitted = mpmath.inf
        elif v1 == 0 or v2 == 0:
            fitted = mpmath.mpf(0)
        else:
            fitted = -(mpmath.log(v2, 2) - mpmath.log(v1, 2)) / (ks[-1] - ks[-2])
        if fitted < -threshold:
            tag = "infinite"
        elif fitted > threshold:
            tag = "zero"
        else:
            tag = "finite"
        err = None
        if symbolic.is_infinite:
            agree = tag == "infinite"
        else:
            target = to_mp(symbolic.numeric())
            err = abs(values[-1] - target)
            agree = tag != "infinite" and err <= tol * max(1, abs(target))
            if symbolic.is_zero:
                agree = agree and tag == "zero"
            else:
                agree = agree and tag == "finite"
        vals = [+v for v in values]
    return ProbeReport(e, list(ks), vals, fitted, tag, symbolic, bool(agree), err, precision_bits)


def jacobi_norm(m: int, p: Params, precision_bits: int = DEFAULT_PRECISION):
    """Closed-form ``int_{-1}^{1} P_m^2 w dx`` for the standard normalization."""
    with mpmath.workprec(precision_bits):
        a, b = _mp(p.alpha), _mp(p.beta)
        num = mpmath.power(2, a + b + 1) * mpmath.gamma(m + a + 1) * mpmath.gamma(m + b + 1)
        den = (2 * m + a + b + 1) * mpmath.gamma(m + a + b + 1) * mpmath.factorial(m)
        return num / den


def leftdef_inner(
    f: TermFunction, g: TermFunction, n: int, spec: QuadratureSpec, p: Params
) -> BigFloat:
    """``int l^n[f] g~ w dx`` over the quadrature interval."""
    if not (f.has_global and g.has_global):
        raise NoGlobalForm("left-definite inner product needs global forms")
    lf = apply_ln_composed(f, n, p)
    return weighted_integral(lf, g, spec, p)
