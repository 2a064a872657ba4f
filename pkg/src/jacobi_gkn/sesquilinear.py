"""Exact boundary forms of the powers of the Jacobi expression.

For ``A_k = C(n,k) (1-x)^(alpha+k) (1+x)^(beta+k)`` the form is::

    [f, g]_n = sum_{k=1}^n sum_{j=1}^k (-1)^(k+j) { [A_k g~^(k)]^(k-j) f^(j-1)
                                                  - [A_k f^(k)]^(k-j) g~^(j-1) }

with ``g~`` the complex conjugate of g.  Together with the symmetric form in
:mod:`jacobi_gkn.jacobi_operator` this gives Green's formula

    int_lo^hi (l^n[f] g~ - f l^n[g]~) w dx = [f, g]_n(hi) - [f, g]_n(lo).

At n = 1 the expression is ``p (f g~' - f' g~)``; the modified Wronskian
``p (f' g~ - f g~')`` is its negative and is available separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .endpoint_algebra import (
    MINUS,
    PLUS,
    LimitClass,
    Params,
    Raw,
    TermFunction,
    limit_of_raw,
    raw_add,
    raw_conj,
    raw_diff,
    raw_mul,
    raw_scale,
    raw_shift,
)
from .errors import IndeterminateLimit
from .exact_numbers import scalar_to_json, simplify
from .jacobi_operator import derive_symmetric_coefficients

__all__ = [
    "SesquiResult",
    "EndpointLimits",
    "sesqui_form_expression",
    "sesqui_eval",
    "sesqui_raw",
    "strong_limit_point_check",
    "modified_wronskian",
    "form_coefficients",
]


def form_coefficients(n: int, p: Params, coefficients: Optional[Sequence] = None):
    if coefficients is not None:
        if len(coefficients) != n:
            raise ValueError("need exactly n coefficients")
        return tuple(coefficients)
    return derive_symmetric_coefficients(n, p).coeffs


def sesqui_raw(f: Raw, g: Raw, n: int, p: Params, coeffs: Sequence) -> Raw:
    """The boundary expression on raw term lists (no normal form applied)."""
    gb = raw_conj(g)
    fd = [f]
    gd = [gb]
    for _ in range(n):
        fd.append(raw_diff(fd[-1]))
        gd.append(raw_diff(gd[-1]))
    out: Raw = {}
    for k in range(1, n + 1):
        ck = coeffs[k - 1]
        if not ck:
            continue
        ag = raw_scale(raw_shift(gd[k], p.alpha + k, p.beta + k), ck)
        af = raw_scale(raw_shift(fd[k], p.alpha + k, p.beta + k), ck)
        for j in range(1, k + 1):
            sign = 1 if (k + j) % 2 == 0 else -1
            part = raw_add(
                raw_mul(raw_diff(ag, k - j), fd[j - 1]),
                raw_scale(raw_mul(raw_diff(af, k - j), gd[j - 1]), -1),
            )
            out = raw_add(out, raw_scale(part, sign))
    return out


def sesqui_form_expression(
    f: TermFunction, g: TermFunction, n: int, p: Params, *, coefficients=None
) -> TermFunction:
    """The boundary expression ``[f, g]_n(x)`` as a term function, built germ-wise."""
    if n < 1:
        raise ValueError("n must be at least 1")
    coeffs = form_coefficients(n, p, coefficients)
    if f.has_global and g.has_global:
        return TermFunction.from_global(sesqui_raw(f.raw_global(), g.raw_global(), n, p, coeffs))
    return TermFunction.from_germs(
        sesqui_raw(f.raw_minus(), g.raw_minus(), n, p, coeffs),
        sesqui_raw(f.raw_plus(), g.raw_plus(), n, p, coeffs),
    )


@dataclass(frozen=True)
class SesquiResult:
    at_plus: LimitClass
    at_minus: LimitClass
    full: object
    n: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "at_plus": self.at_plus.to_json(),
            "at_minus": self.at_minus.to_json(),
            "full": scalar_to_json(self.full),
        }


@dataclass(frozen=True)
class EndpointLimits:
    at_plus: LimitClass
    at_minus: LimitClass

    def to_json(self) -> dict:
        return {"at_plus": self.at_plus.to_json(), "at_minus": self.at_minus.to_json()}


@lru_cache(maxsize=65536)
def _eval_cached(f: TermFunction, g: TermFunction, n: int, p: Params, coeffs) -> SesquiResult:
    plus = limit_of_raw(sesqui_raw(f.raw_plus(), g.raw_plus(), n, p, coeffs), PLUS)
    minus = limit_of_raw(sesqui_raw(f.raw_minus(), g.raw_minus(), n, p, coeffs), MINUS)
    if plus.is_infinite or minus.is_infinite:
        raise IndeterminateLimit(
            f"[f, g]_{n} diverges at {'+1' if plus.is_infinite else '-1'}"
        )
    return SesquiResult(plus, minus, simplify(plus.numeric() - minus.numeric()), n)


def sesqui_eval(
    f: TermFunction, g: TermFunction, n: int, p: Params, *, coefficients=None
) -> SesquiResult:
    """Exact endpoint limits of ``[f, g]_n`` and the difference ``[f, g]_n(1) - [f, g]_n(-1)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return _eval_cached(f, g, n, p, form_coefficients(n, p, coefficients))


def strong_limit_point_check(f: TermFunction, g: TermFunction, p: Params) -> EndpointLimits:
    """Limits of ``(1-x)^(alpha+1) (1+x)^(beta+1) f g~'`` at both endpoints."""

    def expr(fr: Raw, gr: Raw) -> Raw:
        return raw_shift(raw_mul(fr, raw_diff(raw_conj(gr))), p.alpha + 1, p.beta + 1)

    return EndpointLimits(
        limit_of_raw(expr(f.raw_plus(), g.raw_plus()), PLUS),
        limit_of_raw(expr(f.raw_minus(), g.raw_minus()), MINUS),
    )


def modified_wronskian(f: TermFunction, g: TermFunction, p: Params) -> SesquiResult:
    """``p (f' g~ - f g~')`` with ``p = (1-x)^(alpha+1) (1+x)^(beta+1)``; the negative of ``[f, g]_1``."""

    def expr(fr: Raw, gr: Raw) -> Raw:
        gb = raw_conj(gr)
        w = raw_add(raw_mul(raw_diff(fr), gb), raw_scale(raw_mul(fr, raw_diff(gb)), -1))
        return raw_shift(w, p.alpha + 1, p.beta + 1)

    plus = limit_of_raw(expr(f.raw_plus(), g.raw_plus()), PLUS)
    minus = limit_of_raw(expr(f.raw_minus(), g.raw_minus()), MINUS)
    if plus.is_infinite or minus.is_infinite:
        raise IndeterminateLimit("modified Wronskian diverges")
    return SesquiResult(plus, minus, simplify(plus.numeric() - minus.numeric()), 1)
