"""Catalog of test functions: endpoint germs, Jacobi polynomials, local solutions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Tuple

from .endpoint_algebra import (
    MINUS,
    PLUS,
    Germ,
    Params,
    TermFunction,
    _endpoint,
    germ_series,
)
from .errors import DegenerateParameter, PreconditionViolated
from .exact_numbers import pow2

__all__ = [
    "CatalogEntry",
    "phi",
    "psi",
    "jacobi_poly",
    "jacobi_coefficients",
    "local_solution_germ",
    "span_coordinates",
    "catalog",
]


@dataclass(frozen=True)
class CatalogEntry:
    kind: str
    index: int
    function: TermFunction

    @property
    def name(self) -> str:
        return f"{self.kind}:{self.index}"

    def to_json(self) -> dict:
        return {"kind": self.kind, "index": self.index, "function": self.function.to_json()}


def _germ_only(endpoint: int, key) -> TermFunction:
    raw = {key: Fraction(1)}
    if endpoint == PLUS:
        return TermFunction.from_germs({}, raw)
    return TermFunction.from_germs(raw, {})


def phi(j: int, endpoint) -> TermFunction:
    """``(1-x)^j`` near +1 (or ``(1+x)^j`` near -1) and 0 at the other end."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    e = _endpoint(endpoint)
    key = (Fraction(j), Fraction(0)) if e == PLUS else (Fraction(0), Fraction(j))
    return _germ_only(e, key)


def psi(j: int, endpoint, p: Params) -> TermFunction:
    """``(1-x)^(-alpha+j)`` near +1 (or ``(1+x)^(-beta+j)`` near -1), 0 at the other end."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    e = _endpoint(endpoint)
    par = p.param(e)
    if par == 0:
        side = "alpha" if e == PLUS else "beta"
        raise DegenerateParameter(
            f"second-kind germ needs {side} > 0; at {side} = 0 it carries a logarithm"
        )
    key = (-par + j, Fraction(0)) if e == PLUS else (Fraction(0), -par + j)
    return _germ_only(e, key)


def _poch(x: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= x + i
    return out


def jacobi_coefficients(m: int, p: Params) -> List[Fraction]:
    """Coefficients ``c_j`` with ``P_m = sum_j c_j (1-x)^j``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    s = m + p.alpha + p.beta + 1
    out = []
    for j in range(m + 1):
        c = _poch(p.alpha + j + 1, m - j) * _poch(s, j)
        c /= factorial(j) * factorial(m - j)
        c *= Fraction((-1) ** j, 2**j)
        out.append(c)
    return out


def jacobi_poly(m: int, p: Params) -> TermFunction:
    """The Jacobi polynomial of degree m, standard normalization ``P_m(1) = (alpha+1)_m/m!``."""
    raw = {
        (Fraction(j), Fraction(0)): c for j, c in enumerate(jacobi_coefficients(m, p)) if c
    }
    return TermFunction.from_global(raw)


def _hyp_coeffs(a: Fraction, b: Fraction, c: Fraction, order: int) -> List[Fraction]:
    """Taylor coefficients of 2F1(a, b; c; z) up to z^order."""
    out = [Fraction(1)]
    for k in range(order):
        out.append(out[-1] * (a + k) * (b + k) / ((c + k) * (k + 1)))
    return out


def local_solution_germ(mu, endpoint, truncation_order: int, p: Params) -> Tuple[Germ, Germ]:
    """Truncated local solutions of ``l[f] = mu (mu + alpha + beta + 1) f``.

    At +1 with ``u = 1 - x`` these are ``2F1(-mu, mu+alpha+beta+1; alpha+1; u/2)``
    and ``(u/2)^(-alpha) 2F1(-mu-alpha, mu+beta+1; 1-alpha; u/2)``; at -1 the
    parameters swap and ``u`` becomes ``1 + x``.  Powers of ``u`` above
    ``truncation_order`` (relative to the leading power) are dropped.
    """
    mu = Fraction(mu)
    e = _endpoint(endpoint)
    near, far = (p.alpha, p.beta) if e == PLUS else (p.beta, p.alpha)
    if near == 0:
        raise DegenerateParameter("second local solution needs a positive parameter")
    if truncation_order < 0:
        raise ValueError("truncation_order must be nonnegative")

    def key(power: Fraction):
        return (power, Fraction(0)) if e == PLUS else (Fraction(0), power)

    first = {}
    for k, c in enumerate(_hyp_coeffs(-mu, mu + near + far + 1, near + 1, truncation_order)):
        if c:
            first[key(Fraction(k))] = c / 2**k
    second = {}
    pref = pow2(near)
    for k, c in enumerate(_hyp_coeffs(-mu - near, mu + far + 1, 1 - near, truncation_order)):
        if c:
            second[key(-near + k)] = pref * (c / 2**k)
    return Germ(e, first), Germ(e, second)


def span_coordinates(germ: Germ, n: int, p: Params) -> Dict[Tuple[str, int], object]:
    """Coordinates of a germ on ``phi_0..phi_(n-1), psi_0..psi_(n-1)`` at its endpoint.

    Only local exponents below ``n`` are read; the remaining tail pairs to zero
    with every defect element and so lies in the minimal domain.  An exponent
    below ``n`` outside the two classes raises :class:`PreconditionViolated`.
    """
    par = p.param(germ.endpoint)
    series = germ_series(germ.raw, germ.endpoint, Fraction(n) - Fraction(1, 10**9))
    out: Dict[Tuple[str, int], object] = {}
    for e, c in series.items():
        if e.denominator == 1 and 0 <= e < n:
            out[("phi", int(e))] = c
        elif par and (e + par).denominator == 1 and 0 <= e + par < n:
            out[("psi", int(e + par))] = c
        elif e + par >= n:
            continue
        else:
            raise PreconditionViolated(f"local exponent {e} is outside the defect span")
    return out


def catalog(n: int, p: Params, max_degree: int = 6, extra: int = 3) -> List[CatalogEntry]:
    """phi/psi germs of index below ``n + extra`` and Jacobi polynomials up to ``max_degree``.

    psi entries are skipped at endpoints whose parameter is 0.
    """
    out: List[CatalogEntry] = []
    for j in range(n + extra):
        out.append(CatalogEntry("phi+", j, phi(j, PLUS)))
        out.append(CatalogEntry("phi-", j, phi(j, MINUS)))
        if p.alpha:
            out.append(CatalogEntry("psi+", j, psi(j, PLUS, p)))
        if p.beta:
            out.append(CatalogEntry("psi-", j, psi(j, MINUS, p)))
    for m in range(max_degree + 1):
        out.append(CatalogEntry("P", m, jacobi_poly(m, p)))
    return out
