"""The Jacobi expression, its powers, and their Lagrangian symmetric form.

Conventions::

    l[f]   = -(1/w) [ (1-x)^(alpha+1) (1+x)^(beta+1) f' ]'
    l^n[f] = (1/w) sum_{k=1}^n (-1)^k [ C(n,k) (1-x)^(alpha+k) (1+x)^(beta+k) f^(k) ]^(k)

with ``w = (1-x)^alpha (1+x)^beta``.  With this sign choice ``C(n, n) = 1``
for every n, and ``C(1, 1) = 1`` reproduces ``l`` itself.  The constants are
obtained by an exact linear solve against the composed operator, never
transcribed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from .endpoint_algebra import (
    Params,
    Raw,
    TermFunction,
    canonical_plus,
    raw_add,
    raw_diff,
    raw_scale,
    raw_shift,
)
from .errors import SingularSystem
from .exact_numbers import format_scalar
from .linalg import solve

__all__ = [
    "SymmetricForm",
    "apply_l",
    "apply_ln_composed",
    "apply_ln_symmetric",
    "derive_symmetric_coefficients",
    "eigenvalue",
    "raw_apply_l",
]


def eigenvalue(m: int, p: Params) -> Fraction:
    """``m (m + alpha + beta + 1)``, the eigenvalue of the degree-m Jacobi polynomial."""
    return m * (m + p.alpha + p.beta + 1)


def raw_apply_l(f: Raw, p: Params) -> Raw:
    d = raw_diff(f, 1)
    flux = raw_shift(d, p.alpha + 1, p.beta + 1)
    out = raw_diff(flux, 1)
    return raw_scale(raw_shift(out, -p.alpha, -p.beta), -1)


def apply_l(f: TermFunction, p: Params) -> TermFunction:
    """One application of the Jacobi expression, computed germ-wise."""
    return f.map_raw(lambda r: raw_apply_l(r, p))


def apply_ln_composed(f: TermFunction, n: int, p: Params) -> TermFunction:
    if n < 1:
        raise ValueError("n must be at least 1")

    def go(r: Raw) -> Raw:
        for _ in range(n):
            r = canonical_plus(raw_apply_l(r, p))
        return r

    return f.map_raw(go)


@dataclass(frozen=True)
class SymmetricForm:
    """Coefficients ``C(n, 1..n)`` of the Lagrangian symmetric form of ``l^n``."""

    n: int
    coeffs: Tuple[Fraction, ...]
    params: Params

    def C(self, k: int) -> Fraction:
        return self.coeffs[k - 1]

    def to_json(self) -> dict:
        return {"n": self.n, "C": [format_scalar(c) for c in self.coeffs]}


def _sym_term(f: Raw, k: int, p: Params) -> Raw:
    """``(1/w) (-1)^k [ a_k f^(k) ]^(k)`` for one value of k."""
    g = raw_shift(raw_diff(f, k), p.alpha + k, p.beta + k)
    g = raw_shift(raw_diff(g, k), -p.alpha, -p.beta)
    return raw_scale(g, (-1) ** k)


def _raw_symmetric(f: Raw, coeffs, p: Params) -> Raw:
    out: Raw = {}
    for k, c in enumerate(coeffs, start=1):
        if c:
            out = raw_add(out, raw_scale(_sym_term(f, k, p), c))
    return out


def _composed(f: Raw, n: int, p: Params) -> Raw:
    for _ in range(n):
        f = canonical_plus(raw_apply_l(f, p))
    return f


def _verification_family(n: int, p: Params) -> List[Raw]:
    one = Fraction(1)
    fam: List[Raw] = []
    top = 2 * n + 2
    for j in range(top + 1):
        fam.append({(Fraction(0), Fraction(j)): one})
    for i in range(1, top + 1):
        for j in range(1, top + 1 - i):
            fam.append({(Fraction(i), Fraction(j)): one})
    for j in range(top + 1):
        if p.alpha:
            fam.append({(-p.alpha + j, Fraction(0)): one})
        if p.beta:
            fam.append({(Fraction(0), -p.beta + j): one})
    return fam


@lru_cache(maxsize=None)
def derive_symmetric_coefficients(n: int, p: Params) -> SymmetricForm:
    """Solve for ``C(n, k)`` on ``(1-x)^j``, ``j <= 2n+2``, then verify on more inputs.

    The verification family covers ``(1+x)^j``, mixed products
    ``(1-x)^i (1+x)^j`` and the singular powers ``(1-x)^(-alpha+j)``,
    ``(1+x)^(-beta+j)``.  A mismatch raises :class:`SingularSystem`.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rows: List[List] = []
    rhs: List = []
    one = Fraction(1)
    for j in range(2 * n + 3):
        f = {(Fraction(j), Fraction(0)): one}
        target = _composed(f, n, p)
        parts = [canonical_plus(_sym_term(f, k, p)) for k in range(1, n + 1)]
        keys = set(target)
        for part in parts:
            keys.update(part)
        for key in sorted(keys):
            rows.append([part.get(key, 0) for part in parts])
            rhs.append(target.get(key, 0))
    coeffs = tuple(solve(rows, rhs))
    for f in _verification_family(n, p):
        resid = raw_add(_composed(f, n, p), raw_scale(_raw_symmetric(f, coeffs, p), -1))
        if canonical_plus(resid):
            raise SingularSystem(f"symmetric form for n={n} fails verification on {f}")
    return SymmetricForm(n, coeffs, p)


def apply_ln_symmetric(f: TermFunction, form: SymmetricForm, p: Params) -> TermFunction:
    if form.params != p:
        raise ValueError("symmetric form was derived for different parameters")
    return f.map_raw(lambda r: _raw_symmetric(r, form.coeffs, p))
