"""Membership predicates for the maximal, minimal and left-definite domains.

All left-definite boundary conditions are imposed at each endpoint
separately.  Imposed only as a difference between the endpoints they would
give n conditions, while the deficiency indices (2n, 2n) call for 2n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .endpoint_algebra import (
    MINUS,
    PLUS,
    LimitClass,
    Params,
    Raw,
    TermFunction,
    is_L2,
    leading_exponent,
    limit_of_raw,
    raw_diff,
    raw_shift,
)
from .errors import DegenerateParameter, PreconditionViolated
from .jacobi_operator import apply_ln_composed, derive_symmetric_coefficients
from .sesquilinear import sesqui_eval, sesqui_raw
from .special_functions import jacobi_poly, phi, psi

__all__ = [
    "DomainReport",
    "in_maximal",
    "smoothness_report",
    "in_minimal",
    "defect_basis",
    "leftdef_membership",
    "leftdef_flags",
    "f_conditions",
    "verify_maxdomain_theorem",
    "MaxDomainReport",
    "stacking_holds",
]

_SIDES = ((PLUS, "+1"), (MINUS, "-1"))


def in_maximal(f: TermFunction, n: int, p: Params) -> bool:
    """``f`` and ``l^n[f]`` both square integrable against the weight."""
    if not is_L2(f, p):
        return False
    return is_L2(apply_ln_composed(f, n, p), p)


@dataclass
class DomainReport:
    in_max: bool
    smoothness_limits: List[Tuple[str, int, LimitClass]] = field(default_factory=list)
    derivative_limits: List[Tuple[str, Tuple[int, int], LimitClass]] = field(default_factory=list)
    in_min: Optional[bool] = None
    leftdef_flags: Dict[str, bool] = field(default_factory=dict)

    @property
    def counterexamples(self) -> list:
        bad = [(s, j) for s, j, c in self.smoothness_limits if c.is_infinite]
        bad += [(s, kj) for s, kj, c in self.derivative_limits if c.is_infinite]
        return bad

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "in_max": self.in_max,
            "smoothness_limits": [
                {"endpoint": s, "j": j, "limit": c.to_json()} for s, j, c in self.smoothness_limits
            ],
            "derivative_limits": [
                {"endpoint": s, "k": kj[0], "j": kj[1], "limit": c.to_json()}
                for s, kj, c in self.derivative_limits
            ],
            "in_min": "not-evaluated" if self.in_min is None else self.in_min,
            "leftdef_flags": dict(self.leftdef_flags),
            "ok": self.ok,
        }


def _weighted_derivative(f: Raw, k: int, p: Params) -> Raw:
    return raw_shift(raw_diff(f, k), p.alpha + k, p.beta + k)


def smoothness_report(f: TermFunction, n: int, p: Params) -> DomainReport:
    """Classify every endpoint limit that membership in the maximal domain forces finite.

    These are ``(1-x)^(alpha+j)(1+x)^(beta+j) f^(j)`` for ``j = 0..n`` and
    ``[(1-x)^(alpha+k)(1+x)^(beta+k) f^(k)]^(k-j)`` for ``1 <= j < k <= n``.
    """
    if not in_maximal(f, n, p):
        raise PreconditionViolated("function is not in the maximal domain")
    rep = DomainReport(in_max=True)
    for side, label in _SIDES:
        raw = f.raw_at(side)
        for j in range(n + 1):
            rep.smoothness_limits.append((label, j, limit_of_raw(_weighted_derivative(raw, j, p), side)))
        for k in range(n + 1):
            base = _weighted_derivative(raw, k, p)
            for j in range(1, k):
                rep.derivative_limits.append(
                    (label, (k, j), limit_of_raw(raw_diff(base, k - j), side))
                )
    return rep


def defect_basis(n: int, p: Params) -> List[TermFunction]:
    """``phi_j^+, psi_j^+`` and ``phi_j^-, psi_j^-`` for ``j < n``; 4n germ-only functions."""
    if p.alpha == 0 or p.beta == 0:
        raise DegenerateParameter("the defect basis needs alpha > 0 and beta > 0")
    out = []
    for side in (PLUS, MINUS):
        out += [phi(j, side) for j in range(n)]
        out += [psi(j, side, p) for j in range(n)]
    return out


def in_minimal(f: TermFunction, n: int, p: Params) -> bool:
    """``f`` pairs to zero with every element of the 4n-dimensional defect basis."""
    basis = defect_basis(n, p)
    if not in_maximal(f, n, p):
        raise PreconditionViolated("function is not in the maximal domain")
    return all(not sesqui_eval(f, b, n, p).full for b in basis)


def f_conditions(f: TermFunction, n: int, p: Params, *, form: str = "derivative") -> Dict[str, bool]:
    """The left-definite F conditions at each endpoint for ``j = 1..n``.

    ``form="derivative"`` tests ``[a_j f^(j)]^(j-1) -> 0``; ``form="sesqui"``
    tests ``[f, 1]_j -> 0``.  The two families are triangular combinations of
    each other and must agree.
    """
    out: Dict[str, bool] = {}
    one_raw = {(Fraction(0), Fraction(0)): Fraction(1)}
    for side, label in _SIDES:
        raw = f.raw_at(side)
        for j in range(1, n + 1):
            if form == "derivative":
                expr = raw_diff(_weighted_derivative(raw, j, p), j - 1)
            elif form == "sesqui":
                coeffs = derive_symmetric_coefficients(j, p).coeffs
                expr = sesqui_raw(raw, one_raw, j, p, coeffs)
            else:
                raise ValueError(f"unknown form {form!r}")
            out[f"{label}:j={j}"] = limit_of_raw(expr, side).is_zero
    return out


def _weighted_L2(raw: Raw, side: int, p: Params) -> bool:
    par = p.param(side)
    return leading_exponent(raw, side, -(1 + par) / 2) is None


def _flag_A(f: TermFunction, n: int, p: Params) -> bool:
    for side, _ in _SIDES:
        expr = raw_shift(raw_diff(f.raw_at(side), 2 * n), n * (p.alpha + 1), n * (p.beta + 1))
        if not _weighted_L2(expr, side, p):
            return False
    return True


def _flag_LW(f: TermFunction, n: int, p: Params) -> bool:
    for side, _ in _SIDES:
        raw = f.raw_at(side)
        for j in range(2 * n + 1):
            expr = raw_shift(raw_diff(raw, j), Fraction(j, 2), Fraction(j, 2))
            if not _weighted_L2(expr, side, p):
                return False
    return True


def _flag_B(f: TermFunction, n: int, p: Params) -> bool:
    for j in range(n):
        r = sesqui_eval(f, jacobi_poly(j, p), n, p)
        if not (r.at_plus.is_zero and r.at_minus.is_zero):
            return False
    return True


def leftdef_membership(f: TermFunction, n: int, p: Params, which: str) -> bool:
    """One of the left-definite characterizations ``A``, ``B``, ``F`` or ``LW``.

    ``A``: ``p^n f^(2n)`` square integrable, ``p = (1-x)^(alpha+1)(1+x)^(beta+1)``.
    ``B``: ``[f, P_j]_n`` vanishes at both endpoints for ``j < n``.
    ``F``: ``[a_j f^(j)]^(j-1)`` vanishes at both endpoints for ``j = 1..n``.
    ``LW``: ``(1-x)^(j/2)(1+x)^(j/2) f^(j)`` square integrable for ``j = 0..2n``.
    """
    which = which.upper()
    if which not in ("A", "B", "F", "LW"):
        raise ValueError(f"unknown characterization {which!r}")
    if which == "B" and (p.alpha == 0 or p.beta == 0):
        raise DegenerateParameter("the B characterization is stated for alpha, beta > 0")
    if not in_maximal(f, n, p):
        raise PreconditionViolated("function is not in the maximal domain")
    if which == "A":
        return _flag_A(f, n, p)
    if which == "B":
        return _flag_B(f, n, p)
    if which == "F":
        return all(f_conditions(f, n, p).values())
    return _flag_LW(f, n, p)


def leftdef_flags(f: TermFunction, n: int, p: Params) -> Dict[str, bool]:
    flags = {w: leftdef_membership(f, n, p, w) for w in ("A", "F", "LW")}
    if p.alpha and p.beta:
        flags["B"] = leftdef_membership(f, n, p, "B")
    flags["F_sesqui"] = all(f_conditions(f, n, p, form="sesqui").values())
    return flags


@dataclass
class MaxDomainReport:
    n: int
    params: Params
    tested: List[str]
    reports: List[DomainReport]

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.reports)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "params": self.params.to_json(),
            "tested": self.tested,
            "passed": self.passed,
            "reports": [r.to_json() for r in self.reports],
        }


def verify_maxdomain_theorem(
    n: int, p: Params, sample: Sequence, names: Optional[Sequence[str]] = None
) -> MaxDomainReport:
    """Run :func:`smoothness_report` on every sample member; fails on any infinite limit."""
    sample = list(sample)
    names = list(names) if names is not None else [f"f{i}" for i in range(len(sample))]
    for nm, f in zip(names, sample):
        if not in_maximal(f, n, p):
            raise PreconditionViolated(f"sample member {nm} is not in the maximal domain")
    reports = [smoothness_report(f, n, p) for f in sample]
    return MaxDomainReport(n, p, names, reports)


def stacking_holds(f: TermFunction, m: int, n: int, p: Params) -> Optional[bool]:
    """If ``[f, P_j]_n`` vanishes at both ends for ``j <= m``, check it does for ``phi_m``.

    Returns None when the hypothesis fails (nothing to check).
    """
    for j in range(m + 1):
        r = sesqui_eval(f, jacobi_poly(j, p), n, p)
        if not (r.at_plus.is_zero and r.at_minus.is_zero):
            return None
    a = sesqui_eval(f, phi(m, PLUS), n, p)
    b = sesqui_eval(f, phi(m, MINUS), n, p)
    return a.at_plus.is_zero and b.at_minus.is_zero
