"""Exact scalars: Gaussian rationals and the real radical field Q(i)(2^(1/D)).

Every symbolic quantity in the package is one of three Python types:

* ``fractions.Fraction`` for rational numbers (``int`` is accepted on input),
* :class:`GaussianRational` for elements of Q(i) with nonzero imaginary part,
* :class:`AlgebraicValue` for sums ``sum_k c_k * t**k`` with ``t = 2**(1/D)``.

Arithmetic between any two of them returns the simplest type able to hold the
result, so rational data never pays for the heavier representations.

The polynomial x^D - 2 stays irreducible over Q(i): Q(2^(1/D)) is real of
degree D over Q (Eisenstein at 2), hence it does not contain i and
[Q(i, 2^(1/D)) : Q(i)] = D.  The monomials t^0..t^(D-1) are therefore a basis
and the zero test is a plain coefficient check.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Union

import mpmath

__all__ = [
    "GaussianRational",
    "AlgebraicValue",
    "BigFloat",
    "Scalar",
    "as_scalar",
    "simplify",
    "pow2",
    "conj",
    "is_zero",
    "parse_scalar",
    "format_scalar",
    "scalar_to_json",
    "scalar_from_json",
    "embed",
    "embed_real",
    "to_mp",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class GaussianRational:
    """An element ``re + im*i`` of Q(i) with Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @staticmethod
    def _coerce(other) -> Optional["GaussianRational"]:
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return simplify(GaussianRational(self.re + o.re, self.im + o.im))

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return simplify(GaussianRational(self.re - o.re, self.im - o.im))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return simplify(GaussianRational(o.re - self.re, o.im - self.im))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return simplify(
            GaussianRational(
                self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
            )
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return simplify(GaussianRational(self.re / n, -self.im / n))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, GaussianRational, "AlgebraicValue"]


def _gauss(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(x)


class AlgebraicValue:
    """``sum_k coeffs[k] * t**k`` with ``t = 2**(1/den)`` and ``0 <= k < den``.

    Instances are always normalized: exponents are reduced modulo ``den`` via
    ``t**den = 2``, zero coefficients are dropped and ``den`` is the smallest
    denominator able to express every stored exponent.
    """

    __slots__ = ("den", "coeffs")

    def __init__(self, den: int, coeffs: Dict[int, object]):
        if den < 1:
            raise ValueError("den must be positive")
        acc: Dict[int, GaussianRational] = {}
        for k, c in coeffs.items():
            c = _gauss(c)
            if not c:
                continue
            q, r = divmod(k, den)
            if q:
                c = c * Fraction(2) ** q
                c = _gauss(c)
            prev = acc.get(r)
            acc[r] = c if prev is None else _gauss(prev + c)
        acc = {k: c for k, c in acc.items() if c}
        g = den
        for k in acc:
            g = math.gcd(g, k)
        if g > 1:
            den //= g
            acc = {k // g: c for k, c in acc.items()}
        self.den = den
        self.coeffs = acc

    @classmethod
    def from_scalar(cls, x) -> "AlgebraicValue":
        if isinstance(x, AlgebraicValue):
            return x
        return cls(1, {0: x})

    def lift(self, den: int) -> Dict[int, GaussianRational]:
        """Coefficients re-expressed over ``2**(1/den)``; ``den`` must be a multiple."""
        if den % self.den:
            raise ValueError("target denominator must be a multiple")
        s = den // self.den
        return {k * s: c for k, c in self.coeffs.items()}

    @staticmethod
    def _coerce(other) -> Optional["AlgebraicValue"]:
        if isinstance(other, AlgebraicValue):
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return AlgebraicValue.from_scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = math.lcm(self.den, o.den)
        acc = dict(self.lift(d))
        for k, c in o.lift(d).items():
            acc[k] = acc[k] + c if k in acc else c
        return simplify(AlgebraicValue(d, acc))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicValue(self.den, {k: -c for k, c in self.coeffs.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = math.lcm(self.den, o.den)
        a, b = self.lift(d), o.lift(d)
        acc: Dict[int, object] = {}
        for i, ci in a.items():
            for j, cj in b.items():
                k = i + j
                p = ci * cj
                acc[k] = acc[k] + p if k in acc else p
        return simplify(AlgebraicValue(d, acc))

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero")
        if len(self.coeffs) == 1:
            (k, c), = self.coeffs.items()
            # t^k * t^(D-k) = 2
            inv = AlgebraicValue(self.den, {(self.den - k) % self.den: 1})
            scale = _gauss(c).inverse() * (Fraction(1, 2) if k else 1)
            return simplify(inv * scale)
        from .linalg import solve

        d = self.den
        # column j of the multiplication matrix holds the coordinates of x * t^j
        cols = []
        for j in range(d):
            prod = AlgebraicValue(d, {k + j: c for k, c in self.coeffs.items()})
            lifted = prod.lift(d)
            cols.append([lifted.get(i, GaussianRational()) for i in range(d)])
        rows = [[cols[j][i] for j in range(d)] for i in range(d)]
        rhs = [1] + [0] * (d - 1)
        sol = solve(rows, rhs)
        return simplify(AlgebraicValue(d, {k: c for k, c in enumerate(sol)}))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def conjugate(self):
        # t is real, so conjugation acts on coefficients only
        return AlgebraicValue(
            self.den, {k: c.conjugate() for k, c in self.coeffs.items()}
        )

    def real_part(self):
        return simplify(AlgebraicValue(self.den, {k: c.re for k, c in self.coeffs.items()}))

    def imag_part(self):
        return simplify(AlgebraicValue(self.den, {k: c.im for k, c in self.coeffs.items()}))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.den == o.den and self.coeffs == o.coeffs

    def __hash__(self):
        if self.den == 1:
            return hash(self.coeffs.get(0, GaussianRational()))
        return hash((self.den, frozenset(self.coeffs.items())))

    def terms(self) -> Iterable[tuple]:
        """Yield ``(coeff, Fraction(k, den))`` pairs in ascending exponent order."""
        for k in sorted(self.coeffs):
            yield self.coeffs[k], Fraction(k, self.den)

    def to_json(self) -> list:
        return [
            {"coeff": format_scalar(simplify(c)), "pow2": f"{k}/{self.den}"}
            for k, c in sorted(self.coeffs.items())
        ]

    @classmethod
    def from_json(cls, data: list) -> "AlgebraicValue":
        acc = AlgebraicValue(1, {})
        for item in data:
            acc = acc + parse_scalar(item["coeff"]) * pow2(Fraction(item["pow2"]))
        return cls.from_scalar(acc)

    def __repr__(self):
        return f"AlgebraicValue({self.den}, {self.coeffs!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for c, e in self.terms():
            cs = format_scalar(simplify(c))
            if e == 0:
                parts.append(cs)
            else:
                parts.append(f"({cs})*2^({e})")
        return " + ".join(parts)


def simplify(x):
    """Demote ``x`` to the smallest exact type that represents it."""
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, AlgebraicValue):
        if not x.coeffs:
            return Fraction(0)
        if x.den == 1:
            x = x.coeffs[0]
        else:
            return x
    if isinstance(x, GaussianRational):
        return x.re if x.im == 0 else x
    return x


def as_scalar(x):
    """Coerce ints, strings and exact types to a simplified exact scalar."""
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, (int, Fraction, GaussianRational, AlgebraicValue)):
        return simplify(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def pow2(r) -> Scalar:
    """Exact ``2**r`` for rational ``r``."""
    r = _frac(r)
    q = r.numerator // r.denominator
    k = r.numerator - q * r.denominator
    base = Fraction(2) ** q
    if k == 0:
        return base
    return AlgebraicValue(r.denominator, {k: base})


def conj(x):
    if isinstance(x, int):
        return Fraction(x)
    return x.conjugate()


def is_zero(x) -> bool:
    return not x


_RAT = r"[+-]?\d+(?:/\d+)?"
_GAUSS_RE = re.compile(
    rf"^\s*(?:(?P<re>{_RAT})?\s*(?:(?P<im>[+-]?\s*(?:\d+(?:/\d+)?)?)\s*\*?\s*i)?)\s*$"
)


def parse_scalar(text: str) -> Scalar:
    """Parse ``"p/q"``, ``"p/q+r/si"``, ``"i"``, ``"-3/2i"`` and similar."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    if not s.endswith("i"):
        return Fraction(s)
    body = s[:-1].rstrip("*")
    # split at the last sign that is not leading and not part of an exponent
    cut = None
    for idx in range(len(body) - 1, 0, -1):
        if body[idx] in "+-":
            cut = idx
            break
    if cut is None:
        re_part, im_part = "0", body
    else:
        re_part, im_part = body[:cut], body[cut:]
    if im_part in ("", "+"):
        im_part = "1"
    elif im_part == "-":
        im_part = "-1"
    return simplify(GaussianRational(Fraction(re_part), Fraction(im_part)))


def _fmt_rat(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    """Canonical text form: ``"p/q"`` or ``"p/q+r/si"``; radicals as JSON text."""
    x = simplify(x)
    if isinstance(x, Fraction):
        return _fmt_rat(x)
    if isinstance(x, GaussianRational):
        im = _fmt_rat(x.im)
        sign = "" if im.startswith("-") else "+"
        if x.re == 0:
            return f"{im}i"
        return f"{_fmt_rat(x.re)}{sign}{im}i"
    return str(x)


def scalar_to_json(x):
    """JSON form: a string for Q(i) values, the term list for radicals."""
    x = simplify(x)
    if isinstance(x, AlgebraicValue):
        return x.to_json()
    return format_scalar(x)


def scalar_from_json(data) -> Scalar:
    if isinstance(data, list):
        return simplify(AlgebraicValue.from_json(data))
    if isinstance(data, (int, str)):
        return as_scalar(data)
    raise ValueError(f"bad scalar encoding: {data!r}")


@dataclass(frozen=True)
class BigFloat:
    """A multiprecision number together with the precision it was computed at."""

    value: object
    precision_bits: int
    error: Optional[object] = None

    def __float__(self):
        return float(mpmath.re(self.value))

    def to_json(self) -> dict:
        out = {
            "value": mpmath.nstr(self.value, max(15, int(self.precision_bits * 0.30103))),
            "precision_bits": self.precision_bits,
        }
        if self.error is not None:
            out["error"] = mpmath.nstr(self.error, 5)
        return out


def to_mp(x):
    """Evaluate an exact scalar with mpmath at the current working precision."""
    x = simplify(x)
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    if isinstance(x, GaussianRational):
        re_ = mpmath.mpf(x.re.numerator) / x.re.denominator
        im_ = mpmath.mpf(x.im.numerator) / x.im.denominator
        return mpmath.mpc(re_, im_)
    t = mpmath.root(mpmath.mpf(2), x.den)
    acc = mpmath.mpf(0)
    for k, c in x.coeffs.items():
        acc += to_mp(c) * t**k
    return acc


def embed(x, precision_bits: int = 256) -> BigFloat:
    """Numerical value of ``x`` with relative error at most ``2**(1-precision_bits)``.

    Cancellation between radical terms is handled by re-evaluating at growing
    working precision until two consecutive evaluations agree.
    """
    if precision_bits < 53:
        raise ValueError("precision_bits must be at least 53")
    x = simplify(x)
    if not x:
        with mpmath.workprec(precision_bits):
            return BigFloat(mpmath.mpf(0), precision_bits)
    guard = 32
    with mpmath.workprec(precision_bits + guard):
        prev = to_mp(x)
    while True:
        guard *= 2
        with mpmath.workprec(precision_bits + guard):
            cur = to_mp(x)
            diff = abs(cur - prev)
            ok = diff <= abs(cur) * mpmath.ldexp(1, -precision_bits - 2)
        if ok:
            with mpmath.workprec(precision_bits):
                return BigFloat(+cur, precision_bits)
        prev = cur


def embed_real(x, precision_bits: int = 256) -> BigFloat:
    """Real embedding; raises ``ValueError`` for values with nonzero imaginary part."""
    x = simplify(x)
    if isinstance(x, GaussianRational) or (
        isinstance(x, AlgebraicValue) and x.imag_part()
    ):
        raise ValueError("value is not real")
    return embed(x, precision_bits)
