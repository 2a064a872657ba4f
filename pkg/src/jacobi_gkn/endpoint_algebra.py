"""The term algebra c*(1-x)^a*(1+x)^b and its germs at the endpoints x = +1, -1.

A *raw* term list is a dict ``{(a, b): coeff}``.  Raw lists are cheap to
multiply and differentiate but not unique: ``(1-x)(1+x)`` and
``2(1-x) - (1-x)^2`` describe the same function.  :func:`canonical_plus` and
:func:`canonical_minus` fix that.  Terms are grouped by the fractional parts of
their exponents; inside a group the function is ``(1-x)^A (1+x)^B Q(1-x)`` with
``Q`` a polynomial, and after stripping the factors of ``Q`` that vanish at 0
and at 2 the triple ``(A, B, Q)`` is unique.  The plus form expands ``Q`` in
powers of ``(1-x)``, the minus form in powers of ``(1+x)``.

Every term list is real-analytic on (-1, 1), so two lists that agree near an
endpoint agree everywhere.  Germs can therefore use the same normal form as
global functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from .exact_numbers import (
    as_scalar,
    conj,
    format_scalar,
    pow2,
    scalar_from_json,
    scalar_to_json,
    simplify,
)

__all__ = [
    "PLUS",
    "MINUS",
    "Params",
    "Term",
    "Germ",
    "TermFunction",
    "LimitClass",
    "Raw",
    "raw_add",
    "raw_scale",
    "raw_mul",
    "raw_diff",
    "raw_conj",
    "raw_shift",
    "canonical_plus",
    "canonical_minus",
    "germ_series",
    "limit_classify",
    "limit_of_raw",
    "leading_exponent",
    "is_L2",
    "add",
    "scale",
    "multiply",
    "differentiate",
    "divide_by_weight",
    "monomial",
    "constant",
    "localize",
]

PLUS = 1
MINUS = -1

Raw = Dict[Tuple[Fraction, Fraction], object]


def _endpoint(e) -> int:
    if e in (1, "+", "+1", PLUS):
        return PLUS
    if e in (-1, "-", "-1", MINUS):
        return MINUS
    raise ValueError(f"endpoint must be +1 or -1, got {e!r}")


@dataclass(frozen=True)
class Params:
    """Jacobi parameters with ``0 <= alpha < 1`` and ``0 <= beta < 1``."""

    alpha: Fraction
    beta: Fraction

    def __init__(self, alpha=0, beta=0):
        a = Fraction(alpha) if not isinstance(alpha, Fraction) else alpha
        b = Fraction(beta) if not isinstance(beta, Fraction) else beta
        for name, v in (("alpha", a), ("beta", b)):
            if not (0 <= v < 1):
                raise ValueError(f"{name} must lie in [0, 1), got {v}")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    def param(self, endpoint) -> Fraction:
        """The parameter governing the given endpoint (alpha at +1, beta at -1)."""
        return self.alpha if _endpoint(endpoint) == PLUS else self.beta

    def to_json(self) -> dict:
        return {"alpha": format_scalar(self.alpha), "beta": format_scalar(self.beta)}


@dataclass(frozen=True)
class Term:
    coeff: object
    a: Fraction
    b: Fraction

    def to_json(self) -> dict:
        return {"coeff": scalar_to_json(self.coeff), "a": format_scalar(self.a), "b": format_scalar(self.b)}

    @classmethod
    def from_json(cls, data: Mapping) -> "Term":
        return cls(scalar_from_json(data["coeff"]), Fraction(data["a"]), Fraction(data["b"]))

    def __str__(self):
        return f"({format_scalar(self.coeff)})*(1-x)^({self.a})*(1+x)^({self.b})"


# ---------------------------------------------------------------------------
# raw term lists


def raw_add(f: Raw, g: Raw) -> Raw:
    out = dict(f)
    for k, c in g.items():
        if k in out:
            s = simplify(out[k] + c)
            if s:
                out[k] = s
            else:
                del out[k]
        else:
            out[k] = c
    return out


def raw_scale(f: Raw, c) -> Raw:
    c = as_scalar(c)
    if not c:
        return {}
    return {k: simplify(v * c) for k, v in f.items()}


def raw_mul(f: Raw, g: Raw) -> Raw:
    out: Raw = {}
    for (a1, b1), c1 in f.items():
        for (a2, b2), c2 in g.items():
            k = (a1 + a2, b1 + b2)
            p = c1 * c2
            out[k] = out[k] + p if k in out else p
    return {k: simplify(v) for k, v in out.items() if v}


def raw_diff(f: Raw, order: int = 1) -> Raw:
    for _ in range(order):
        out: Raw = {}
        for (a, b), c in f.items():
            if a:
                k = (a - 1, b)
                v = -c * a
                out[k] = out[k] + v if k in out else v
            if b:
                k = (a, b - 1)
                v = c * b
                out[k] = out[k] + v if k in out else v
        f = {k: simplify(v) for k, v in out.items() if v}
    return f


def raw_conj(f: Raw) -> Raw:
    return {k: conj(v) for k, v in f.items()}


def raw_shift(f: Raw, da, db) -> Raw:
    """Multiply by ``(1-x)^da (1+x)^db``."""
    return {(a + da, b + db): c for (a, b), c in f.items()}


# ---------------------------------------------------------------------------
# normal forms


@lru_cache(maxsize=None)
def _binom_row(j: int) -> Tuple[int, ...]:
    return tuple(comb(j, i) for i in range(j + 1))


def _poly_add_term(q: Dict[int, object], i: int, c) -> None:
    if i in q:
        q[i] = q[i] + c
    else:
        q[i] = c


def _class_key(a: Fraction, b: Fraction) -> Tuple[Fraction, Fraction]:
    return (a - (a.numerator // a.denominator), b - (b.numerator // b.denominator))


def _canonical_blocks(f: Raw) -> List[Tuple[Fraction, Fraction, List]]:
    """Split ``f`` into blocks ``(A, B, Q)`` with ``Q`` a dense list in u = 1-x."""
    groups: Dict[Tuple[Fraction, Fraction], List] = {}
    for (a, b), c in f.items():
        if c:
            groups.setdefault(_class_key(a, b), []).append((a, b, c))
    blocks = []
    for key in sorted(groups):
        items = groups[key]
        A = min(a for a, _, _ in items)
        B = min(b for _, b, _ in items)
        q: Dict[int, object] = {}
        for a, b, c in items:
            i = int(a - A)
            j = int(b - B)
            # (1+x)^j = (2-u)^j = sum_l C(j,l) 2^(j-l) (-u)^l
            row = _binom_row(j)
            for l in range(j + 1):
                coef = row[l] * (1 << (j - l))
                if l % 2:
                    coef = -coef
                _poly_add_term(q, i + l, c * coef)
        if not q:
            continue
        deg = max(q)
        poly = [simplify(q.get(i, 0)) for i in range(deg + 1)]
        while poly and not poly[-1]:
            poly.pop()
        if not poly:
            continue
        while not poly[0]:
            poly.pop(0)
            A += 1
        # divide out (u - 2) while Q(2) == 0; (2 - u) R = (u - 2)(-R)
        while len(poly) > 1:
            val = 0
            for c in reversed(poly):
                val = val * 2 + c
            if simplify(val):
                break
            # synthetic division by (u - 2)
            n = len(poly) - 1
            r = [0] * n
            acc = 0
            for idx in range(n, 0, -1):
                acc = acc * 2 + poly[idx]
                r[idx - 1] = acc
            poly = [simplify(-c) for c in r]
            B += 1
        blocks.append((A, B, poly))
    return blocks


def canonical_plus(f: Raw) -> Raw:
    """Normal form with terms ``c_i (1-x)^(A+i) (1+x)^B`` per exponent class."""
    out: Raw = {}
    for A, B, poly in _canonical_blocks(f):
        for i, c in enumerate(poly):
            if c:
                out[(A + i, B)] = c
    return out


def canonical_minus(f: Raw) -> Raw:
    """Normal form with terms ``c_j (1-x)^A (1+x)^(B+j)`` per exponent class."""
    out: Raw = {}
    for A, B, poly in _canonical_blocks(f):
        # Q(u) with u = 2 - v
        q: Dict[int, object] = {}
        for i, c in enumerate(poly):
            if not c:
                continue
            row = _binom_row(i)
            for l in range(i + 1):
                coef = row[l] * (1 << (i - l))
                if l % 2:
                    coef = -coef
                _poly_add_term(q, l, c * coef)
        for j, c in q.items():
            c = simplify(c)
            if c:
                out[(A, B + j)] = c
    return out


def _sorted_terms(f: Raw, endpoint: int) -> Tuple[Term, ...]:
    if endpoint == PLUS:
        key = lambda kv: (kv[0][0], kv[0][1])
    else:
        key = lambda kv: (kv[0][1], kv[0][0])
    return tuple(Term(c, a, b) for (a, b), c in sorted(f.items(), key=key))


class Germ:
    """A collected term list attached to one endpoint.

    Terms are stored in the endpoint's normal form: ascending ``a`` at +1 and
    ascending ``b`` at -1.
    """

    __slots__ = ("endpoint", "_raw", "_terms")

    def __init__(self, endpoint, raw: Raw, *, normalized: bool = False):
        self.endpoint = _endpoint(endpoint)
        if not normalized:
            raw = canonical_plus(raw) if self.endpoint == PLUS else canonical_minus(raw)
        self._raw = raw
        self._terms = None

    @classmethod
    def from_terms(cls, endpoint, terms: Iterable[Term]) -> "Germ":
        raw: Raw = {}
        for t in terms:
            raw = raw_add(raw, {(Fraction(t.a), Fraction(t.b)): as_scalar(t.coeff)})
        return cls(endpoint, raw)

    @property
    def raw(self) -> Raw:
        return self._raw

    @property
    def terms(self) -> Tuple[Term, ...]:
        if self._terms is None:
            self._terms = _sorted_terms(self._raw, self.endpoint)
        return self._terms

    def is_zero(self) -> bool:
        return not self._raw

    def __eq__(self, other):
        if not isinstance(other, Germ):
            return NotImplemented
        return self.endpoint == other.endpoint and self._raw == other._raw

    def __hash__(self):
        return hash((self.endpoint, frozenset(self._raw.items())))

    def __repr__(self):
        side = "+1" if self.endpoint == PLUS else "-1"
        return f"Germ({side}, [{', '.join(str(t) for t in self.terms)}])"

    def to_json(self) -> list:
        return [t.to_json() for t in self.terms]


class TermFunction:
    """A function known through its germs at -1 and +1.

    When ``global_terms`` is present the function is one term list valid on
    the whole interval and both germs are that list.  Otherwise the germs may
    differ, which models a smooth function glued from two endpoint pieces.
    """

    __slots__ = ("_plus", "_minus", "_global", "_hash")

    def __init__(self, germ_minus: Raw, germ_plus: Raw, global_terms: Optional[Raw] = None):
        # callers pass raw dicts; use the constructors below
        self._minus = germ_minus
        self._plus = germ_plus
        self._global = global_terms
        self._hash = None

    @classmethod
    def from_global(cls, raw: Raw) -> "TermFunction":
        g = canonical_plus(raw)
        return cls(None, g, g)

    @classmethod
    def from_germs(cls, minus: Raw, plus: Raw) -> "TermFunction":
        return cls(canonical_minus(minus), canonical_plus(plus), None)

    @classmethod
    def from_terms(cls, terms: Iterable[Term]) -> "TermFunction":
        raw: Raw = {}
        for t in terms:
            raw = raw_add(raw, {(Fraction(t.a), Fraction(t.b)): as_scalar(t.coeff)})
        return cls.from_global(raw)

    @property
    def has_global(self) -> bool:
        return self._global is not None

    def raw_plus(self) -> Raw:
        return self._plus

    def raw_minus(self) -> Raw:
        if self._minus is None:
            self._minus = canonical_minus(self._global)
        return self._minus

    def raw_at(self, endpoint) -> Raw:
        return self.raw_plus() if _endpoint(endpoint) == PLUS else self.raw_minus()

    def raw_global(self) -> Optional[Raw]:
        return self._global

    @property
    def germ_plus(self) -> Germ:
        return Germ(PLUS, self._plus, normalized=True)

    @property
    def germ_minus(self) -> Germ:
        return Germ(MINUS, self.raw_minus(), normalized=True)

    def germ(self, endpoint) -> Germ:
        return self.germ_plus if _endpoint(endpoint) == PLUS else self.germ_minus

    @property
    def global_terms(self) -> Optional[Tuple[Term, ...]]:
        if self._global is None:
            return None
        return _sorted_terms(self._global, PLUS)

    def map_raw(self, fn) -> "TermFunction":
        """Apply a linear raw-list map germ-wise (or once, on the global list)."""
        if self._global is not None:
            return TermFunction.from_global(fn(self._global))
        return TermFunction.from_germs(fn(self.raw_minus()), fn(self._plus))

    def is_zero(self) -> bool:
        return not self._plus and not self.raw_minus()

    def __eq__(self, other):
        if not isinstance(other, TermFunction):
            return NotImplemented
        return self._plus == other._plus and self.raw_minus() == other.raw_minus()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (frozenset(self._plus.items()), frozenset(self.raw_minus().items()))
            )
        return self._hash

    def __add__(self, other):
        if not isinstance(other, TermFunction):
            other = constant(other)
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, TermFunction):
            other = constant(other)
        return add(self, scale(other, -1))

    def __rsub__(self, other):
        return constant(other) - self

    def __neg__(self):
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, TermFunction):
            return multiply(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def conjugate(self) -> "TermFunction":
        return self.map_raw(raw_conj)

    def __repr__(self):
        if self._global is not None:
            body = " + ".join(str(t) for t in self.global_terms) or "0"
            return f"TermFunction(global: {body})"
        return f"TermFunction(minus={self.germ_minus!r}, plus={self.germ_plus!r})"

    def to_json(self) -> dict:
        return {
            "germ_minus": self.germ_minus.to_json(),
            "germ_plus": self.germ_plus.to_json(),
            "global": None if self._global is None else [t.to_json() for t in self.global_terms],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "TermFunction":
        def raw_of(items):
            raw: Raw = {}
            for item in items:
                t = Term.from_json(item)
                raw = raw_add(raw, {(t.a, t.b): simplify(t.coeff)})
            return raw

        if data.get("global") is not None:
            return cls.from_global(raw_of(data["global"]))
        return cls.from_germs(raw_of(data.get("germ_minus", [])), raw_of(data.get("germ_plus", [])))


# ---------------------------------------------------------------------------
# function-level operations


def monomial(a=0, b=0, coeff=1) -> TermFunction:
    """The global function ``coeff * (1-x)^a * (1+x)^b``."""
    c = as_scalar(coeff)
    if not c:
        return TermFunction.from_global({})
    return TermFunction.from_global({(Fraction(a), Fraction(b)): c})


def constant(c=1) -> TermFunction:
    return monomial(0, 0, c)


def add(f: TermFunction, g: TermFunction) -> TermFunction:
    if f.has_global and g.has_global:
        return TermFunction.from_global(raw_add(f.raw_global(), g.raw_global()))
    return TermFunction.from_germs(
        raw_add(f.raw_minus(), g.raw_minus()), raw_add(f.raw_plus(), g.raw_plus())
    )


def scale(f: TermFunction, c) -> TermFunction:
    c = as_scalar(c)
    return f.map_raw(lambda r: raw_scale(r, c))


def multiply(f: TermFunction, g) -> TermFunction:
    if not isinstance(g, TermFunction):
        return scale(f, g)
    if f.has_global and g.has_global:
        return TermFunction.from_global(raw_mul(f.raw_global(), g.raw_global()))
    return TermFunction.from_germs(
        raw_mul(f.raw_minus(), g.raw_minus()), raw_mul(f.raw_plus(), g.raw_plus())
    )


def differentiate(f: TermFunction, order: int = 1) -> TermFunction:
    if order < 0:
        raise ValueError("order must be nonnegative")
    if order == 0:
        return f
    return f.map_raw(lambda r: raw_diff(r, order))


def divide_by_weight(f: TermFunction, p: Params) -> TermFunction:
    """Divide by ``w = (1-x)^alpha (1+x)^beta``."""
    return f.map_raw(lambda r: raw_shift(r, -p.alpha, -p.beta))


def localize(f: TermFunction, endpoint) -> TermFunction:
    """Keep the germ at ``endpoint`` and replace the other one by 0."""
    if _endpoint(endpoint) == PLUS:
        return TermFunction.from_germs({}, f.raw_plus())
    return TermFunction.from_germs(f.raw_minus(), {})


# ---------------------------------------------------------------------------
# endpoint expansions and limits


def _gbinom(r: Fraction, i: int) -> Fraction:
    out = Fraction(1)
    for k in range(i):
        out = out * (r - k) / (k + 1)
    return out


def germ_series(raw: Raw, endpoint, max_exponent) -> Dict[Fraction, object]:
    """Local expansion coefficients of a raw term list at ``endpoint``.

    At +1 each term ``c (1-x)^a (1+x)^b`` is expanded as
    ``c 2^b sum_i C(b, i) (-1/2)^i (1-x)^(a+i)``; at -1 the roles of the two
    factors swap.  Returns the exact coefficients of all exponents up to and
    including ``max_exponent`` (zero coefficients dropped).
    """
    endpoint = _endpoint(endpoint)
    max_exponent = Fraction(max_exponent)
    out: Dict[Fraction, object] = {}
    for (a, b), c in raw.items():
        lead, other = (a, b) if endpoint == PLUS else (b, a)
        if lead > max_exponent:
            continue
        scale2 = pow2(other)
        i = 0
        half = Fraction(1)
        while lead + i <= max_exponent:
            bc = _gbinom(other, i)
            if bc:
                e = lead + i
                v = c * scale2 * (bc * half)
                out[e] = out[e] + v if e in out else v
            elif other.denominator == 1 and other >= 0 and i > other:
                break
            i += 1
            half = -half / 2
    return {e: simplify(v) for e, v in out.items() if simplify(v)}


def leading_exponent(raw: Raw, endpoint, bound) -> Optional[Fraction]:
    """Smallest exponent <= ``bound`` with nonzero local coefficient, or None."""
    series = germ_series(raw, endpoint, bound)
    return min(series) if series else None


class LimitClass:
    """Endpoint limit trichotomy: Zero, Finite(value) or Infinite."""

    __slots__ = ("tag", "value")
    ZERO = "zero"
    FINITE = "finite"
    INFINITE = "infinite"

    def __init__(self, tag: str, value=None):
        if tag == self.FINITE:
            value = simplify(value)
            if not value:
                tag, value = self.ZERO, None
        elif value is not None:
            raise ValueError("only Finite carries a value")
        self.tag = tag
        self.value = value

    @classmethod
    def zero(cls):
        return cls(cls.ZERO)

    @classmethod
    def finite(cls, value):
        return cls(cls.FINITE, value)

    @classmethod
    def infinite(cls):
        return cls(cls.INFINITE)

    @property
    def is_zero(self) -> bool:
        return self.tag == self.ZERO

    @property
    def is_finite(self) -> bool:
        """True for Zero and Finite."""
        return self.tag != self.INFINITE

    @property
    def is_infinite(self) -> bool:
        return self.tag == self.INFINITE

    def numeric(self):
        """The limit value as an exact scalar (0 for Zero)."""
        if self.tag == self.INFINITE:
            raise ValueError("infinite limit has no value")
        return Fraction(0) if self.value is None else self.value

    def __eq__(self, other):
        if not isinstance(other, LimitClass):
            return NotImplemented
        return self.tag == other.tag and self.value == other.value

    def __hash__(self):
        return hash((self.tag, self.value))

    def __repr__(self):
        if self.tag == self.FINITE:
            return f"Finite({self.value})"
        return self.tag.capitalize()

    def to_json(self) -> dict:
        out = {"tag": self.tag}
        if self.tag == self.FINITE:
            out["value"] = scalar_to_json(self.value)
        return out


def limit_of_raw(raw: Raw, endpoint) -> LimitClass:
    series = germ_series(raw, endpoint, 0)
    if any(e < 0 for e in series):
        return LimitClass.infinite()
    return LimitClass.finite(series.get(Fraction(0), 0))


def limit_classify(g) -> LimitClass:
    """Classify the limit of a germ at its endpoint.

    Accepts a :class:`Germ`, or a ``(TermFunction, endpoint)`` pair.
    Cancellations between terms of different exponent classes are resolved
    exactly through the local expansion, never by inspecting raw exponents.
    """
    if isinstance(g, Germ):
        return limit_of_raw(g.raw, g.endpoint)
    f, endpoint = g
    return limit_of_raw(f.raw_at(endpoint), endpoint)


def is_L2(f: TermFunction, p: Params) -> bool:
    """Square integrability against the Jacobi weight.

    Near +1, ``|f|^2 w`` behaves like ``(1-x)^(2e + alpha)`` with ``e`` the
    leading local exponent; it is integrable iff ``2e + alpha > -1``.
    """
    for endpoint, par in ((PLUS, p.alpha), (MINUS, p.beta)):
        bound = -(1 + par) / 2
        if leading_exponent(f.raw_at(endpoint), endpoint, bound) is not None:
            return False
    return True
