"""Independent reference computations with sympy."""

from fractions import Fraction

import sympy

x = sympy.symbols("x")


def rat(q):
    q = Fraction(q)
    return sympy.Rational(q.numerator, q.denominator)


def to_sympy(raw):
    return sum(
        (rat(c) * (1 - x) ** rat(a) * (1 + x) ** rat(b) for (a, b), c in raw.items()),
        sympy.Integer(0),
    )


def jacobi_l(expr, alpha, beta):
    a, b = rat(alpha), rat(beta)
    w = (1 - x) ** a * (1 + x) ** b
    return -sympy.diff((1 - x) ** (a + 1) * (1 + x) ** (b + 1) * sympy.diff(expr, x), x) / w


def agree(e1, e2, points=(sympy.Rational(-2, 3), sympy.Rational(1, 5), sympy.Rational(3, 4)), tol=1e-30):
    return all(abs(sympy.N((e1 - e2).subs(x, t), 50)) < tol for t in points)
