from fractions import Fraction

import mpmath
import pytest

from jacobi_gkn.endpoint_algebra import MINUS, PLUS, Params, monomial
from jacobi_gkn.errors import NoGlobalForm
from jacobi_gkn.numerics import (
    QuadratureSpec,
    green_identity_check,
    jacobi_norm,
    leftdef_inner,
    limit_probe,
    weighted_integral,
)
from jacobi_gkn.sesquilinear import sesqui_form_expression
from jacobi_gkn.special_functions import jacobi_poly, phi, psi

P = Params(Fraction(1, 2), Fraction(2, 5))


def test_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec((-1, 0))
    with pytest.raises(ValueError):
        QuadratureSpec((0, Fraction(1, 2)), method="simpson")


def test_orthogonality_with_tail_bound():
    # truncating (-1, 1) by eps leaves a tail of order eps^(1 + min(alpha, beta))
    for eps in (Fraction(1, 1000), Fraction(1, 10**12)):
        spec = QuadratureSpec((-1 + eps, 1 - eps))
        v = weighted_integral(jacobi_poly(1, P), jacobi_poly(2, P), spec, P)
        bound = 20 * float(eps) ** (1 + float(min(P.alpha, P.beta)))
        assert abs(float(v)) < bound
    assert abs(float(v)) < 1e-10


def test_norm_closed_form_matches_quadrature():
    eps = Fraction(1, 10**15)
    spec = QuadratureSpec((-1 + eps, 1 - eps))
    for m in range(4):
        v = weighted_integral(jacobi_poly(m, P), jacobi_poly(m, P), spec, P).value
        assert abs(v / jacobi_norm(m, P) - 1) < 1e-12


def test_germ_integral_requires_side():
    spec = QuadratureSpec((Fraction(1, 2), Fraction(9, 10)))
    with pytest.raises(NoGlobalForm):
        weighted_integral(phi(1, PLUS), phi(1, PLUS), spec, P)
    v = weighted_integral(phi(1, PLUS), phi(0, PLUS), spec, P, germ="+1").value
    with mpmath.workprec(200):
        ref = mpmath.quad(lambda t: (1 - t) ** 1.5 * (1 + t) ** 0.4, [0.5, 0.9])
    assert abs(v - ref) < 1e-12


def test_green_identity_nonpolynomial():
    f = monomial(-P.alpha, 1)
    g = monomial(Fraction(1, 3), -P.beta) + jacobi_poly(2, P)
    rep = green_identity_check(f, g, 2, p=P)
    assert rep.rel_err < 1e-20


def test_green_identity_trivial_for_equal_real_functions():
    rep = green_identity_check(jacobi_poly(2, P), jacobi_poly(2, P), 1, p=P)
    assert rep.abs_err == 0


def test_limit_probe_regression():
    expr = sesqui_form_expression(phi(0, PLUS), psi(0, PLUS, P), 1, P)
    rep = limit_probe(expr, PLUS, P)
    assert rep.agree and rep.numeric_tag == "finite"
    assert abs(rep.values[-1] - mpmath.mpf(2) ** 0.4) < 1e-10
    rep = limit_probe(expr, MINUS, P)
    assert rep.agree and rep.numeric_tag == "zero"


def test_limit_probe_detects_divergence():
    rep = limit_probe(monomial(Fraction(-1, 2), 0), PLUS, P)
    assert rep.numeric_tag == "infinite" and rep.agree


def test_leftdef_inner():
    eps = Fraction(1, 10**12)
    spec = QuadratureSpec((-1 + eps, 1 - eps))
    v = leftdef_inner(jacobi_poly(2, P), jacobi_poly(2, P), 1, spec, P).value
    lam = 2 * (2 + P.alpha + P.beta + 1)
    assert abs(v / (float(lam) * jacobi_norm(2, P)) - 1) < 1e-8
