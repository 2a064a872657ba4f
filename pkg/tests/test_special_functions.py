from fractions import Fraction

import pytest
import sympy

from _sympy_oracle import agree, rat, to_sympy, x
from jacobi_gkn.endpoint_algebra import MINUS, PLUS, Params, TermFunction, monomial
from jacobi_gkn.errors import DegenerateParameter, PreconditionViolated
from jacobi_gkn.jacobi_operator import apply_l
from jacobi_gkn.special_functions import (
    catalog,
    jacobi_coefficients,
    jacobi_poly,
    local_solution_germ,
    phi,
    psi,
    span_coordinates,
)


@pytest.mark.parametrize("m", range(0, 8))
def test_jacobi_matches_sympy(m):
    p = Params(Fraction(1, 3), Fraction(3, 4))
    ref = sympy.jacobi(m, rat(p.alpha), rat(p.beta), x)
    assert agree(to_sympy(jacobi_poly(m, p).raw_global()), ref)


def test_legendre_recurrence():
    p = Params(0, 0)
    P = [jacobi_poly(m, p) for m in range(8)]
    X = monomial(0, 1) - 1
    for m in range(1, 7):
        lhs = P[m + 1] * (m + 1)
        rhs = X * P[m] * (2 * m + 1) - P[m - 1] * m
        assert (lhs - rhs).is_zero()


def test_jacobi_coefficients_in_endpoint_basis():
    p = Params(Fraction(1, 2), Fraction(2, 5))
    cs = jacobi_coefficients(3, p)
    f = TermFunction.from_global({(Fraction(j), Fraction(0)): c for j, c in enumerate(cs)})
    assert f == jacobi_poly(3, p)


def test_phi_psi_germs():
    p = Params(Fraction(1, 2), Fraction(2, 5))
    assert phi(2, PLUS).raw_plus() == {(Fraction(2), Fraction(0)): 1}
    assert phi(2, PLUS).raw_minus() == {}
    assert psi(1, MINUS, p).raw_minus() == {(Fraction(0), Fraction(3, 5)): 1}
    with pytest.raises(DegenerateParameter):
        psi(0, PLUS, Params(0, Fraction(1, 2)))


def test_local_solutions_solve_the_equation():
    p = Params(Fraction(1, 3), Fraction(1, 5))
    mu = Fraction(7, 2)
    for side in (PLUS, MINUS):
        first, second = local_solution_germ(mu, side, 12, p)
        for g in (first, second):
            f = TermFunction.from_germs(g.raw, {}) if side == MINUS else TermFunction.from_germs({}, g.raw)
            res = apply_l(f, p) - f * (mu * (mu + p.alpha + p.beta + 1))
            # the residual starts beyond the truncation order
            lead = min(
                (a if side == PLUS else b) for (a, b) in res.raw_at(side)
            )
            assert lead >= 11


def test_span_coordinates():
    p = Params(Fraction(1, 2), Fraction(2, 5))
    first, second = local_solution_germ(Fraction(3), PLUS, 8, p)
    coords = span_coordinates(second, 2, p)
    assert set(k for k, _ in coords) <= {"phi", "psi"}
    with pytest.raises(PreconditionViolated):
        span_coordinates(monomial(Fraction(1, 7), 0).germ_plus, 2, p)


def test_catalog_shape():
    p = Params(Fraction(1, 2), 0)
    names = [e.name for e in catalog(2, p)]
    assert "psi+:0" in names and "psi-:0" not in names
    assert names.count("P:6") == 1
