from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacobi_gkn.endpoint_algebra import MINUS, PLUS, Params, constant, monomial
from jacobi_gkn.errors import IndeterminateLimit
from jacobi_gkn.exact_numbers import GaussianRational, conj, pow2
from jacobi_gkn.sesquilinear import (
    modified_wronskian,
    sesqui_eval,
    sesqui_form_expression,
    strong_limit_point_check,
)
from jacobi_gkn.special_functions import jacobi_poly, phi, psi

P = Params(Fraction(1, 2), Fraction(2, 5))


def _pool():
    out = []
    for side in (PLUS, MINUS):
        out += [phi(j, side) for j in range(3)] + [psi(j, side, P) for j in range(3)]
    return out + [jacobi_poly(m, P) for m in range(3)]


POOL = _pool()
gauss = st.builds(
    GaussianRational,
    st.fractions(min_value=-3, max_value=3, max_denominator=5),
    st.fractions(min_value=-3, max_value=3, max_denominator=5),
)


@st.composite
def combos(draw):
    idx = draw(st.lists(st.integers(0, len(POOL) - 1), min_size=1, max_size=3))
    f = POOL[idx[0]] * draw(gauss)
    for i in idx[1:]:
        f = f + POOL[i] * draw(gauss)
    return f


@settings(max_examples=30, deadline=None)
@given(combos(), combos(), st.integers(1, 2))
def test_skew_hermitian(f, g, n):
    a = sesqui_eval(f, g, n, P).full
    b = sesqui_eval(g, f, n, P).full
    assert a == -conj(b)


@settings(max_examples=25, deadline=None)
@given(combos(), combos(), combos(), gauss)
def test_linear_in_first_slot(f, g, h, c):
    n = 2
    lhs = sesqui_eval(f * c + g, h, n, P).full
    rhs = sesqui_eval(f, h, n, P).full * c + sesqui_eval(g, h, n, P).full
    assert lhs == rhs


def test_regression_value_and_wronskian():
    r = sesqui_eval(phi(0, PLUS), psi(0, PLUS, P), 1, P)
    expected = P.alpha * pow2(P.beta + 1)
    assert r.full == expected
    assert r.at_minus.is_zero and r.at_plus.is_finite
    assert modified_wronskian(phi(0, PLUS), psi(0, PLUS, P), P).full == -expected


def test_n1_expression_matches_explicit_form():
    f, g = monomial(Fraction(3, 2), 1), monomial(2, Fraction(1, 3))
    expr = sesqui_form_expression(f, g, 1, P)
    pw = monomial(P.alpha + 1, P.beta + 1)
    from jacobi_gkn.endpoint_algebra import differentiate

    ref = pw * (f * differentiate(g.conjugate()) - differentiate(f) * g.conjugate())
    assert expr == ref


def test_strong_limit_point():
    lim = strong_limit_point_check(constant(1), psi(0, PLUS, P), P)
    assert lim.at_plus.numeric() == P.alpha * pow2(P.beta + 1)
    assert lim.at_minus.is_zero


def test_polynomials_pair_to_zero():
    for n in (1, 2, 3):
        for i in range(3):
            for j in range(3):
                assert not sesqui_eval(jacobi_poly(i, P), jacobi_poly(j, P), n, P).full


def test_outside_maximal_domain_raises():
    with pytest.raises(IndeterminateLimit):
        sesqui_eval(monomial(Fraction(-3, 2), 0), constant(1), 1, P)
