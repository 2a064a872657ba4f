from fractions import Fraction

import pytest

from jacobi_gkn.domains import (
    defect_basis,
    f_conditions,
    in_maximal,
    in_minimal,
    leftdef_flags,
    leftdef_membership,
    smoothness_report,
    stacking_holds,
    verify_maxdomain_theorem,
)
from jacobi_gkn.endpoint_algebra import MINUS, PLUS, Params, monomial
from jacobi_gkn.errors import DegenerateParameter, PreconditionViolated
from jacobi_gkn.special_functions import catalog, jacobi_poly, phi, psi

P = Params(Fraction(1, 2), Fraction(2, 5))


def test_maximal_membership():
    assert in_maximal(psi(0, PLUS, P), 2, P)
    assert in_maximal(jacobi_poly(4, P), 3, P)
    assert not in_maximal(monomial(Fraction(-3, 4), 0), 1, P)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_minimal_ladder(n):
    for side in (PLUS, MINUS):
        for j in range(n + 3):
            assert in_minimal(phi(j, side), n, P) == (j >= n)
        for j in range(n):
            assert not in_minimal(psi(j, side, P), n, P)


def test_minimal_requires_maximal():
    with pytest.raises(PreconditionViolated):
        in_minimal(monomial(Fraction(-3, 4), 0), 1, P)


def test_defect_basis_dimension():
    assert len(defect_basis(3, P)) == 12
    with pytest.raises(DegenerateParameter):
        defect_basis(1, Params(0, Fraction(1, 2)))


def test_smoothness_report_counts():
    rep = smoothness_report(psi(0, PLUS, P), 3, P)
    assert rep.ok
    assert len(rep.smoothness_limits) == 2 * 4
    assert len(rep.derivative_limits) == 2 * 3
    js = rep.to_json()
    assert js["in_min"] == "not-evaluated"


def test_maxdomain_report_on_catalog():
    entries = catalog(2, P)
    rep = verify_maxdomain_theorem(2, P, [e.function for e in entries], [e.name for e in entries])
    assert rep.passed and len(rep.reports) == len(entries)


def test_leftdef_flags_agree_on_polynomials():
    for m in range(5):
        flags = leftdef_flags(jacobi_poly(m, P), 2, P)
        assert all(flags.values())


def test_leftdef_phi0_n2():
    # phi_0 = 1 near +1 lies in every characterization at n = 2
    flags = leftdef_flags(phi(0, PLUS), 2, P)
    assert flags["B"] and flags["F"] and flags["LW"]


def test_leftdef_psi0_excluded():
    flags = leftdef_flags(psi(0, PLUS, P), 1, P)
    assert not any(flags.values())


def test_f_condition_forms_agree():
    for e in catalog(2, P):
        a = f_conditions(e.function, 2, P)
        b = f_conditions(e.function, 2, P, form="sesqui")
        assert all(a.values()) == all(b.values())


def test_b_degenerate():
    with pytest.raises(DegenerateParameter):
        leftdef_membership(phi(0, PLUS), 1, Params(0, 0), "B")


def test_stacking():
    assert stacking_holds(jacobi_poly(3, P), 2, 2, P) is True
    assert stacking_holds(psi(0, PLUS, P), 1, 1, P) is None
