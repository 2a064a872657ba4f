from fractions import Fraction

import pytest

from jacobi_gkn.endpoint_algebra import MINUS, PLUS, Params, constant
from jacobi_gkn.errors import DegenerateParameter, NotUnitary, PreconditionViolated
from jacobi_gkn.exact_numbers import GaussianRational
from jacobi_gkn.gkn import (
    BoundaryConditionSet,
    ExtensionMatrix,
    build_pairing_matrix,
    domain_equal,
    exact_rank,
    extension_from_unitary,
    glazman_symmetry_check,
    lin_indep_mod_minimal,
    symplectic_basis,
)
from jacobi_gkn.sesquilinear import sesqui_eval
from jacobi_gkn.special_functions import jacobi_poly, phi, psi

P = Params(Fraction(1, 2), Fraction(2, 5))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pairing_structure(n):
    for side in (PLUS, MINUS):
        M = build_pairing_matrix(n, P, side)
        assert all(not x for row in M.block("phi", "phi") for x in row)
        assert all(not x for row in M.block("psi", "psi") for x in row)
        X = M.block("phi", "psi")
        for s in range(n):
            for t in range(n):
                if s + t >= n:
                    assert not X[s][t]
            assert X[s][n - 1 - s]
        assert exact_rank(M) == 2 * n


def test_pairing_json_preview():
    js = build_pairing_matrix(1, P, PLUS).to_json()
    assert js["preview"][0][1] == pytest.approx(2 ** 0.4)


def test_pairing_degenerate():
    with pytest.raises(DegenerateParameter):
        build_pairing_matrix(1, Params(0, 0), PLUS)


def test_from_functions_splits():
    W = BoundaryConditionSet.from_functions(2, [jacobi_poly(0, P), jacobi_poly(1, P)], ["P0", "P1"])
    assert W.names == ["P0@+1", "P0@-1", "P1@+1", "P1@-1"]
    assert glazman_symmetry_check(W, P)
    assert lin_indep_mod_minimal(W, P)


def test_domain_equal_polynomials():
    W1 = BoundaryConditionSet.from_functions(2, [jacobi_poly(0, P), jacobi_poly(1, P)])
    W2 = BoundaryConditionSet.from_functions(2, [jacobi_poly(3, P), jacobi_poly(7, P)])
    assert domain_equal(W1, W2, P)


def test_domain_equal_different_extension():
    W1 = BoundaryConditionSet.from_functions(1, [jacobi_poly(0, P)])
    W2 = BoundaryConditionSet(1, [psi(0, PLUS, P), psi(0, MINUS, P)])
    assert not domain_equal(W1, W2, P)


def test_domain_equal_rejects_bad_sets():
    W1 = BoundaryConditionSet.from_functions(1, [jacobi_poly(0, P)])
    # [phi + i psi, phi + i psi] = -2i [phi, psi] is nonzero
    bad = BoundaryConditionSet(1, [phi(0, PLUS) + psi(0, PLUS, P) * GaussianRational(0, 1), phi(0, MINUS)])
    with pytest.raises(PreconditionViolated):
        domain_equal(W1, bad, P)
    with pytest.raises(PreconditionViolated):
        domain_equal(W1, BoundaryConditionSet(1, [phi(0, PLUS)]), P)


def test_legendre_taylor_route():
    q = Params(0, 0)
    W1 = BoundaryConditionSet.from_functions(1, [constant(1)])
    for m in range(6):
        assert domain_equal(W1, BoundaryConditionSet.from_functions(1, [jacobi_poly(m, q)]), q)


def test_symplectic_basis_pairings():
    for n in (1, 2):
        for side in (PLUS, MINUS):
            es, fs = symplectic_basis(n, P, side)
            two_i = GaussianRational(0, 2)
            for j in range(n):
                for k in range(n):
                    d = 1 if j == k else 0
                    assert sesqui_eval(es[j], es[k], n, P).full == two_i * d
                    assert sesqui_eval(fs[j], fs[k], n, P).full == -two_i * d
                    assert not sesqui_eval(es[j], fs[k], n, P).full


def test_identity_extension_is_polynomial_domain():
    U = ExtensionMatrix.from_json('[["1","0"],["0","1"]]')
    W = extension_from_unitary(U, P)
    assert glazman_symmetry_check(W, P) and lin_indep_mod_minimal(W, P)
    assert W.conditions[0] == phi(0, PLUS) * 2
    assert domain_equal(W, BoundaryConditionSet.from_functions(1, [jacobi_poly(0, P)]), P)


def test_complex_unitary_extension():
    h = Fraction(3, 5)
    k = Fraction(4, 5)
    i = GaussianRational(0, 1)
    U = ExtensionMatrix(1, [[h, i * k], [i * k, h]])
    W = extension_from_unitary(U, P)
    assert glazman_symmetry_check(W, P)
    assert lin_indep_mod_minimal(W, P)


def test_not_unitary():
    with pytest.raises(NotUnitary):
        ExtensionMatrix.from_json('[["1","1"],["0","1"]]')
