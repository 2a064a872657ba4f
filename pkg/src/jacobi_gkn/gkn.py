"""GKN boundary conditions: pairing matrices, symmetry, independence, extensions.

Boundary-condition sets count conditions per endpoint.  A global function
such as a Jacobi polynomial contributes two conditions, one at each end;
:meth:`BoundaryConditionSet.from_functions` performs that split.  A
self-adjoint extension of ``l^n`` then needs exactly 2n conditions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from .domains import defect_basis, in_maximal
from .endpoint_algebra import (
    MINUS,
    PLUS,
    Params,
    TermFunction,
    _endpoint,
    add,
    localize,
    scale,
)
from .errors import DegenerateParameter, NotUnitary, PreconditionViolated
from .exact_numbers import (
    GaussianRational,
    as_scalar,
    conj,
    embed,
    scalar_from_json,
    scalar_to_json,
)
from .linalg import conj_transpose, identity, mat_mul, rank, solve
from .sesquilinear import sesqui_eval
from .special_functions import phi, psi, span_coordinates

__all__ = [
    "PairingMatrix",
    "BoundaryConditionSet",
    "ExtensionMatrix",
    "build_pairing_matrix",
    "exact_rank",
    "glazman_symmetry_check",
    "lin_indep_mod_minimal",
    "taylor_coordinates",
    "domain_equal",
    "extension_from_unitary",
    "symplectic_basis",
]


@dataclass(frozen=True)
class PairingMatrix:
    n: int
    side: int
    entries: tuple
    labels: tuple

    def block(self, rows: str, cols: str):
        r0 = 0 if rows == "phi" else self.n
        c0 = 0 if cols == "phi" else self.n
        return [list(self.entries[r0 + i][c0 : c0 + self.n]) for i in range(self.n)]

    def to_json(self, precision_bits: int = 64) -> dict:
        return {
            "n": self.n,
            "side": "+1" if self.side == PLUS else "-1",
            "labels": list(self.labels),
            "entries": [[scalar_to_json(x) for x in row] for row in self.entries],
            "preview": [
                [float(embed(x, max(53, precision_bits)).value.real) if x else 0.0 for x in row]
                for row in self.entries
            ],
        }


def build_pairing_matrix(n: int, p: Params, side) -> PairingMatrix:
    """Matrix of ``[b_i, b_j]_n`` over ``phi_0..phi_(n-1), psi_0..psi_(n-1)`` at one side."""
    side = _endpoint(side)
    if p.alpha == 0 or p.beta == 0:
        raise DegenerateParameter("the pairing matrix needs alpha > 0 and beta > 0")
    basis = [phi(j, side) for j in range(n)] + [psi(j, side, p) for j in range(n)]
    sgn = "+" if side == PLUS else "-"
    labels = tuple(f"phi{sgn}:{j}" for j in range(n)) + tuple(f"psi{sgn}:{j}" for j in range(n))
    entries = tuple(tuple(sesqui_eval(a, b, n, p).full for b in basis) for a in basis)
    return PairingMatrix(n, side, entries, labels)


def exact_rank(m) -> int:
    """Exact rank over Q(i)(2^(1/D)); accepts a :class:`PairingMatrix` or nested rows."""
    rows = m.entries if isinstance(m, PairingMatrix) else m
    return rank([list(r) for r in rows])


class BoundaryConditionSet:
    """Functions ``w_1..w_m`` whose pairings against f define boundary conditions."""

    def __init__(self, n: int, conditions: Sequence[TermFunction], names: Optional[Sequence[str]] = None):
        if n < 1:
            raise ValueError("n must be at least 1")
        self.n = n
        self.conditions = list(conditions)
        if len(self.conditions) > 4 * n:
            raise ValueError("more conditions than the defect dimension")
        self.names = list(names) if names is not None else [f"w{i}" for i in range(len(self.conditions))]

    @classmethod
    def from_functions(cls, n: int, functions: Sequence[TermFunction], names=None) -> "BoundaryConditionSet":
        """Split each function into its +1 and -1 pieces, one condition per endpoint."""
        conds, labels = [], []
        names = list(names) if names is not None else [f"w{i}" for i in range(len(functions))]
        for nm, f in zip(names, functions):
            conds.append(localize(f, PLUS))
            labels.append(f"{nm}@+1")
            conds.append(localize(f, MINUS))
            labels.append(f"{nm}@-1")
        return cls(n, conds, labels)

    def __len__(self):
        return len(self.conditions)

    def validate(self, p: Params) -> None:
        for nm, w in zip(self.names, self.conditions):
            if not in_maximal(w, self.n, p):
                raise PreconditionViolated(f"condition {nm} is not in the maximal domain")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "conditions": [
                {"name": nm, "function": w.to_json()} for nm, w in zip(self.names, self.conditions)
            ],
        }


def glazman_symmetry_check(W: BoundaryConditionSet, p: Params) -> bool:
    """All pairwise forms ``[w_j, w_k]_n`` vanish (including ``j == k``)."""
    ws = W.conditions
    for j in range(len(ws)):
        for k in range(j, len(ws)):
            if sesqui_eval(ws[j], ws[k], W.n, p).full:
                return False
    return True


def taylor_coordinates(f: TermFunction, n: int, p: Params) -> List:
    """Coordinates of f modulo the minimal domain, read from its local expansions.

    The order is ``phi_j^+ (j<n), psi_j^+ (j<n), phi_j^-, psi_j^-``.  When a
    parameter is 0 the corresponding psi coordinates are identically zero for
    every term function, since the second solution there is logarithmic.
    """
    out = []
    for side in (PLUS, MINUS):
        coords = span_coordinates(f.germ(side), n, p)
        out += [coords.get(("phi", j), Fraction(0)) for j in range(n)]
        out += [coords.get(("psi", j), Fraction(0)) for j in range(n)]
    return out


def lin_indep_mod_minimal(W: BoundaryConditionSet, p: Params, *, route: str = "auto") -> bool:
    """Linear independence of the conditions modulo the minimal domain.

    ``route="pairing"`` uses the rank of the pairing matrix against the 4n
    defect basis (requires alpha, beta > 0).  ``route="taylor"`` uses the
    local-expansion coordinates and also covers alpha = 0 or beta = 0.
    ``"auto"`` picks pairing when possible.
    """
    if route == "auto":
        route = "pairing" if (p.alpha and p.beta) else "taylor"
    if not W.conditions:
        return True
    if route == "pairing":
        basis = defect_basis(W.n, p)
        rows = [[sesqui_eval(w, b, W.n, p).full for b in basis] for w in W.conditions]
    elif route == "taylor":
        rows = [taylor_coordinates(w, W.n, p) for w in W.conditions]
    else:
        raise ValueError(f"unknown route {route!r}")
    return rank(rows) == len(W.conditions)


def _check_valid(W: BoundaryConditionSet, p: Params, label: str) -> None:
    if len(W) != 2 * W.n:
        raise PreconditionViolated(f"{label} has {len(W)} conditions, expected {2 * W.n}")
    W.validate(p)
    if not glazman_symmetry_check(W, p):
        raise PreconditionViolated(f"{label} violates the Glazman symmetry conditions")
    if not lin_indep_mod_minimal(W, p):
        raise PreconditionViolated(f"{label} is not linearly independent modulo the minimal domain")


def domain_equal(W1: BoundaryConditionSet, W2: BoundaryConditionSet, p: Params) -> bool:
    """Whether two valid 2n-condition sets define the same self-adjoint domain."""
    if W1.n != W2.n:
        raise PreconditionViolated("condition sets belong to different powers")
    _check_valid(W1, p, "W1")
    _check_valid(W2, p, "W2")
    n = W1.n
    for a, b in ((W1, W2), (W2, W1)):
        for w in b.conditions:
            for v in a.conditions:
                if sesqui_eval(w, v, n, p).full:
                    return False
    return True


class ExtensionMatrix:
    """A 2n x 2n matrix with exact entries, checked to be unitary on construction."""

    def __init__(self, n: int, entries):
        rows = [[as_scalar(x) if not isinstance(x, (list, dict)) else scalar_from_json(x) for x in r] for r in entries]
        if len(rows) != 2 * n or any(len(r) != 2 * n for r in rows):
            raise ValueError(f"expected a {2 * n}x{2 * n} matrix")
        prod = mat_mul(rows, conj_transpose(rows))
        if prod != identity(2 * n):
            raise NotUnitary("U U* is not the identity")
        self.n = n
        self.entries = rows

    @classmethod
    def from_json(cls, text_or_obj) -> "ExtensionMatrix":
        data = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
        if len(data) % 2:
            raise ValueError("matrix dimension must be even")
        return cls(len(data) // 2, data)

    def to_json(self) -> list:
        return [[scalar_to_json(x) for x in r] for r in self.entries]


def symplectic_basis(n: int, p: Params, side) -> tuple:
    """Functions ``(e_j, f_j)`` at one side with ``[e_j, e_k] = 2i delta``, ``[f_j, f_k] = -2i delta``.

    Built as ``e_j = phi_j - i psi'_j`` and ``f_j = phi_j + i psi'_j`` where
    ``psi'`` is the dual of phi under the pairing: ``[phi_j, psi'_k] = delta``.
    """
    side = _endpoint(side)
    M = build_pairing_matrix(n, p, side)
    X = M.block("phi", "psi")
    # conj(A) = X^{-1}, column by column
    cols = []
    for k in range(n):
        rhs = [1 if i == k else 0 for i in range(n)]
        cols.append(solve(X, rhs))
    A = [[conj(cols[j][i]) for j in range(n)] for i in range(n)]
    phis = [phi(j, side) for j in range(n)]
    psis = [psi(j, side, p) for j in range(n)]
    dual = []
    for j in range(n):
        g = TermFunction.from_germs({}, {})
        for i in range(n):
            if A[i][j]:
                g = add(g, scale(psis[i], A[i][j]))
        dual.append(g)
    # psi germs pair to exponents of class -alpha, which never hit 0, so this block is zero
    for j in range(n):
        for k in range(n):
            if sesqui_eval(dual[j], dual[k], n, p).full:
                raise PreconditionViolated("second-kind germs pair nontrivially")
    i = GaussianRational(0, 1)
    es = [add(phis[j], scale(dual[j], -i)) for j in range(n)]
    fs = [add(phis[j], scale(dual[j], i)) for j in range(n)]
    return es, fs


def extension_from_unitary(U: ExtensionMatrix, p: Params) -> BoundaryConditionSet:
    """Boundary conditions ``w_j = E_j + sum_k U[k][j] F_k`` of the extension given by U.

    ``E`` lists ``e_0^+..e_(n-1)^+, e_0^-..e_(n-1)^-`` from
    :func:`symplectic_basis`, and ``F`` likewise.  Since ``[E_j, E_k] = 2i delta``,
    ``[F_j, F_k] = -2i delta`` and ``[E, F] = 0``, the set is Glazman symmetric
    exactly when U is unitary.  U = I gives ``w = 2 phi``.
    """
    if not isinstance(U, ExtensionMatrix):
        raise NotUnitary("expected an ExtensionMatrix")
    n = U.n
    if p.alpha == 0 or p.beta == 0:
        raise DegenerateParameter("extensions need alpha > 0 and beta > 0")
    ep, fp = symplectic_basis(n, p, PLUS)
    em, fm = symplectic_basis(n, p, MINUS)
    E = ep + em
    F = fp + fm
    ws, names = [], []
    for j in range(2 * n):
        w = E[j]
        for k in range(2 * n):
            c = U.entries[k][j]
            if c:
                w = add(w, scale(F[k], c))
        ws.append(w)
        names.append(f"w{j}")
    return BoundaryConditionSet(n, ws, names)
