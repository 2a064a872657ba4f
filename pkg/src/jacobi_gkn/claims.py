"""Named verification claims with JSON evidence, shared by the CLI and tests.

Each claim function returns ``(passed, evidence)``.  Evidence is plain JSON
data and always lists the tested universe (parameters, indices, functions).
"""

from __future__ import annotations

import random
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .domains import in_minimal, leftdef_flags, verify_maxdomain_theorem
from .endpoint_algebra import MINUS, PLUS, Params, constant
from .exact_numbers import scalar_to_json
from .gkn import BoundaryConditionSet, build_pairing_matrix, domain_equal, exact_rank
from .jacobi_operator import (
    apply_ln_composed,
    apply_ln_symmetric,
    derive_symmetric_coefficients,
    eigenvalue,
)
from .sesquilinear import sesqui_eval
from .special_functions import catalog, jacobi_poly, phi, psi

__all__ = ["CLAIMS", "run_claim", "random_index_sets"]

Evidence = Tuple[bool, dict]


def _sides():
    return ((PLUS, "+1"), (MINUS, "-1"))


def claim_upperleft(n: int, p: Params, **_) -> Evidence:
    checks = []
    ok = True
    for side, label in _sides():
        for s in range(n):
            for t in range(n):
                v = sesqui_eval(phi(s, side), phi(t, side), n, p).full
                checks.append({"side": label, "s": s, "t": t, "value": scalar_to_json(v)})
                if v:
                    ok = False
    return ok, {"pairings": checks}


def claim_overn(n: int, p: Params, **_) -> Evidence:
    checks = []
    ok = True
    for side, label in _sides():
        for s in range(n + 1):
            for t in range(n + 1):
                if s + t < n:
                    continue
                v = sesqui_eval(phi(s, side), psi(t, side, p), n, p).full
                checks.append({"side": label, "s": s, "t": t, "value": scalar_to_json(v)})
                if v:
                    ok = False
    return ok, {"pairings": checks}


def claim_secondkinddefect(n: int, p: Params, **_) -> Evidence:
    consts = []
    ok = True
    for side, label in _sides():
        for y in range(n):
            c = sesqui_eval(phi(y, side), psi(n - 1 - y, side, p), n, p).full
            not_min_phi = not in_minimal(phi(y, side), n, p)
            not_min_psi = not in_minimal(psi(y, side, p), n, p)
            consts.append(
                {
                    "side": label,
                    "y": y,
                    "constant": scalar_to_json(c),
                    "phi_not_minimal": not_min_phi,
                    "psi_not_minimal": not_min_psi,
                }
            )
            ok = ok and bool(c) and not_min_phi and not_min_psi
    return ok, {"defect_constants": consts}


def claim_mrank(n: int, p: Params, **_) -> Evidence:
    out = {}
    ok = True
    for side, label in _sides():
        r = exact_rank(build_pairing_matrix(n, p, side))
        out[label] = r
        ok = ok and r == 2 * n
    return ok, {"rank": out, "expected": 2 * n}


def random_index_sets(n: int, count: int, seed: int, high: int = 12) -> List[List[int]]:
    rng = random.Random(seed)
    return [sorted(rng.sample(range(high + 1), n)) for _ in range(count)]


def claim_any_jacobi(
    n: int, p: Params, indices: Optional[Sequence[int]] = None, seed: int = 0, **_
) -> Evidence:
    sets = [list(indices)] if indices else random_index_sets(n, 5, seed)
    base = BoundaryConditionSet.from_functions(
        n, [jacobi_poly(j, p) for j in range(n)], [f"P{j}" for j in range(n)]
    )
    results = []
    ok = True
    for ms in sets:
        if len(ms) != n or len(set(ms)) != n:
            raise ValueError(f"need {n} distinct indices, got {ms}")
        other = BoundaryConditionSet.from_functions(
            n, [jacobi_poly(m, p) for m in ms], [f"P{m}" for m in ms]
        )
        eq = domain_equal(base, other, p)
        results.append({"indices": ms, "equal": eq})
        ok = ok and eq
    return ok, {"index_sets": results, "seed": seed}


def claim_legendre(n: int, p: Params, max_degree: int = 8, **_) -> Evidence:
    q = Params(0, 0)
    base = BoundaryConditionSet.from_functions(1, [constant(1)], ["1"])
    results = []
    ok = True
    for m in range(max_degree + 1):
        eq = domain_equal(base, BoundaryConditionSet.from_functions(1, [jacobi_poly(m, q)], [f"P{m}"]), q)
        results.append({"m": m, "equal": eq})
        ok = ok and eq
    return ok, {"legendre": results}


def claim_leftdef_equal(n: int, p: Params, **_) -> Evidence:
    rows = []
    separations = []
    ok = True
    for entry in catalog(n, p):
        flags = leftdef_flags(entry.function, n, p)
        core = {flags[k] for k in ("B", "F", "LW", "F_sesqui") if k in flags}
        row = {"function": entry.name, **flags}
        rows.append(row)
        if len(core) > 1:
            ok = False
        elif flags["A"] not in core:
            separations.append(entry.name)
    return ok, {"flags": rows, "A_vs_LW_separations": separations}


def claim_eigen(n: int, p: Params, max_degree: int = 10, **_) -> Evidence:
    bad = []
    for m in range(max_degree + 1):
        P = jacobi_poly(m, p)
        lhs = apply_ln_composed(P, n, p)
        if not (lhs - P * eigenvalue(m, p) ** n).is_zero():
            bad.append(m)
    return not bad, {"degrees": list(range(max_degree + 1)), "failures": bad}


def claim_symmetric(n: int, p: Params, **_) -> Evidence:
    form = derive_symmetric_coefficients(n, p)
    fams = [jacobi_poly(m, p) for m in range(2 * n + 3)]
    bad = [
        i for i, f in enumerate(fams)
        if not (apply_ln_symmetric(f, form, p) - apply_ln_composed(f, n, p)).is_zero()
    ]
    return form.C(n) == 1 and not bad, {"form": form.to_json(), "failures": bad}


def claim_minimal(n: int, p: Params, **_) -> Evidence:
    rows = []
    ok = True
    for side, label in _sides():
        for j in range(n + 3):
            got = in_minimal(phi(j, side), n, p)
            want = j >= n
            rows.append({"function": f"phi{label[0]}:{j}", "in_min": got, "expected": want})
            ok = ok and got == want
            got = in_minimal(psi(j, side, p), n, p)
            rows.append({"function": f"psi{label[0]}:{j}", "in_min": got, "expected": want})
            ok = ok and got == want
    return ok, {"ladder": rows}


def claim_maxdomain(n: int, p: Params, **_) -> Evidence:
    entries = catalog(n, p)
    rep = verify_maxdomain_theorem(n, p, [e.function for e in entries], [e.name for e in entries])
    return rep.passed, {"tested": rep.tested, "passed": rep.passed}


CLAIMS: Dict[str, Callable[..., Evidence]] = {
    "upperleft": claim_upperleft,
    "overn": claim_overn,
    "secondkinddefect": claim_secondkinddefect,
    "m-rank": claim_mrank,
    "any-jacobi": claim_any_jacobi,
    "legendre": claim_legendre,
    "leftdef-equal": claim_leftdef_equal,
    "eigen": claim_eigen,
    "symmetric": claim_symmetric,
    "minimal": claim_minimal,
    "maxdomain": claim_maxdomain,
}


def run_claim(name: str, n: int, p: Params, **kwargs) -> Evidence:
    if name not in CLAIMS:
        raise KeyError(name)
    return CLAIMS[name](n, p, **kwargs)
