"""Exact computations for self-adjoint extensions of powers of the Jacobi operator.

The submodules build on each other in this order: :mod:`exact_numbers`,
:mod:`endpoint_algebra`, :mod:`jacobi_operator`, :mod:`special_functions`,
:mod:`sesquilinear`, :mod:`domains`, :mod:`gkn`, :mod:`numerics`.
"""

__version__ = "0.1.0"

from .endpoint_algebra import (  # noqa: E402
    MINUS,
    PLUS,
    Germ,
    LimitClass,
    Params,
    Term,
    TermFunction,
    constant,
    differentiate,
    divide_by_weight,
    is_L2,
    limit_classify,
    monomial,
)
from .exact_numbers import AlgebraicValue, BigFloat, GaussianRational, embed_real, pow2  # noqa: E402
from .jacobi_operator import (  # noqa: E402
    apply_l,
    apply_ln_composed,
    apply_ln_symmetric,
    derive_symmetric_coefficients,
)
from .sesquilinear import sesqui_eval, sesqui_form_expression, strong_limit_point_check  # noqa: E402
from .special_functions import jacobi_poly, local_solution_germ, phi, psi  # noqa: E402

__all__ = [
    "MINUS", "PLUS", "Germ", "LimitClass", "Params", "Term", "TermFunction",
    "constant", "differentiate", "divide_by_weight", "is_L2", "limit_classify", "monomial",
    "AlgebraicValue", "BigFloat", "GaussianRational", "embed_real", "pow2",
    "apply_l", "apply_ln_composed", "apply_ln_symmetric", "derive_symmetric_coefficients",
    "sesqui_eval", "sesqui_form_expression", "strong_limit_point_check",
    "jacobi_poly", "local_solution_germ", "phi", "psi",
]
