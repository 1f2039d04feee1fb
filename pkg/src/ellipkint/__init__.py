"""Two-route evaluation of the family ∫₀¹ K(k)·k/(z+k²)^(n+3/2) dk.

The numeric route does tanh-sinh quadrature of the integral with an AGM
kernel for K(k); the exact route differentiates a closed form symbolically
and evaluates it over quadratic fields.  The verification module checks the
two against each other.
"""

from .closedform import ClosedForm, In_exact_real, closed_form, double_factorial_odd
from .elliptic import agm, ellip_k
from .polynomials import Polynomial
from .precision import (
    DEFAULT_PRECISION,
    ConvergenceError,
    DomainError,
    Precision,
    ToleranceNotReached,
)
from .quadfield import QuadExt, Surd, surd_denest, surd_normalize
from .quadrature import (
    I0_via_swap,
    IntegralSpec,
    QuadratureResult,
    inner_integral_closed,
    inner_integral_numeric,
    integral_In_numeric,
    tanh_sinh_integrate,
)
from .render import exact_value_from_json, exact_value_to_json, render
from .specialvalues import (
    CATALOG,
    ExactValue,
    SpecialPoint,
    eval_at_special,
    make_exact_value,
    relation,
)
from .verify import (
    CheckReport,
    SuiteConfig,
    SuiteResult,
    audit_published_tables,
    check_derivative_step,
    check_order_swap,
    check_inner_closed_form,
    check_identity,
    check_relations,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "agm",
    "ellip_k",
    "Precision",
    "DEFAULT_PRECISION",
    "DomainError",
    "ConvergenceError",
    "ToleranceNotReached",
    "tanh_sinh_integrate",
    "QuadratureResult",
    "IntegralSpec",
    "integral_In_numeric",
    "inner_integral_numeric",
    "inner_integral_closed",
    "I0_via_swap",
    "Polynomial",
    "QuadExt",
    "Surd",
    "surd_normalize",
    "surd_denest",
    "ClosedForm",
    "closed_form",
    "In_exact_real",
    "double_factorial_odd",
    "SpecialPoint",
    "CATALOG",
    "ExactValue",
    "make_exact_value",
    "eval_at_special",
    "relation",
    "render",
    "exact_value_to_json",
    "exact_value_from_json",
    "CheckReport",
    "SuiteConfig",
    "SuiteResult",
    "check_identity",
    "check_derivative_step",
    "check_order_swap",
    "check_inner_closed_form",
    "check_relations",
    "audit_published_tables",
    "run_suite",
]
