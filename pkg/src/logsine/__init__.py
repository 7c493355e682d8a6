"""Regularized log-sine moment family.

Evaluates g(n, x) = H_n - log(2 pi x) - n int_0^1 (1-u)^(n-1)
log(2 sin(pi x u)) du through four mutually checkable routes, and ships a
verification harness that quantifies how well every identity of the
family holds numerically.
"""

from .config import DEFAULT_ACCURACY, Accuracy, GenfuncPoint, GridPoint
from .errors import DomainError, NonConvergenceError, NonFiniteSampleError, QuadratureError
from .family import (
    CONSTANT_AS_PRINTED,
    CONSTANT_CORRECTED,
    METHOD_DERIVATIVE_COT,
    METHOD_DERIVATIVE_SERIES,
    METHOD_INTEGRAL,
    METHOD_LADDER,
    Evaluation,
    eval_derivative_cot,
    eval_derivative_series,
    eval_integral,
    eval_via_ladder,
    evaluate,
    genfunc_closed,
    genfunc_partial,
    genfunc_tail_bound,
    ladder_delta,
)
from .quadrature import QuadResult, cot_kernel, integrate_de, log_sin_kernel, weight
from .sequences import (
    BERNOULLI_MAX_INDEX,
    bernoulli_even,
    cot_partial,
    harmonic,
    zeta_even_bernoulli,
    zeta_even_direct,
)
from .verify import (
    IDENTITY_IDS,
    AsymptoticAudit,
    AsymptoticRow,
    AuditRow,
    IdentityReport,
    TableAudit,
    audit_large_n,
    audit_small_x,
    audit_table,
    check_bernoulli_zeta,
    check_derivative,
    check_genfunc,
    check_ladder,
    check_path_equivalence,
    check_series_constant,
)

__version__ = "0.1.0"

__all__ = [
    "Accuracy",
    "AsymptoticAudit",
    "AsymptoticRow",
    "AuditRow",
    "BERNOULLI_MAX_INDEX",
    "CONSTANT_AS_PRINTED",
    "CONSTANT_CORRECTED",
    "DEFAULT_ACCURACY",
    "DomainError",
    "Evaluation",
    "GenfuncPoint",
    "GridPoint",
    "IDENTITY_IDS",
    "IdentityReport",
    "METHOD_DERIVATIVE_COT",
    "METHOD_DERIVATIVE_SERIES",
    "METHOD_INTEGRAL",
    "METHOD_LADDER",
    "NonConvergenceError",
    "NonFiniteSampleError",
    "QuadratureError",
    "QuadResult",
    "TableAudit",
    "audit_large_n",
    "audit_small_x",
    "audit_table",
    "bernoulli_even",
    "check_bernoulli_zeta",
    "check_derivative",
    "check_genfunc",
    "check_ladder",
    "check_path_equivalence",
    "check_series_constant",
    "cot_kernel",
    "cot_partial",
    "eval_derivative_cot",
    "eval_derivative_series",
    "eval_integral",
    "eval_via_ladder",
    "evaluate",
    "genfunc_closed",
    "genfunc_partial",
    "genfunc_tail_bound",
    "harmonic",
    "integrate_de",
    "ladder_delta",
    "log_sin_kernel",
    "weight",
    "zeta_even_bernoulli",
    "zeta_even_direct",
]
