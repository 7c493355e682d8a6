"""Four routes to the regularized log-sine moment family g(n, x).

The canonical definition is the integral representation

    g(n, x) = H_n - log(2 pi x) - n int_0^1 (1-u)^(n-1) log(2 sin(pi x u)) du.

The other routes (scaled derivative via cotangent averages or via the
even-zeta series, the ladder recursion in n, the generating function in z)
are theorems about this definition; the verify module quantifies how well
each one holds numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import DEFAULT_ACCURACY, Accuracy, GenfuncPoint, GridPoint
from .errors import DomainError
from .quadrature import QuadResult, cot_kernel, integrate_de, log_sin_kernel, weight
from .sequences import harmonic, zeta_even

CONSTANT_AS_PRINTED = "as_printed"
CONSTANT_CORRECTED = "corrected"
CONSTANT_VARIANTS = (CONSTANT_AS_PRINTED, CONSTANT_CORRECTED)

METHOD_INTEGRAL = "integral"
METHOD_LADDER = "ladder"
METHOD_DERIVATIVE_COT = "derivative-cot"
METHOD_DERIVATIVE_SERIES = "derivative-series"
METHODS = (METHOD_INTEGRAL, METHOD_LADDER, METHOD_DERIVATIVE_COT, METHOD_DERIVATIVE_SERIES)


@dataclass(frozen=True)
class Evaluation:
    """A family value together with its accumulated error estimate and the
    number of integrand samples or series terms it consumed."""

    value: float
    err_estimate: float
    evaluations: int


def _kernel_moment(p: GridPoint, acc: Accuracy) -> QuadResult:
    # n int_0^1 (1-u)^(n-1) log(2 sin(pi x u)) du
    n, x = p.n, p.x

    def integrand(u: float) -> float:
        return weight(n, u) * log_sin_kernel(x, u)

    return integrate_de(integrand, acc)


def _integral(p: GridPoint, acc: Accuracy) -> Evaluation:
    q = _kernel_moment(p, acc)
    value = harmonic(p.n) - math.log(2.0 * math.pi * p.x) - q.value
    return Evaluation(value, q.err_estimate, q.evaluations)


def _derivative_cot(p: GridPoint, acc: Accuracy) -> Evaluation:
    n, x = p.n, p.x

    def integrand(u: float) -> float:
        return weight(n, u) * cot_kernel(x, u)

    q = integrate_de(integrand, acc)
    return Evaluation(-q.value - 1.0, q.err_estimate, q.evaluations)


def _derivative_series(p: GridPoint, acc: Accuracy, constant_variant: str) -> Evaluation:
    if constant_variant not in CONSTANT_VARIANTS:
        raise DomainError(f"constant_variant must be one of {CONSTANT_VARIANTS}")
    if p.x >= 1.0:
        raise DomainError("x must satisfy x < 1 on the series route")
    constant = -1.0 if constant_variant == CONSTANT_AS_PRINTED else -2.0
    n = p.n
    x2 = p.x * p.x
    xpow = 1.0
    terms: list[float] = []
    for m in range(1, acc.max_series_terms + 1):
        xpow *= x2
        ratio = 1.0
        for j in range(1, n + 1):
            ratio *= j / (2 * m + j)
        term = 2.0 * ratio * zeta_even(m) * xpow
        terms.append(term)
        if abs(term) < acc.series_abs_tol:
            break
    # terms decay at least geometrically at rate x^2, so the discarded tail
    # is below |last| * x^2 / (1 - x^2)
    tail = abs(terms[-1]) * x2 / (1.0 - x2)
    return Evaluation(math.fsum(terms) + constant, tail, len(terms))


def _ladder_delta(n: int, x: float, acc: Accuracy) -> tuple[float, QuadResult]:
    def integrand(u: float) -> float:
        base = (1.0 - u) ** (n - 1)
        return ((n + 1) * (1.0 - u) - n) * base * log_sin_kernel(x, u)

    q = integrate_de(integrand, acc)
    return 1.0 / (n + 1) - q.value, q


def _via_ladder(p: GridPoint, acc: Accuracy) -> Evaluation:
    start = _integral(GridPoint(1, p.x), acc)
    value = start.value
    err = start.err_estimate
    evaluations = start.evaluations
    for k in range(1, p.n):
        delta, q = _ladder_delta(k, p.x, acc)
        value += delta
        err += q.err_estimate
        evaluations += q.evaluations
    return Evaluation(value, err, evaluations)


def evaluate(
    p: GridPoint,
    method: str = METHOD_INTEGRAL,
    acc: Accuracy = DEFAULT_ACCURACY,
    constant_variant: str = CONSTANT_CORRECTED,
) -> Evaluation:
    """Evaluate the family (or its scaled derivative) by the named route."""
    if method == METHOD_INTEGRAL:
        return _integral(p, acc)
    if method == METHOD_LADDER:
        return _via_ladder(p, acc)
    if method == METHOD_DERIVATIVE_COT:
        return _derivative_cot(p, acc)
    if method == METHOD_DERIVATIVE_SERIES:
        return _derivative_series(p, acc, constant_variant)
    raise DomainError(f"method must be one of {METHODS}")


def eval_integral(p: GridPoint, acc: Accuracy = DEFAULT_ACCURACY) -> float:
    """Canonical value of the family at p, by the integral representation."""
    return _integral(p, acc).value


def eval_derivative_cot(p: GridPoint, acc: Accuracy = DEFAULT_ACCURACY) -> float:
    """x * d/dx of the family at p, via the cotangent average:

        -n int_0^1 (1-u)^(n-1) pi x u cot(pi x u) du - 1
    """
    return _derivative_cot(p, acc).value


def eval_derivative_series(
    p: GridPoint,
    acc: Accuracy = DEFAULT_ACCURACY,
    constant_variant: str = CONSTANT_CORRECTED,
) -> float:
    """x * d/dx of the family at p, via the even-zeta series:

        2 n! sum_{m>=1} (2m)!/(2m+n)! zeta(2m) x^(2m) + C

    with C = -1 ("as_printed") or C = -2 ("corrected"). The two printed
    constants are mutually inconsistent; substituting the cotangent
    expansion into the integral route yields -2, and the verification
    harness confirms which variant tracks the canonical derivative. The
    factorial ratio is accumulated as prod_j j/(2m+j), never through
    explicit factorials.
    """
    return _derivative_series(p, acc, constant_variant).value


def ladder_delta(n: int, x: float, acc: Accuracy = DEFAULT_ACCURACY) -> float:
    """Step of the ladder recursion, g(n+1, x) - g(n, x):

        1/(n+1) - int_0^1 [(n+1)(1-u)^n - n(1-u)^(n-1)] log(2 sin(pi x u)) du
    """
    if n < 1:
        raise DomainError("n must satisfy n >= 1")
    if not 0.0 < x <= 1.0:
        raise DomainError("x must satisfy 0 < x <= 1")
    return _ladder_delta(n, x, acc)[0]


def eval_via_ladder(p: GridPoint, acc: Accuracy = DEFAULT_ACCURACY) -> float:
    """Family value reached by climbing the ladder from order 1."""
    return _via_ladder(p, acc).value


def genfunc_closed(q: GenfuncPoint, acc: Accuracy = DEFAULT_ACCURACY) -> float:
    """Closed form of the generating function sum_{n>=1} g(n, x) z^n:

        -(z/(1-z)) log(2 pi x) - log(1-z)/(1-z)
        - int_0^1 log(2 sin(pi x u)) z / (1 - z(1-u))^2 du
    """
    x, z = q.x, q.z

    def integrand(u: float) -> float:
        d = 1.0 - z * (1.0 - u)
        return log_sin_kernel(x, u) * z / (d * d)

    quad = integrate_de(integrand, acc)
    return (
        -(z / (1.0 - z)) * math.log(2.0 * math.pi * x)
        - math.log1p(-z) / (1.0 - z)
        - quad.value
    )


def genfunc_partial(x: float, z: float, N: int, acc: Accuracy = DEFAULT_ACCURACY) -> float:
    """Partial sum sum_{n=1..N} g(n, x) z^n of the generating function."""
    if N < 1:
        raise DomainError("N must satisfy N >= 1")
    point = GenfuncPoint(x, z)  # validates x and |z| <= 0.9
    zpow = 1.0
    terms = []
    for n in range(1, N + 1):
        zpow *= point.z
        terms.append(eval_integral(GridPoint(n, x), acc) * zpow)
    return math.fsum(terms)


def genfunc_tail_bound(
    x: float, z: float, N: int, acc: Accuracy = DEFAULT_ACCURACY, probe: int = 20
) -> float:
    """Empirical bound on the generating-function tail beyond N:

        max_{n <= N+probe} |g(n, x)| * |z|^(N+1) / (1 - |z|)

    The peak is probed empirically rather than assumed from any claimed
    decay in n (the family in fact grows like 2 log n at fixed x).
    """
    GenfuncPoint(x, z)
    peak = max(abs(eval_integral(GridPoint(n, x), acc)) for n in range(1, N + probe + 1))
    return peak * abs(z) ** (N + 1) / (1.0 - abs(z))
