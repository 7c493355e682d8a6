"""Evaluation points and accuracy budgets.

Everything downstream is a pure function of these frozen configs, so grids
can be evaluated concurrently without shared state.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class GridPoint:
    """One (order n, scale x) evaluation point of the moment family.

    The scale is restricted to 0 < x <= 1: beyond x = 1 the kernel
    2 sin(pi x u) changes sign inside (0, 1) and the log kernel is
    undefined as written.
    """

    n: int
    x: float

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError("n must satisfy n >= 1")
        if not 0.0 < self.x <= 1.0:
            raise DomainError("x must satisfy 0 < x <= 1")


@dataclass(frozen=True)
class GenfuncPoint:
    """A (scale x, series variable z) point for the generating function.

    |z| <= 0.9 keeps a convergence margin for both the closed form and
    the partial sums.
    """

    x: float
    z: float

    def __post_init__(self) -> None:
        if not 0.0 < self.x <= 1.0:
            raise DomainError("x must satisfy 0 < x <= 1")
        if abs(self.z) > 0.9:
            raise DomainError("z must satisfy |z| <= 0.9")


@dataclass(frozen=True)
class Accuracy:
    """Tolerances and truncation budgets governing quadrature and series."""

    quad_rel_tol: float = 1e-12
    series_abs_tol: float = 1e-15
    max_series_terms: int = 200
    max_quad_refinements: int = 12

    def __post_init__(self) -> None:
        if self.quad_rel_tol <= 0.0:
            raise DomainError("quad_rel_tol must be strictly positive")
        if self.series_abs_tol <= 0.0:
            raise DomainError("series_abs_tol must be strictly positive")
        if self.max_series_terms < 1:
            raise DomainError("max_series_terms must satisfy max_series_terms >= 1")
        if self.max_quad_refinements < 1:
            raise DomainError("max_quad_refinements must satisfy max_quad_refinements >= 1")


DEFAULT_ACCURACY = Accuracy()
