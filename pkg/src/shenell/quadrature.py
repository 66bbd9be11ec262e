"""Adaptive composite Gauss-Legendre quadrature on finite intervals."""

from dataclasses import dataclass

import numpy as np

from .exceptions import ConvergenceError, DomainError

# 15-point Gauss-Legendre rule on [-1, 1]; exact through degree 29.
_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(15)
_NODES = tuple(float(x) for x in _NODES)
_WEIGHTS = tuple(float(w) for w in _WEIGHTS)

# Refinement stops once the split estimate falls below this multiple of
# the local magnitude; prevents infinite descent on boundary layers.
_REL_FLOOR = 3e-15


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerance and refinement budget for the adaptive integrator."""

    abs_tol: float = 1e-13
    max_refinements: int = 30

    def __post_init__(self):
        if not self.abs_tol > 0.0:
            raise DomainError(f"abs_tol must be positive, got {self.abs_tol!r}")
        if self.max_refinements < 1:
            raise DomainError("max_refinements must be at least 1")


_DEFAULT = QuadratureConfig()


def _panel(f, a, b):
    h = 0.5 * (b - a)
    c = 0.5 * (a + b)
    return h * sum(w * f(c + h * x) for x, w in zip(_NODES, _WEIGHTS))


def integrate(f, a, b, cfg: QuadratureConfig = _DEFAULT) -> float:
    """Integrate ``f`` over ``[a, b]`` to roughly ``cfg.abs_tol``.

    Panels are bisected until the 15-point rule agrees with its own
    two-panel refinement, the tolerance being distributed by subinterval
    length. Raises ConvergenceError if ``cfg.max_refinements`` levels of
    bisection do not suffice.
    """
    if a == b:
        return 0.0
    length = abs(b - a)
    whole = _panel(f, a, b)

    def refine(lo, hi, coarse, depth):
        mid = 0.5 * (lo + hi)
        left = _panel(f, lo, mid)
        right = _panel(f, mid, hi)
        est = abs(left + right - coarse)
        budget = cfg.abs_tol * abs(hi - lo) / length
        if est <= max(budget, _REL_FLOOR * (abs(left) + abs(right))):
            return left + right
        if depth >= cfg.max_refinements:
            raise ConvergenceError(
                f"quadrature stalled at error ~{est:.3e} after "
                f"{cfg.max_refinements} refinement levels (abs_tol={cfg.abs_tol})")
        return refine(lo, mid, left, depth + 1) + refine(mid, hi, right, depth + 1)

    return refine(a, b, whole, 1)
