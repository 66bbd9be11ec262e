"""d, s^2, c^2 and s*c as elliptic functions of a complex variable.

d extends off the real axis as the rational function of wp

    d = 1 - (4/9) k^2 / (wp + 1/3),

elliptic of order two with simple poles at +-(2/3) i K' in the cell.
The squares s^2 = (1 - d)(2 + d)^2 / (4 k^2) and c^2 = 1 - s^2 are then
elliptic with triple poles; s and c themselves are not elliptic and are
only exposed on the real principal branch (see :mod:`shenell.phase`).
"""

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DegenerateError, DomainError, PoleError
from .phase import Modulus
from .weierstrass import (Invariants, Lattice, invariants_of_modulus,
                          lattice_of_invariants, wp)

#: |wp + 1/3| below this counts as a pole of d.
D_POLE_TOL = 1e-10

_FD_STEP = 1e-6
_UNIT_TOL = 1e-12


@dataclass(frozen=True)
class ShenContext:
    """A modulus together with its invariants and lattice."""

    k: Modulus
    inv: Invariants
    lat: Lattice

    @classmethod
    def from_modulus(cls, k: Modulus) -> "ShenContext":
        inv = invariants_of_modulus(k)
        return cls(k=k, inv=inv, lat=lattice_of_invariants(inv))


def d_complex(ctx: ShenContext, z) -> complex:
    """d(z) = 1 - (4/9) k^2 / (wp(z) + 1/3); even, periods 2K and 2iK'.

    At lattice points wp has its pole and d takes the regular value 1
    (the initial condition of the real branch), returned exactly.
    Raises PoleError where wp(z) falls within ``D_POLE_TOL`` of -1/3,
    i.e. at z congruent to +-(2/3) i K'.
    """
    try:
        p = wp(z, ctx.inv, ctx.lat)
    except PoleError:
        return complex(1.0, 0.0)
    denom = p + 1.0 / 3.0
    if abs(denom) < D_POLE_TOL:
        raise PoleError(f"z={z!r} lies at a pole of d (wp(z) ~ -1/3)")
    return 1.0 - (4.0 / 9.0) * ctx.k ** 2 / denom


def s_squared(ctx: ShenContext, z) -> complex:
    """s^2 via the (s, d) relation: (1 - d)(2 + d)^2 / (4 k^2)."""
    d = d_complex(ctx, z)
    return (1.0 - d) * (2.0 + d) ** 2 / (4.0 * ctx.k ** 2)


def c_squared(ctx: ShenContext, z) -> complex:
    """Pythagorean complement 1 - s^2."""
    return 1.0 - s_squared(ctx, z)


def sc_product(ctx: ShenContext, z, h: float = _FD_STEP) -> complex:
    """The product s c = -(3 / (16 k^2)) * d/dz (d + 2)^2.

    The derivative is a central difference with step ``h``, taken along
    the real direction unless that line hits a pole, then the imaginary
    direction. Analytically equal to -(3 / (8 k^2)) (2 + d) d'.
    """
    if h <= 0.0:
        raise DomainError("step h must be positive")
    z = complex(z)
    for direction in (1.0 + 0.0j, 1.0j):
        try:
            fp = (d_complex(ctx, z + h * direction) + 2.0) ** 2
            fm = (d_complex(ctx, z - h * direction) + 2.0) ** 2
        except PoleError:
            continue
        derivative = (fp - fm) / (2.0 * h * direction)
        return -3.0 / (16.0 * ctx.k ** 2) * derivative
    raise PoleError(f"both difference directions at z={z!r} hit poles of d")


def cubic_relation_residual(ctx: ShenContext, z) -> float:
    """|d^3 + 3 d^2 - 4 (1 - k^2 s^2)| at z."""
    d = d_complex(ctx, z)
    s2 = (1.0 - d) * (2.0 + d) ** 2 / (4.0 * ctx.k ** 2)
    return abs(d ** 3 + 3.0 * d ** 2 - 4.0 * (1.0 - ctx.k ** 2 * s2))


def d_ode_residual(ctx: ShenContext, z, h: float = 1e-5) -> float:
    """Residual of (d')^2 = (4/9)(1 - d)(d^3 + 3 d^2 + 4 k^2 - 4).

    d' is a central difference with step ``h`` (real direction first,
    imaginary as the fallback near poles).
    """
    if h <= 0.0:
        raise DomainError("step h must be positive")
    z = complex(z)
    d = d_complex(ctx, z)
    for direction in (1.0 + 0.0j, 1.0j):
        try:
            dplus = d_complex(ctx, z + h * direction)
            dminus = d_complex(ctx, z - h * direction)
        except PoleError:
            continue
        dprime = (dplus - dminus) / (2.0 * h * direction)
        rhs = (4.0 / 9.0) * (1.0 - d) * (d ** 3 + 3.0 * d ** 2
                                         + 4.0 * ctx.k ** 2 - 4.0)
        return abs(dprime * dprime - rhs)
    raise PoleError(f"both difference directions at z={z!r} hit poles of d")


def substitution_chain_check(ctx: ShenContext, z) -> float:
    """|p(z) - wp(z)| where p = (4 k^2 / 9) / (1 - d) - 1/3.

    Exercises the change of variables r = 1/(1 - d), q = (4 k^2 / 9) r,
    p = q - 1/3 against a direct wp evaluation; the constants enter the
    two paths independently, so a wrong coefficient in either one shows
    up here. Raises DegenerateError where d(z) = 1 (lattice points).
    """
    d = d_complex(ctx, z)
    if abs(1.0 - d) < _UNIT_TOL:
        raise DegenerateError(f"d(z) = 1 at z={z!r}; the substitution degenerates")
    p = (4.0 / 9.0) * ctx.k ** 2 / (1.0 - d) - 1.0 / 3.0
    return abs(p - wp(z, ctx.inv, ctx.lat))


def pole_order_slope(f, z0, radii=None, direction=1.0) -> float:
    """Least-squares slope of log|f| against log r on a dyadic radius sweep.

    Approaches ``z0`` along ``direction`` at radii 1e-2, 5e-3, ... down
    to just under 1e-5 by default. A simple pole gives -1, a triple pole
    -3, to within the curvature of the analytic part over the sweep.
    """
    if radii is None:
        radii = [1e-2 * 0.5 ** j for j in range(11)]
    direction = complex(direction) / abs(complex(direction))
    log_r = [math.log(r) for r in radii]
    log_f = [math.log(abs(f(z0 + r * direction))) for r in radii]
    slope = np.polyfit(log_r, log_f, 1)[0]
    return float(slope)
