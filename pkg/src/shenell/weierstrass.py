"""Weierstrass wp from the modulus: invariants, rectangular lattice, evaluation.

For 0 < k < 1 the invariants

    g2 = (4/27) (9 - 8 k^2),   g3 = (8/729) (8 k^4 - 36 k^2 + 27)

are real with discriminant g2^3 - 27 g3^2 = (4096/19683) k^6 (1 - k^2) > 0,
so the cubic 4 t^3 - g2 t - g3 has three real roots e1 > e2 > e3 and the
period lattice is rectangular, generated by 2K and 2iK'.

The evaluator is self-contained: arguments are reduced into the cell
[-K, K] x [-K', K'], halved until the Laurent series about 0 converges
fast, then pushed back out with the duplication formula. No theta
functions, no AGM.
"""

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache

from .exceptions import DegenerateError, DomainError, PoleError
from .phase import _check_modulus
from .quadrature import QuadratureConfig, integrate

#: Default radius around lattice points inside which wp refuses to evaluate.
POLE_EXCLUSION = 1e-8

# Laurent summation applies once |z| <= this fraction of the shortest
# nonzero lattice vector; the squared ratio 0.1225 kills the series in
# under thirty terms.
_SERIES_FRACTION = 0.35
_N_COEFFS = 48

# wp' smaller than this marks a half-period, where the duplication
# formula degenerates.
_HALF_PERIOD_TOL = 1e-8

_PERIOD_CFG = QuadratureConfig(abs_tol=1e-14, max_refinements=40)


@dataclass(frozen=True)
class Invariants:
    """g2, g3 and the discriminant delta = g2^3 - 27 g3^2.

    Fields are floats in the standard constructor path; the exact mode in
    :mod:`shenell.poles` stores Fractions in the same slots.
    """

    g2: float
    g3: float
    delta: float


@dataclass(frozen=True)
class Lattice:
    """Half-periods K, K' (2K and 2iK' generate the lattice) and the cubic roots."""

    K: float
    K_prime: float
    e1: float
    e2: float
    e3: float


def exact_invariants(k2):
    """g2, g3, delta as exact rationals in the squared modulus ``k2``."""
    k2 = Fraction(k2)
    if not 0 < k2 < 1:
        raise DomainError(f"squared modulus out of range (0, 1): k^2={k2}")
    g2 = Fraction(4, 27) * (9 - 8 * k2)
    g3 = Fraction(8, 729) * (8 * k2 * k2 - 36 * k2 + 27)
    delta = Fraction(4096, 19683) * k2 ** 3 * (1 - k2)
    return g2, g3, delta


def invariants_of_modulus(k: float) -> Invariants:
    """Invariants for modulus k, correctly rounded.

    The fields are computed in exact rational arithmetic from the binary
    value of ``k`` and rounded once at the end, so g2(1/2) == 28/27 and
    delta(1/2) == 48/19683 hold to the last bit.
    """
    _check_modulus(k)
    g2, g3, delta = exact_invariants(Fraction(k) ** 2)
    return Invariants(g2=float(g2), g3=float(g3), delta=float(delta))


def _cubic_root_seeds(g2, g3):
    # Trigonometric solution of 4 t^3 - g2 t - g3 = 0; three real roots
    # are guaranteed by delta > 0. Depressed form t^3 + p t + q.
    p = -g2 / 4.0
    q = -g3 / 4.0
    scale = 2.0 * math.sqrt(-p / 3.0)
    cosarg = min(1.0, max(-1.0, 3.0 * q / (p * scale)))
    theta = math.acos(cosarg)
    roots = [scale * math.cos((theta - 2.0 * math.pi * j) / 3.0) for j in range(3)]
    return sorted(roots, reverse=True)


def _refined_roots(g2, g3):
    """Roots and their pairwise differences, Newton-polished in 50-digit Decimal.

    Near-degenerate lattices (k close to 0 or 1) have two almost equal
    roots; differences formed from double-precision roots would lose half
    their digits, which the period integrals cannot afford.
    """
    seeds = _cubic_root_seeds(g2, g3)
    with localcontext() as ctx:
        ctx.prec = 50
        dg2 = Decimal(g2)
        dg3 = Decimal(g3)
        roots = []
        for seed in seeds:
            t = Decimal(seed)
            for _ in range(6):
                value = 4 * t * t * t - dg2 * t - dg3
                slope = 12 * t * t - dg2
                t -= value / slope
            roots.append(t)
        e1, e2, e3 = roots
        diffs = (float(e1 - e2), float(e1 - e3), float(e2 - e3))
    return (float(e1), float(e2), float(e3)), diffs


def lattice_of_invariants(inv: Invariants, cfg: QuadratureConfig = _PERIOD_CFG) -> Lattice:
    """Half-periods and cubic roots; requires delta > 0.

    K is the integral of dt / sqrt(4 t^3 - g2 t - g3) over [e1, inf),
    K' the integral of dt / sqrt(-(4 t^3 - g2 t - g3)) over (-inf, e3].
    The substitution t = e1 + tan^2(psi) (resp. t = e3 - tan^2(psi)) maps
    either one onto [0, pi/2] with the smooth integrand

        1 / sqrt((sin^2 + a cos^2)(sin^2 + b cos^2))

    where (a, b) = (e1-e2, e1-e3) for K and (e1-e3, e2-e3) for K'.
    """
    if not inv.delta > 0.0:
        raise DomainError(f"lattice requires positive discriminant, got {inv.delta!r}")
    (e1, e2, e3), (d12, d13, d23) = _refined_roots(inv.g2, inv.g3)

    def half_period(a, b):
        def integrand(psi):
            s2 = math.sin(psi) ** 2
            c2 = 1.0 - s2
            return 1.0 / math.sqrt((s2 + a * c2) * (s2 + b * c2))
        return integrate(integrand, 0.0, math.pi / 2.0, cfg)

    return Lattice(K=half_period(d12, d13), K_prime=half_period(d13, d23),
                   e1=e1, e2=e2, e3=e3)


@lru_cache(maxsize=64)
def _laurent_coefficients(g2, g3, count=_N_COEFFS):
    # wp(z) = 1/z^2 + sum_{n>=2} c_n z^(2n-2), c_2 = g2/20, c_3 = g3/28;
    # higher coefficients follow the quadratic recurrence forced by the
    # wp differential equation.
    c = [0.0, 0.0, g2 / 20.0, g3 / 28.0]
    for n in range(4, count + 1):
        acc = math.fsum(c[j] * c[n - j] for j in range(2, n - 1))
        c.append(3.0 * acc / ((2 * n + 1) * (n - 3)))
    return tuple(c)


def _series_pair(z, coeffs):
    z2 = z * z
    tail = 0.0j
    dtail = 0.0j
    for n in range(len(coeffs) - 1, 1, -1):
        tail = tail * z2 + coeffs[n]
        dtail = dtail * z2 + (2 * n - 2) * coeffs[n]
    return 1.0 / z2 + z2 * tail, -2.0 / (z2 * z) + z * dtail


def reduce_to_cell(z, lat: Lattice) -> complex:
    """Translate z by lattice vectors into the cell [-K, K] x [-K', K']."""
    z = complex(z)
    two_k = 2.0 * lat.K
    two_kp = 2.0 * lat.K_prime
    return complex(z.real - two_k * round(z.real / two_k),
                   z.imag - two_kp * round(z.imag / two_kp))


def wp_with_prime(z, inv: Invariants, lat: Lattice,
                  pole_tol: float = POLE_EXCLUSION) -> tuple:
    """(wp(z), wp'(z)) for the given invariants and lattice.

    After cell reduction the argument is halved n times until the Laurent
    series applies, then the duplication formula

        wp(2w) = (wp''(w) / (2 wp'(w)))^2 - 2 wp(w)

    doubles back up, with wp' carried along through the chain rule. All
    intermediate points 2^j w (j < n) lie in the quarter cell, safely away
    from the zeros of wp', so each doubling step is well conditioned.

    Raises PoleError when z reduces into ``pole_tol`` of a lattice point.
    """
    zr = reduce_to_cell(z, lat)
    if abs(zr) < pole_tol:
        raise PoleError(f"z={z!r} is within {pole_tol} of a lattice point")
    radius = _SERIES_FRACTION * 2.0 * min(lat.K, lat.K_prime)
    halvings = 0
    w = zr
    while abs(w) > radius:
        w *= 0.5
        halvings += 1
    p, dp = _series_pair(w, _laurent_coefficients(inv.g2, inv.g3))
    for _ in range(halvings):
        curvature = 6.0 * p * p - 0.5 * inv.g2  # wp''
        p, dp = ((curvature / (2.0 * dp)) ** 2 - 2.0 * p,
                 -dp + curvature * (12.0 * p * dp * dp - curvature ** 2)
                 / (4.0 * dp ** 3))
    return p, dp


def wp(z, inv: Invariants, lat: Lattice, pole_tol: float = POLE_EXCLUSION) -> complex:
    """Weierstrass wp(z); doubly periodic with periods 2K and 2iK', even."""
    return wp_with_prime(z, inv, lat, pole_tol)[0]


def wp_prime(z, inv: Invariants, lat: Lattice,
             pole_tol: float = POLE_EXCLUSION) -> complex:
    """wp'(z) from the differentiated Laurent series and the duplication chain.

    Never computed as a square root of 4 wp^3 - g2 wp - g3, so there is
    no branch ambiguity to resolve.
    """
    return wp_with_prime(z, inv, lat, pole_tol)[1]


def duplication_check(a, inv: Invariants, lat: Lattice) -> float:
    """Absolute residual of wp(2a) + 2 wp(a) = (1/4) (wp''(a) / wp'(a))^2.

    Both sides are evaluated independently: the left through two direct
    wp calls, the right from wp(a), wp'(a) and wp'' = 6 wp^2 - g2/2.
    Raises DegenerateError when a is congruent to a half-period, where
    wp'(a) = 0 and the right side blows up.
    """
    pa, dpa = wp_with_prime(a, inv, lat)
    if abs(dpa) < _HALF_PERIOD_TOL:
        raise DegenerateError(
            f"wp'(a) ~ 0 at a={a!r}; a is congruent to a half-period")
    p2a = wp(2.0 * complex(a), inv, lat)
    curvature = 6.0 * pa * pa - 0.5 * inv.g2
    return abs(p2a + 2.0 * pa - 0.25 * (curvature / dpa) ** 2)
