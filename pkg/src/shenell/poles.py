"""Certification of the pole of d at (2/3) i K'.

d has a pole exactly where wp = -1/3. Combining the duplication formula
with 2a = (4/3) i K' = -a (mod 2iK') shows b = wp((2/3) i K') is a zero
of the quartic

    f(z) = 12 z (4 z^3 - g2 z - g3) - (6 z^2 - g2/2)^2,

whose rescaling (27/4) f(w/3) factors as (w + 1) times a cubic with one
positive real root and a conjugate pair. Since wp is strictly negative
on (0, iK'), the only root available to b is -1/3.

Polynomial identities here are checked in exact rational arithmetic;
the transcendental value wp((2/3) i K') is certified in floating point.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .exceptions import ClassificationError, DomainError
from .field import ShenContext
from .phase import Modulus, _check_modulus
from .weierstrass import Invariants, exact_invariants, wp


class RationalPoly:
    """Dense polynomial with exact rational coefficients, constant term first.

    Coefficients are normalized to Fraction; float inputs convert exactly
    (every float is a binary rational), so arithmetic never rounds.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        coeffs = [Fraction(c) for c in coefficients]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction x, float/complex otherwise."""
        if isinstance(x, (int, Fraction)):
            acc = Fraction(0)
            for c in reversed(self.coefficients):
                acc = acc * x + c
            return acc
        acc = 0.0j if isinstance(x, complex) else 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + float(c)
        return acc

    def __mul__(self, other):
        if not isinstance(other, RationalPoly):
            return NotImplemented
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return RationalPoly(out)

    def __eq__(self, other):
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"RationalPoly({list(self.coefficients)!r})"

    def scaled(self, factor) -> "RationalPoly":
        """The polynomial factor * p."""
        factor = Fraction(factor)
        return RationalPoly([factor * c for c in self.coefficients])

    def with_argument_scaled(self, a) -> "RationalPoly":
        """The polynomial p(a * x)."""
        a = Fraction(a)
        return RationalPoly([c * a ** i for i, c in enumerate(self.coefficients)])


def invariants_exact(k2) -> Invariants:
    """Invariants carrying exact Fraction fields, for proof-grade checks."""
    g2, g3, delta = exact_invariants(k2)
    return Invariants(g2=g2, g3=g3, delta=delta)


def quartic_f(inv: Invariants) -> RationalPoly:
    """The quartic 12 z (4 z^3 - g2 z - g3) - (6 z^2 - g2/2)^2, expanded.

    Expansion: 12 z^4 - 6 g2 z^2 - 12 g3 z - g2^2/4, with the leading
    coefficient 48 - 36 = 12 for every modulus. Exact when ``inv`` holds
    rational invariants; float invariants convert to their exact binary
    values first.
    """
    g2 = Fraction(inv.g2)
    g3 = Fraction(inv.g3)
    return RationalPoly([-g2 * g2 / 4, -12 * g3, -6 * g2, 0, 12])


def cubic_factor(k2) -> RationalPoly:
    """The cubic w^3 - w^2 + (16 k^2 - 15)/3 w - (9 - 8 k^2)^2 / 27."""
    k2 = Fraction(k2)
    return RationalPoly([-((9 - 8 * k2) ** 2) / 27, (16 * k2 - 15) / 3, -1, 1])


def factorization_check(k2) -> bool:
    """Exact check that (27/4) f(w/3) = (w + 1) * cubic_factor(k2).

    Expands both sides (and the expected rescaled coefficients
    w^4 - (2/3)(9 - 8k^2) w^2 - (8/27)(8k^4 - 36k^2 + 27) w
    - (1/27)(9 - 8k^2)^2) in rational arithmetic and compares all five
    coefficients; no tolerance is involved.
    """
    k2 = Fraction(k2)
    if not 0 < k2 < 1:
        raise DomainError(f"squared modulus out of range (0, 1): k^2={k2}")
    f = quartic_f(invariants_exact(k2))
    lhs = f.with_argument_scaled(Fraction(1, 3)).scaled(Fraction(27, 4))
    rescaled = RationalPoly([
        -Fraction(1, 27) * (9 - 8 * k2) ** 2,
        -Fraction(8, 27) * (8 * k2 * k2 - 36 * k2 + 27),
        -Fraction(2, 3) * (9 - 8 * k2),
        0,
        1,
    ])
    rhs = RationalPoly([1, 1]) * cubic_factor(k2)
    return lhs == rescaled and lhs == rhs


class DiscriminantPair(NamedTuple):
    formula: float
    from_coefficients: float


def cubic_discriminant(k: Modulus) -> DiscriminantPair:
    """Discriminant of the cubic factor, by two independent routes.

    ``formula`` is -(4096/27) k^4 (1 - k^2)^2; ``from_coefficients`` is
    the textbook discriminant 18abc - 4a^3c + a^2b^2 - 4b^3 - 27c^2 of
    the monic cubic. Both routes run in exact rational arithmetic from
    the binary value of ``k`` (the coefficient route loses ~5 digits to
    cancellation in floats near k = 0.1) and round once at the end.
    Negative for every k in (0, 1): the cubic has just one real zero.
    """
    _check_modulus(k)
    k2 = Fraction(k) ** 2
    a = Fraction(-1)
    b = (16 * k2 - 15) / 3
    c = -((9 - 8 * k2) ** 2) / 27
    coeff_route = (18 * a * b * c - 4 * a ** 3 * c + a * a * b * b
                   - 4 * b ** 3 - 27 * c * c)
    formula = -Fraction(4096, 27) * k2 ** 2 * (1 - k2) ** 2
    return DiscriminantPair(float(formula), float(coeff_route))


@dataclass(frozen=True)
class RootClassification:
    """The four roots of the quartic f: -1/3, a positive real, a conjugate pair."""

    minus_one_third: float
    real_positive: float
    complex_pair: tuple

    @property
    def roots(self):
        return (self.minus_one_third, self.real_positive) + self.complex_pair


def _real_cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def classify_quartic_roots(k: Modulus) -> RootClassification:
    """Roots of f for modulus ``k``: exactly {-1/3, r+ > 0, lam, conj(lam)}.

    The root -1/3 is deflated exactly through the factorization; the
    cubic factor (in w = 3z) is solved in closed form by Cardano's
    method, its negative discriminant guaranteeing one real root and a
    conjugate pair. Raises ClassificationError if the computed pattern
    ever deviates, which would signal an implementation bug.
    """
    _check_modulus(k)
    k2 = Fraction(k) ** 2
    cubic = cubic_factor(k2)
    c0, c1, c2, _ = cubic.coefficients  # w^3 + c2 w^2 + c1 w + c0 with c2 = -1
    # depressed form v^3 + p v + q, w = v - c2/3
    p = float(c1 - c2 * c2 / 3)
    q = float(Fraction(2, 27) * c2 ** 3 - c2 * c1 / 3 + c0)
    cardano = (q / 2.0) ** 2 + (p / 3.0) ** 3
    if cardano <= 0.0:
        raise ClassificationError(
            f"cubic factor at k={k!r} lost its single-real-root pattern")
    root_term = math.sqrt(cardano)
    v_real = _real_cbrt(-q / 2.0 + root_term) + _real_cbrt(-q / 2.0 - root_term)
    w_real = v_real + 1.0 / 3.0
    for _ in range(2):  # Newton polish on the cubic in w
        value = cubic(w_real)
        w_real -= value / (3.0 * w_real * w_real - 2.0 * w_real + float(c1))
    v_real = w_real - 1.0 / 3.0
    # deflating v_real from v^3 + p v + q leaves v^2 + v_real v + (v_real^2 + p)
    pair_disc = 3.0 * v_real * v_real + 4.0 * p
    if pair_disc <= 0.0:
        raise ClassificationError(
            f"conjugate pair at k={k!r} collapsed onto the real axis")
    v_pair = complex(-v_real / 2.0, math.sqrt(pair_disc) / 2.0)
    w_pair = v_pair + 1.0 / 3.0
    if not w_real > 0.0:
        raise ClassificationError(
            f"the real cubic root at k={k!r} is not positive: {w_real!r}")
    return RootClassification(
        minus_one_third=-1.0 / 3.0,
        real_positive=w_real / 3.0,
        complex_pair=(w_pair / 3.0, w_pair.conjugate() / 3.0),
    )


_REALNESS_TOL = 1e-9


def certify_pole(ctx: ShenContext) -> float:
    """|wp((2/3) i K') + 1/3|; certification passes when below 1e-10.

    Also verifies the structural facts the location argument rests on:
    wp((2/3) i K') is real and negative (wp < 0 along (0, iK')), and the
    even mirror -(2/3) i K' carries the same value, so d has its second
    pole there. Violations raise ClassificationError.
    """
    a = (2.0 / 3.0) * 1.0j * ctx.lat.K_prime
    value = wp(a, ctx.inv, ctx.lat)
    if abs(value.imag) > _REALNESS_TOL or not value.real < 0.0:
        raise ClassificationError(
            f"wp((2/3) i K') = {value!r} is not real negative at k={ctx.k!r}")
    mirror = wp(-a, ctx.inv, ctx.lat)
    if abs(mirror - value) > _REALNESS_TOL:
        raise ClassificationError(
            f"evenness violated at the mirror pole for k={ctx.k!r}")
    return abs(value + 1.0 / 3.0)
