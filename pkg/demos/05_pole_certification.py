"""Certifying the pole location of d at (2/3) i K'.

d blows up exactly where wp = -1/3. The duplication formula pins
b = wp((2/3) iK') as a zero of an explicit quartic f; exact rational
arithmetic factors (27/4) f(w/3) = (w + 1)(cubic), the cubic's negative
discriminant leaves one positive real root and a conjugate pair, and the
sign of wp on (0, iK') then forces b = -1/3.
"""

from fractions import Fraction

from shenell import (ShenContext, certify_pole, classify_quartic_roots,
                     cubic_discriminant, cubic_factor, factorization_check,
                     invariants_exact, quartic_f)

print("exact factorization (27/4) f(w/3) = (w + 1) * cubic, rational k^2:")
for k2 in (Fraction(1, 4), Fraction(1, 2), Fraction(7, 9), Fraction(123, 1000)):
    ok = factorization_check(k2)
    cubic = cubic_factor(k2)
    print(f"  k^2 = {str(k2):>9}: factorizes = {ok};  cubic = w^3 - w^2 "
          f"+ ({cubic.coefficients[1]}) w + ({cubic.coefficients[0]})")
print()

print("f itself always has the root -1/3, exactly:")
f = quartic_f(invariants_exact(Fraction(1, 4)))
print(f"  k^2 = 1/4: f(-1/3) = {f(Fraction(-1, 3))}")
print()

print("cubic discriminant -(4096/27) k^4 (1-k^2)^2 vs coefficient route:")
for k in (0.1, 0.5, 0.9):
    formula, coeffs = cubic_discriminant(k)
    print(f"  k = {k}: {formula:.12e}  vs  {coeffs:.12e}")
print("  (negative for all k: one real zero, one conjugate pair)")
print()

print("quartic root classification:")
for k in (0.1, 0.5, 0.99):
    cls = classify_quartic_roots(k)
    lam = cls.complex_pair[0]
    print(f"  k = {k:4}: -1/3, positive root {cls.real_positive:.10f}, "
          f"pair {lam.real:.6f} +- {abs(lam.imag):.6f} i")
print()

print("numerical certification |wp((2/3) iK') + 1/3| across the k-grid:")
for i in range(1, 10):
    k = round(0.1 * i, 1)
    residual = certify_pole(ShenContext.from_modulus(k))
    print(f"  k = {k}: residual = {residual:.2e}")
