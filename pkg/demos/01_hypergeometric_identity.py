"""The hypergeometric function behind everything: F(1/3, 2/3; 1/2; x).

Demonstrates the power-series evaluator, the trigonometric closed form
F(1/3, 2/3; 1/2; sin^2 z) = cos(z/3)/cos(z), and the triplication
formula that links them.
"""

import math

import numpy as np

from shenell import f_closed, f_series, triplication_residual

print("F(1/3, 2/3; 1/2; x) by series vs closed form")
print(f"{'x':>10} {'series':>22} {'cos(z/3)/cos z':>22} {'diff':>10}")
for z in (0.0, 0.3, math.pi / 6, 0.9, 1.3):
    x = math.sin(z) ** 2
    a = f_series(x)
    b = f_closed(z)
    print(f"{x:10.6f} {a:22.16f} {b:22.16f} {abs(a - b):10.2e}")

print()
print("x = 1/2 has the exact value (1 + sqrt 3)/2:")
print(f"  f_series(0.5) = {f_series(0.5):.16f}")
print(f"  (1+sqrt 3)/2  = {(1 + math.sqrt(3)) / 2:.16f}")

print()
print("triplication residual 4 cos^3(z/3) - 3 cos(z/3) - cos z over [-10, 10]:")
worst = max(abs(triplication_residual(float(z))) for z in np.linspace(-10, 10, 2001))
print(f"  worst |residual| = {worst:.2e}")
