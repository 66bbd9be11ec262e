"""d, s^2, c^2 and s*c as elliptic functions on the complex plane.

d continues off the real axis as 1 - (4/9) k^2 (wp + 1/3)^{-1} and is
elliptic of order two; the squares and the product s*c are elliptic with
triple poles, while s and c separately are not elliptic at all.
"""

from shenell import (ShenContext, c_squared, cubic_relation_residual, d_complex,
                     d_ode_residual, pole_order_slope, s_squared, sc_product,
                     scd_real, substitution_chain_check)

k = 0.5
ctx = ShenContext.from_modulus(k)
two_k = 2 * ctx.lat.K
two_ikp = 2j * ctx.lat.K_prime

print(f"k = {k}; periods 2K = {two_k:.10f}, 2iK' = {two_ikp:.10f}")
print()

print("on the real axis the continuation matches the phase-map branch:")
for u in (0.2, 0.7, 1.3):
    s, c, d = scd_real(k, u)
    dc = d_complex(ctx, complex(u))
    print(f"  u={u:4.1f}: |d_complex - d_real| = {abs(dc - d):.1e}"
          f"   |s^2 - sin^2 phi| = {abs(s_squared(ctx, complex(u)) - s * s):.1e}")
print()

print("identities at complex points (residuals):")
for z in (0.4 + 0.3j, -0.9 + 1.5j, 1.2 - 2.0j):
    d = d_complex(ctx, z)
    print(f"  z = {z}")
    print(f"    s^2 + c^2 - 1          = {abs(s_squared(ctx, z) + c_squared(ctx, z) - 1):.1e}")
    print(f"    cubic relation         = {cubic_relation_residual(ctx, z):.2e}")
    print(f"    d ODE residual         = {d_ode_residual(ctx, z):.2e}")
    print(f"    substitution chain     = {substitution_chain_check(ctx, z):.2e}")
    print(f"    d(z + 2K) - d(z)       = {abs(d_complex(ctx, z + two_k) - d):.1e}")
    print(f"    d(z + 2iK') - d(z)     = {abs(d_complex(ctx, z + two_ikp) - d):.1e}")
    print(f"    sc(z + 2K) - sc(z)     = {abs(sc_product(ctx, z + two_k) - sc_product(ctx, z)):.1e}")
print()

z0 = (2.0 / 3.0) * 1j * ctx.lat.K_prime
print(f"pole structure at z0 = (2/3) iK' = {z0:.6f} (log-log slopes):")
print(f"  slope of |d|   = {pole_order_slope(lambda z: d_complex(ctx, z), z0):+.4f}   (simple pole)")
print(f"  slope of |s^2| = {pole_order_slope(lambda z: s_squared(ctx, z), z0):+.4f}   (triple pole)")
print(f"  slope of |c^2| = {pole_order_slope(lambda z: c_squared(ctx, z), z0):+.4f}   (triple pole)")
print(f"  slope of |sc|  = {pole_order_slope(lambda z: sc_product(ctx, z), z0):+.4f}   (triple pole)")
