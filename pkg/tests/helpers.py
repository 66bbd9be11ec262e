"""Independent oracles used by the test suite.

Everything here deliberately avoids the package's own evaluation paths:
hypergeometric values come from scipy's hyp2f1, integrals from scipy's
QUADPACK or mpmath's tanh-sinh rule, wp values from the classical
Jacobi-sn representation in mpmath, and periods from Carlson symmetric
integrals. The package must agree with these, not the other way around.
"""

import math
import warnings
from functools import lru_cache

import mpmath as mp
from scipy import integrate as scipy_integrate
from scipy.special import elliprf, hyp2f1

mp.mp.dps = 30


def _quad(f, a, b, epsabs):
    # QUADPACK warns about roundoff when pushed near machine accuracy;
    # the returned error estimate is asserted by the callers instead
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy_integrate.IntegrationWarning)
        return scipy_integrate.quad(f, a, b, epsabs=epsabs, epsrel=epsabs,
                                    limit=200)


def hyp_oracle(x):
    """F(1/3, 2/3; 1/2; x) via scipy."""
    return float(hyp2f1(1.0 / 3.0, 2.0 / 3.0, 0.5, x))


def u_oracle(k, phi):
    """The phase integral via scipy QUADPACK on the theta form."""
    value, err = _quad(lambda th: hyp_oracle(k * k * math.sin(th) ** 2),
                       0.0, phi, epsabs=1e-14)
    assert err < 1e-12
    return value


def u_oracle_t_form(k, phi):
    """The same integral in its original t form, singular endpoint and all."""
    value, err = _quad(lambda t: hyp_oracle(k * k * t * t) / math.sqrt(1.0 - t * t),
                       0.0, math.sin(phi), epsabs=1e-13)
    assert err < 1e-10
    return value


@lru_cache(maxsize=16)
def mp_roots(g2, g3):
    """Roots of 4 t^3 - g2 t - g3 at 30 digits, descending."""
    roots = mp.polyroots([4, 0, -g2, -g3], maxsteps=100, extraprec=60)
    return tuple(sorted((mp.re(r) for r in roots), reverse=True))


def periods_carlson(g2, g3):
    """(K, K') from Carlson R_F on the root differences."""
    e1, e2, e3 = (float(r) for r in mp_roots(g2, g3))
    return (float(elliprf(0.0, e1 - e2, e1 - e3)),
            float(elliprf(0.0, e1 - e3, e2 - e3)))


def periods_raw_quadrature(g2, g3):
    """(K, K') by tanh-sinh quadrature of the raw period integrals."""
    e1, e2, e3 = mp_roots(g2, g3)
    # near the endpoint roots the cubic can round slightly negative; the
    # integrals are real, so keep the real part
    big_k = mp.quad(lambda t: mp.re(1 / mp.sqrt(mp.mpc(4 * t ** 3 - g2 * t - g3))),
                    [e1, e1 + 2, mp.inf])
    big_kp = mp.quad(lambda t: mp.re(1 / mp.sqrt(mp.mpc(-(4 * t ** 3 - g2 * t - g3)))),
                     [mp.ninf, e3 - 2, e3])
    return float(mp.re(big_k)), float(mp.re(big_kp))


def wp_oracle_factory(g2, g3):
    """wp via the Jacobi representation e3 + (e1 - e3) / sn^2(z sqrt(e1 - e3))."""
    e1, e2, e3 = mp_roots(g2, g3)
    m = (e2 - e3) / (e1 - e3)
    scale = mp.sqrt(e1 - e3)

    def oracle(z):
        sn = mp.ellipfun("sn", mp.mpc(z) * scale, m)
        return complex(e3 + (e1 - e3) / sn ** 2)

    return oracle
