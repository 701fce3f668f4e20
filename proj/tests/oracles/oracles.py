"""High-precision reference values frozen into the C++ tests.

Run with `python3 tests/oracles/oracles.py`. Every value here is computed
from the defining formulas with mpmath at 50 digits, independently of the
library code paths that the tests exercise.
"""
from mpmath import mp, mpf, mpc, atanh, tanh, atan, tan, coth, cot, sin, cos, sqrt, log, pi, conj

mp.dps = 50


def h_translate(c, z):
    return (z + c) / (1 + conj(c) * z)


def h_dilate_origin(k, z):
    r = abs(z)
    return z if r == 0 else tanh(k * atanh(r)) * z / r


def s_translate(c, z):
    return (z + c) / (1 - conj(c) * z)


def s_dilate_origin(k, z):
    r = abs(z)
    return z if r == 0 else tan(k * atan(r)) * z / r


def show(name, v):
    if isinstance(v, mpc):
        print(f"{name}: {mp.nstr(v.real, 17)} {mp.nstr(v.imag, 17)}")
    else:
        print(f"{name}: {mp.nstr(v, 17)}")


show("atanh(0.5)", atanh(mpf("0.5")))
show("h_dist(0,0.5)", 2 * atanh(mpf("0.5")))

c, k, z = mpc("0.2"), mpf(2), mpc("0.5")
show("h_dilate c=0.2 k=2 z=0.5", h_translate(c, h_dilate_origin(k, h_translate(-c, z))))

c, k, z = mpc("0.2"), mpf("0.9"), mpc("1.5")
show("s_dilate c=0.2 k=0.9 z=1.5", s_translate(c, s_dilate_origin(k, s_translate(-c, z))))

# Generic radial comparison used by closed-form tests.
g1, g2, t1, t2, lam = mpf("0.8"), mpf("1.3"), mpf("0.2"), mpf("1.9"), mpf("0.7")
den1 = coth(2 * g1) * sin(t2 - lam) + coth(2 * g2) * sin(lam - t1)
eq8 = atanh(sin(t2 - t1) / den1) / 2
show("h_r_closed_form s=0.7", mpf("0.7") * eq8)
s = mpf("0.7")
den = coth(2 * g1 * s) * sin(t2 - lam) + coth(2 * g2 * s) * sin(lam - t1)
show("h_rho_closed_form s=0.7", atanh(sin(t2 - t1) / den) / 2)

sg1, sg2 = mpf("0.3"), mpf("0.5")
den1 = cot(2 * sg1) * sin(t2 - lam) + cot(2 * sg2) * sin(lam - t1)
eq15 = atan(sin(t2 - t1) / den1) / 2
s = mpf("1.2")
show("s_r_closed_form s=1.2", s * eq15)
den = cot(2 * sg1 * s) * sin(t2 - lam) + cot(2 * sg2 * s) * sin(lam - t1)
show("s_rho_closed_form s=1.2", atan(sin(t2 - t1) / den) / 2)

k1, k2, u1, u2 = mpf("0.7"), mpf("0.6"), mpf(1), mpf(2)
x = mpf("0.5")
show("f_hyp(0.5)", atanh(1 / (k1 * coth(u1 * x) + k2 * coth(u2 * x))))
x = mpf("0.3")
show("f_sph(0.3)", atan(1 / (k1 * cot(u1 * x) + k2 * cot(u2 * x))))

# Spherical ray/arc example: a = (-0.75, -0.75), lambda = pi/4.
w = mpf("-0.75") * sqrt(2)
show("s_ray rho", sqrt(w * w + 1) + w)
w = mpf("1.25") * sqrt(2)
show("h_ray rho", w - sqrt(w * w - 1))
