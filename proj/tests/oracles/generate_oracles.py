"""Reference values frozen into the unit tests, computed with mpmath at 50 digits.

Each value comes from a route that shares no code with the C++ library: mpmath's own
zeta/gamma/zetazero, tanh-sinh quadrature of the defining integrals, and direct series.
Run: python3 generate_oracles.py
"""
from mpmath import mp, mpf, mpc, sinh, cosh, sin, cos, exp, pi, zeta, gamma, quad, zetazero, nsum, inf, conj, re, im, fabs

mp.dps = 50


def xi_s(s):
    return s * (s - 1) / 2 * pi ** (-s / 2) * gamma(s / 2) * zeta(s)


def Xi(t):
    return xi_s(mpf(1) / 2 + 1j * t)


def phi(x):
    # Normalized so that Xi(t) = 2 * integral_0^inf phi(x) cos(t x) dx.
    a = pi * exp(2 * x)
    return 2 * pi * exp(5 * x / 2) * nsum(lambda n: (2 * a * n**2 - 3) * n**2 * exp(-(n**2) * a), [1, inf])


def v(y, t, b, eps):
    u = y - b / 2
    return cosh(t * u) + t * u**2 / (2 * eps)


def int_v_sq(t, b, eps):
    return quad(lambda y: fabs(v(y, t, b, eps)) ** 2, [0, b / 2, b])


def h(t, b, eps):
    x = b / 2
    return int_v_sq(t, b, eps) - fabs(t) ** 2 * x**5 / (10 * eps**2)


def F(t, b):
    return quad(lambda y: fabs(cosh(t * (y - b / 2))) ** 2, [0, b / 2, b])


def show(name, value):
    if isinstance(value, mpc):
        print(f"{name}: {mp.nstr(value.real, 30)} {mp.nstr(value.imag, 30)}")
    else:
        print(f"{name}: {mp.nstr(value, 30)}")


show("sh(1+0.5i)", sinh(mpc(1, 0.5)))
show("int_0^2 ch(3(y-1))", quad(lambda y: cosh(3 * (y - 1)), [0, 2]))
show("zeta(2)", zeta(2))
show("zeta(0.5)", zeta(0.5))
show("gamma(0.25)", gamma(0.25))
show("xi(0.5)", xi_s(mpf(0.5)))
for t in [mpf(0), mpf(5), mpf(10), mpf("14.134725"), mpf(20), mpf(30)]:
    show(f"Xi({t})", Xi(t))
for t in [mpc(13, 0.25), mpc(14, 0.2), mpc(25, 0.4)]:
    show(f"Xi({t})", Xi(t))
for k in (1, 2, 3):
    show(f"zero {k}", zetazero(k).imag)
show("phi(0)", phi(0))
show("phi(1)", phi(1))
show("phi(1) first term", 2 * pi * exp(mpf(5) / 2) * (2 * pi * exp(2) - 3) * exp(-pi * exp(2)))
show("2 int_0^12 phi cos(14x)", 2 * quad(lambda x: phi(x) * cos(14 * x), [0, 1, 12]))
show("v(0) t=2 b=2 eps=1", v(0, mpf(2), mpf(2), mpf(1)))
# f = Im P with P read off the boundary identity; independent of every closed form.
for (t1, t2, b, eps) in [(13, 0.25, 2, 0.1), (14.134725, 0.1, 3, 0.5), (7, -0.3, 5, 2)]:
    t = mpc(t1, t2)
    x = mpf(b) / 2
    ivv = int_v_sq(t, mpf(b), mpf(eps))
    ivp = quad(lambda y: fabs(t * sinh(t * (y - x)) + t * (y - x) / eps) ** 2, [0, x, b])
    P = -t**2 * ivv + t**2 * fabs(t) ** 2 * x**5 / (10 * eps**2) + 2 * fabs(t) ** 2 * x**3 / (3 * eps**2) - ivp
    show(f"f {t1} {t2} {b} {eps}", P.imag)
    show(f"h {t1} {t2} {b} {eps}", h(t, mpf(b), mpf(eps)))
for (t1, t2, b) in [(13, 0.25, 2), (13, 0.25, 12 * pi), (2, 0, 2)]:
    show(f"F {t1} {t2} {mp.nstr(b, 20)}", F(mpc(t1, t2), b))
# G = ε(h - F) at ε = 1.
for (t1, t2, b) in [(13, 0.25, 2), (7, 0.3, 5)]:
    t = mpc(t1, t2)
    show(f"G {t1} {t2} {b}", h(t, mpf(b), mpf(1)) - F(t, mpf(b)))
