"""Independent reference implementations used only by the tests.

Nothing here shares code paths with the library: eigenvalues come from
Prüfer-angle shooting or transcendental closed forms, reflection amplitudes
from textbook closed forms.  Agreement between these and the library is the
point of the comparisons.
"""

import math

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq


def prufer_angle(V, a, b, E, bc_left="neumann"):
    """Terminal Prüfer angle of -u'' - V u = E u shot from x = a.

    With u = r sin(theta), u' = r cos(theta) the angle obeys
    theta' = cos^2(theta) + (E + V) sin^2(theta) and increases through
    pi/2 + n*pi exactly at Neumann nodes of the solution.
    """
    def rhs(x, y):
        s, c = math.sin(y[0]), math.cos(y[0])
        return [c * c + (E + float(V.evaluate(x))) * s * s]

    theta0 = 0.5 * math.pi if bc_left == "neumann" else 0.0
    sol = solve_ivp(rhs, (a, b), [theta0], method="DOP853",
                    rtol=1e-11, atol=1e-12)
    if not sol.success:
        raise RuntimeError("shooting failed")
    return sol.y[0, -1]


def prufer_neumann_levels(V, a, b, n_max=8, e_min=None):
    """Negative Neumann eigenvalues on [a, b] by phase-function bisection."""
    if e_min is None:
        xs = np.linspace(a, b, 2001)
        e_min = -float(np.max(V.evaluate(xs))) - 1.0
    levels = []
    for n in range(n_max):
        # u'(b) = 0 at theta = pi/2 mod pi; the ground state makes no
        # interior zero, so its terminal angle is pi/2 itself
        target = 0.5 * math.pi + n * math.pi

        def f(E):
            return prufer_angle(V, a, b, E) - target

        if f(0.0) < 0.0:
            break
        levels.append(brentq(f, e_min, 0.0, xtol=1e-12))
    return levels


def square_well_line_levels(v, half_width=1.0):
    """Bound states of the centered well of depth v on the whole line.

    Even states solve q tan(q a) = kappa and odd states
    -q cot(q a) = kappa, with q^2 + kappa^2 = v and E = -kappa^2.
    """
    a = half_width
    s = math.sqrt(v)
    levels = []

    def even(q):
        return q * math.tan(q * a) - math.sqrt(v - q * q)

    def odd(q):
        return -q / math.tan(q * a) - math.sqrt(v - q * q)

    n = 0
    while n * math.pi / a < s:
        lo = n * math.pi / a + 1e-12
        hi = min((n + 0.5) * math.pi / a - 1e-12, s - 1e-12)
        if lo < hi and even(lo) * even(hi) < 0:
            q = brentq(even, lo, hi, xtol=1e-14)
            levels.append(-(v - q * q))
        n += 1
    n = 0
    while (n + 0.5) * math.pi / a < s:
        lo = (n + 0.5) * math.pi / a + 1e-12
        hi = min((n + 1) * math.pi / a - 1e-12, s - 1e-12)
        if lo < hi and odd(lo) * odd(hi) < 0:
            q = brentq(odd, lo, hi, xtol=1e-14)
            levels.append(-(v - q * q))
        n += 1
    return sorted(levels)


def square_well_reflection_sq(v, half_width, k):
    """|R(k)|^2 for the centered square well or barrier, closed form.

    For k^2 + v < 0 (tunneling through a barrier, v < 0 in the attractive
    sign convention) the oscillatory branch continues to the sinh form.
    """
    a = half_width
    q2 = k * k + v
    if q2 >= 0.0:
        w = math.sqrt(q2)
        s2 = math.sin(2.0 * w * a) ** 2
        return v * v * s2 / (4.0 * k * k * q2 + v * v * s2)
    kap2 = -q2
    s2 = math.sinh(2.0 * math.sqrt(kap2) * a) ** 2
    return v * v * s2 / (4.0 * k * k * kap2 + v * v * s2)


def poschl_teller_levels(nu, alpha=1.0):
    """Analytic spectrum -(alpha (nu - n))^2, n = 0 .. ceil(nu) - 1."""
    out = []
    n = 0
    while nu - n > 0:
        out.append(-((alpha * (nu - n)) ** 2))
        n += 1
    return sorted(out)
