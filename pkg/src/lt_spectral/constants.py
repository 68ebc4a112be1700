"""Constant bounds for eigenvalue-moment inequalities in one dimension.

Everything here is a function of the moment exponent gamma in [1/2, 3/2]
(equivalently eta = gamma - 1/2 in [0, 1]):

* classical_constant      -- semiclassical phase-space value
* lt_constant             -- the original Lieb-Thirring bound
* ggm_constant            -- Glaser-Grosse-Martin bound (minimized over m)
* one_state_constant      -- sharp single-bound-state lower bound
* star_constant           -- monotonicity bound 4*varsigma(3)/3 * classical
* char_interp_constant    -- complex-interpolation bound (characteristic
                             function potentials only)
* doublestar_constant     -- real-interpolation (K-functional) bound
* crossover               -- gamma above which doublestar beats star
* density_constants       -- conversions to kinetic-energy density constants

The building blocks are the function x*tanh(x), its inverse, the
K-functional weight integral Theta(eta, p0, p1), and the discrete
factor M(eta).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

from .numerics import (DEFAULT_TOL, Tolerance, find_root, gamma_fn,
                       integrate_de, minimize_1d)

#: lower limit of u in the closed-form Theta(eta, 1/2, 3/2) integrals
U0 = math.sqrt(2.0 / (2.0 + math.sqrt(3.0)))


def theta_fn(x: float) -> float:
    """x * tanh(x); strictly increasing on x >= 0."""
    if x < 0:
        raise ValueError("theta_fn requires x >= 0")
    return x * math.tanh(x)


def varsigma(y: float, tol: Tolerance = Tolerance(abs=1e-12, rel=1e-12)) -> float:
    """Inverse of x*tanh(x): the unique x >= 0 with x*tanh(x) = y."""
    if y < 0:
        raise ValueError("varsigma requires y >= 0")
    if y == 0.0:
        return 0.0
    # x*tanh(x) >= x - 1, so the root lies in [0, y + 2]
    return find_root(lambda x: x * math.tanh(x) - y, 0.0, y + 2.0, tol)


VARSIGMA_3 = varsigma(3.0)


def classical_constant(gamma: float) -> float:
    """Gamma(g+1) / (2 sqrt(pi) Gamma(g+3/2))."""
    if gamma < 0:
        raise ValueError("gamma must be >= 0")
    return gamma_fn(gamma + 1.0) / (2.0 * math.sqrt(math.pi)
                                    * gamma_fn(gamma + 1.5))


def lt_constant(gamma: float) -> float:
    """gamma^{gamma+1} / (sqrt(2) (gamma-1/2)^{gamma+1/2} (gamma+1/2))."""
    if gamma <= 0.5:
        raise ValueError("lt_constant diverges for gamma <= 1/2")
    return (gamma ** (gamma + 1.0)
            / (math.sqrt(2.0) * (gamma - 0.5) ** (gamma + 0.5)
               * (gamma + 0.5)))


def _ggm_integrand(m: float, gamma: float) -> float:
    return ((m - 1.0) ** (m - 1.0) * gamma_fn(2.0 * m)
            * gamma ** (gamma + 1.0) * gamma_fn(gamma + 0.5 - m)
            / (2.0 ** (2.0 * m - 1.0) * m ** (m - 1.0) * gamma_fn(m)
               * gamma_fn(gamma + 1.5) * (m - 0.5) ** (m - 0.5)
               * (gamma + 0.5 - m) ** (gamma + 0.5 - m)))


def ggm_constant(gamma: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """Glaser-Grosse-Martin bound: minimum over m in (1, min(3/2, g+1/2))."""
    hi = min(1.5, gamma + 0.5)
    if hi <= 1.0:
        raise ValueError("feasible m-range is empty for gamma <= 1/2")
    margin = 1e-6  # stay clear of the Gamma pole at m = gamma + 1/2
    _, val = minimize_1d(lambda m: _ggm_integrand(m, gamma),
                         1.0 + margin, hi - margin, tol)
    return val


def one_state_constant(gamma: float) -> float:
    """Sharp constant for a single bound state:
    2 L^cl (gamma-1/2)^{gamma-1/2} / (gamma+1/2)^{gamma-1/2}, with the
    gamma = 1/2 limit taken as 0^0 = 1 (value 1/2)."""
    if gamma < 0.5:
        raise ValueError("gamma must be >= 1/2")
    if gamma == 0.5:
        return 2.0 * classical_constant(0.5)
    return (2.0 * classical_constant(gamma)
            * ((gamma - 0.5) / (gamma + 0.5)) ** (gamma - 0.5))


def star_constant(gamma: float) -> float:
    """4 varsigma(3)/3 times the classical constant."""
    if not 0.5 <= gamma <= 1.5:
        raise ValueError("gamma must lie in [1/2, 3/2]")
    return 4.0 * VARSIGMA_3 / 3.0 * classical_constant(gamma)


def char_interp_constant(gamma: float) -> float:
    """(varsigma(3)/3)^{3/2-gamma} (3/16)^{gamma-1/2}; valid for potentials
    proportional to characteristic functions."""
    if not 0.5 <= gamma <= 1.5:
        raise ValueError("gamma must lie in [1/2, 3/2]")
    return ((VARSIGMA_3 / 3.0) ** (1.5 - gamma)
            * (3.0 / 16.0) ** (gamma - 0.5))


@dataclass(frozen=True)
class ThetaParams:
    """Parameters of the K-functional weight Theta(eta, p0, p1)."""

    eta: float
    p0: float
    p1: float

    def __post_init__(self):
        if not 0.0 < self.eta < 1.0:
            raise ValueError("eta must lie in (0, 1)")
        if self.p0 <= 0 or self.p1 <= 0 or self.p0 == self.p1:
            raise ValueError("need p0, p1 > 0 and p0 != p1")


def endpoint_integral_strong(eta: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """int_{u0}^1 u (1-u)^{(eta-2)/2} (1+u)^{(eta-1)/2} du.

    Substituted v = 1 - u so the strong endpoint singularity sits at v = 0,
    where the quadrature nodes carry full precision.
    """
    def f(v):
        return (1.0 - v) * v ** ((eta - 2.0) / 2.0) \
            * (2.0 - v) ** ((eta - 1.0) / 2.0)
    return integrate_de(f, 0.0, 1.0 - U0, tol)


def endpoint_integral_mild(eta: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """int_{u0}^1 u (1-u)^{eta/2} (1+u)^{(eta-3)/2} du."""
    def f(v):
        return (1.0 - v) * v ** (eta / 2.0) * (2.0 - v) ** ((eta - 3.0) / 2.0)
    return integrate_de(f, 0.0, 1.0 - U0, tol)


#: crossover abscissa where the inner infimum leaves the diagonal branch
T_STAR = 2.0 / 3.0 * math.sqrt(1.0 + 2.0 / math.sqrt(3.0))


def _theta_half_threehalf_closed(eta: float, tol: Tolerance) -> float:
    # Exact evaluation of the defining double integral for (p0, p1) =
    # (1/2, 3/2).  The inner infimum equals t for t <= T_STAR; beyond that
    # it follows the interior critical branch, which parametrized by
    # u = 1 - 2y reduces the outer integral to a single u-integral:
    #   (sqrt(2)/3) (3/2)^eta int_{u0}^1 u (2+u) (1-u)^{(eta-2)/2}
    #                                 (1+u)^{(eta-3)/2} du.
    # (This is a corrected coefficient pattern; it reproduces the defining
    # integral to quadrature accuracy for all eta in (0, 1).)
    first = T_STAR ** (1.0 - eta) / (1.0 - eta)

    def f(v):
        return (1.0 - v) * (3.0 - v) * v ** ((eta - 2.0) / 2.0) \
            * (2.0 - v) ** ((eta - 3.0) / 2.0)

    second = (math.sqrt(2.0) / 3.0 * 1.5 ** eta
              * integrate_de(f, 0.0, 1.0 - U0, tol))
    return first + second


def _theta_numeric(params: ThetaParams, tol: Tolerance) -> float:
    """Direct evaluation of int_0^inf t^{-eta-1} inf_{y0+y1=1}(...) dt."""
    eta, p0, p1 = params.eta, params.p0, params.p1
    inner_tol = Tolerance(abs=1e-12, rel=1e-12, max_iter=500)

    def inner(t):
        # infimum over real splittings is attained with y1 in [0, 1]
        def g(y1):
            return (1.0 - y1) ** p0 + t * y1 ** p1
        _, val = minimize_1d(g, 0.0, 1.0, inner_tol)
        return min(val, g(0.0), g(1.0))

    # substitute t = e^s; integrand decays like e^{(1-eta)s} for s -> -inf
    # and e^{-eta s} for s -> +inf
    def h(s):
        if s > 50.0:
            # inner(t) -> 1 from below with defect O(t^{-1/(p1-1)})
            return math.exp(-eta * s)
        if s < -50.0:
            # inner(t) -> t (take y1 = 1)
            return math.exp((1.0 - eta) * s)
        t = math.exp(s)
        return math.exp(-eta * s) * inner(t)

    return integrate_de(h, -math.inf, 0.0, tol) \
        + integrate_de(h, 0.0, math.inf, tol)


def theta_weight(params: ThetaParams, mode: str = "closed",
                 tol: Tolerance = DEFAULT_TOL) -> float:
    """Theta(eta, p0, p1): the q = 1 K-functional weight.

    mode "closed" uses the explicit formulas available for
    (p0, p1) = (1, 2) and (1/2, 3/2); mode "numeric" evaluates the defining
    double integral (any positive p0 != p1).
    """
    if mode == "numeric":
        return _theta_numeric(params, tol)
    if mode != "closed":
        raise ValueError("mode must be 'closed' or 'numeric'")
    eta = params.eta
    if (params.p0, params.p1) == (1.0, 2.0):
        return 2.0 ** eta / (eta * (1.0 - eta) * (1.0 + eta))
    if (params.p0, params.p1) == (0.5, 1.5):
        return _theta_half_threehalf_closed(eta, tol)
    raise ValueError("closed form known only for (1,2) and (1/2,3/2)")


def m_factor(eta: float, window: int = 64) -> tuple[float, float]:
    """Minimum of (1+N)^{1-eta} (1+1/N)^{eta} over N in {k, 1/k: k <= window}.

    Returns (minimum, argmin N).  The objective is eventually increasing in
    k and in 1/k, so a finite window suffices; the boundary is asserted.
    """
    if not 0.0 < eta < 1.0:
        raise ValueError("eta must lie in (0, 1)")

    def obj(n):
        return (1.0 + n) ** (1.0 - eta) * (1.0 + 1.0 / n) ** eta

    while window <= 2**20:
        candidates = [float(k) for k in range(1, window + 1)]
        candidates += [1.0 / k for k in range(2, window + 1)]
        best_n = min(candidates, key=obj)
        if best_n not in (float(window), 1.0 / window):
            return obj(best_n), best_n
        window *= 2  # argmin is near max(eta, 1-eta)/min(eta, 1-eta)
    raise ValueError("M(eta) minimum not bracketed by any finite window")


def c_factor(eta: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """C(eta) = Theta(eta,1,2)/Theta(eta,1/2,3/2) * M(eta)
    / sqrt(eta^eta (1-eta)^{1-eta})."""
    th12 = theta_weight(ThetaParams(eta, 1.0, 2.0), "closed", tol)
    th_half = theta_weight(ThetaParams(eta, 0.5, 1.5), "closed", tol)
    m, _ = m_factor(eta)
    return th12 / th_half * m / math.sqrt(eta**eta * (1.0 - eta) ** (1.0 - eta))


def doublestar_constant(gamma: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """Real-interpolation bound C(eta) (varsigma(3)/3)^{1-eta} (3/16)^eta,
    gamma = 1/2 + eta."""
    if not 0.5 < gamma < 1.5:
        raise ValueError("gamma must lie in (1/2, 3/2)")
    eta = gamma - 0.5
    return (c_factor(eta, tol) * (VARSIGMA_3 / 3.0) ** (1.0 - eta)
            * (3.0 / 16.0) ** eta)


def crossover(tol: Tolerance = Tolerance(abs=1e-6, rel=1e-6)) -> float:
    """gamma in (1.0, 1.3) where the doublestar and star bounds cross."""
    def diff(g):
        return doublestar_constant(g) - star_constant(g)
    return find_root(diff, 1.0, 1.3, tol)


def density_constants(L_half: float | None = None,
                      L_one: float | None = None) -> tuple[float, float]:
    """Kinetic-energy density constants from moment bounds.

    Returns (K_32 lower bound, K_11 lower bound) given upper bounds L_half
    on the gamma = 1/2 constant and L_one on the gamma = 1 constant.
    Defaults: varsigma(3)/3 and the star bound at gamma = 1.
    """
    if L_half is None:
        L_half = VARSIGMA_3 / 3.0
    if L_one is None:
        L_one = star_constant(1.0)
    if L_half <= 0 or L_one <= 0:
        raise ValueError("moment constants must be positive")
    k32 = 4.0 / (27.0 * L_one**2)
    k11 = 1.0 / (2.0 * L_half)
    return k32, k11


@dataclass(frozen=True)
class ConstantsRow:
    """All implemented constant bounds at a single gamma."""

    gamma: float
    L_cl: float
    L_LT: float | None
    L_GGM: float | None
    L_one: float
    L_star: float
    L_char: float | None
    L_dstar: float | None

    @property
    def eta(self) -> float:
        return self.gamma - 0.5

    @property
    def L_best(self) -> float:
        vals = [self.L_star]
        if self.L_dstar is not None:
            vals.append(self.L_dstar)
        return min(vals)


def constants_row(gamma: float, tol: Tolerance = DEFAULT_TOL) -> ConstantsRow:
    """Evaluate every bound defined at this gamma (None where undefined)."""
    if not 0.5 <= gamma <= 1.5:
        raise ValueError("gamma must lie in [1/2, 3/2]")
    interior = 0.5 < gamma < 1.5
    return ConstantsRow(
        gamma=gamma,
        L_cl=classical_constant(gamma),
        L_LT=lt_constant(gamma) if gamma > 0.5 else None,
        L_GGM=ggm_constant(gamma, tol) if gamma > 0.5 else None,
        L_one=one_state_constant(gamma),
        L_star=star_constant(gamma),
        L_char=char_interp_constant(gamma) if interior else None,
        L_dstar=doublestar_constant(gamma, tol) if interior else None,
    )


CSV_HEADER = ["gamma", "L_cl", "L_LT", "L_GGM", "L_one", "L_star",
              "L_char", "L_dstar"]


def rows_to_csv(rows, extra_best: bool = False) -> str:
    """Serialize ConstantsRow records; undefined entries are left empty."""
    buf = io.StringIO()
    header = list(CSV_HEADER) + (["L_best"] if extra_best else [])
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for r in rows:
        rec = [r.gamma, r.L_cl, r.L_LT, r.L_GGM, r.L_one, r.L_star,
               r.L_char, r.L_dstar]
        if extra_best:
            rec.append(r.L_best)
        writer.writerow(["" if v is None else f"{v:.15g}" for v in rec])
    return buf.getvalue()
