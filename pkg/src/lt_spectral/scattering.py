"""Reflection coefficients, the trace sum rule, and the transmission bound.

For a compactly supported potential the wave equation -u'' - V u = k^2 u is
propagated across the support by a real 2x2 transfer matrix (exact
piece-by-piece for piecewise-constant V, adaptive Runge-Kutta otherwise) and
matched to plane waves on both sides, giving R(k) and T(k).

The first trace identity ties the three independent pipelines together:

    int V = 4 Sigma sqrt|E_i|  +  pi^(-1) int_R ln(1 - |R(k)|^2) dk,

and the transmission bound caps the log term by the potential's positive and
negative parts:  pi^(-1) int |ln(1-|R|^2)| dk <= int V_- + (4 L - 1) int V_+.
"""

from __future__ import annotations

import cmath
import io
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.integrate import IntegrationWarning, quad, solve_ivp

from .constants import VARSIGMA_3
from .numerics import Tolerance
from .potential import (Amplified, PiecewiseConstant, Potential, Scaled,
                        SquareWell, Sum, Zero, truncation_point)
from .sturm import riesz_mean, solve_line

#: default tolerance for scattering solves and the unitarity gate
SCATTER_TOL = Tolerance(abs=1e-8, rel=1e-8)

#: default k-grid limits (geometric) for sampled reflection data
K_MIN, K_MAX, K_COUNT = 0.01, 100.0, 400

#: tail mass at which non-compact potentials are truncated
TRUNCATION_TAIL = 1e-10


class ScatteringError(Exception):
    """Unitarity or consistency of the transfer matrix failed."""


@dataclass(frozen=True)
class ScatteringData:
    """Reflection samples on a k-grid plus the log-transmission integral.

    log_integral = pi^(-1) int_R ln(1 - |R(k)|^2) dk, using the symmetry
    R(-k) = conj(R(k)) so the whole-line integral is twice the positive-k
    one.  It is computed by adaptive quadrature of the underlying solver,
    not from the grid samples.
    """

    k_grid: tuple[float, ...]
    R_values: tuple[complex, ...]
    unitarity_defects: tuple[float, ...]
    log_integral: float

    def __post_init__(self):
        if any(k2 <= k1 for k1, k2 in zip(self.k_grid, self.k_grid[1:])):
            raise ValueError("k_grid must be strictly increasing")
        if any(abs(r) > 1.0 + 1e-9 for r in self.R_values):
            raise ValueError("unitarity violated: |R| > 1")
        if self.log_integral > 1e-12:
            raise ValueError("log integral must be <= 0")

    def __len__(self):
        return len(self.k_grid)

    def max_reflection(self) -> float:
        return max((abs(r) for r in self.R_values), default=0.0)

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("k,re_R,im_R,abs_R2,unitarity_defect\n")
        for k, r, d in zip(self.k_grid, self.R_values,
                           self.unitarity_defects):
            buf.write(f"{k:.15g},{r.real:.15g},{r.imag:.15g},"
                      f"{abs(r) ** 2:.15g},{d:.15g}\n")
        return buf.getvalue()


def default_k_grid() -> np.ndarray:
    return np.geomspace(K_MIN, K_MAX, K_COUNT)


def _scatter_box(V: Potential) -> float:
    lo, hi = V.support()
    if math.isfinite(lo) and math.isfinite(hi):
        return max(abs(lo), abs(hi), 1.0)
    return truncation_point(V, TRUNCATION_TAIL, x_min=10.0)


def _constant_pieces(V: Potential):
    """(x0, x1, value) pieces when V is piecewise constant, else None."""
    if isinstance(V, Zero):
        return []
    if isinstance(V, SquareWell):
        return [(V.a, V.b, V.v)]
    if isinstance(V, PiecewiseConstant):
        return [(float(a), float(b), float(v)) for a, b, v in
                zip(V.breakpoints[:-1], V.breakpoints[1:], V.values)]
    if isinstance(V, Amplified):
        inner = _constant_pieces(V.inner)
        if inner is None:
            return None
        return [(a, b, V.c * v) for a, b, v in inner]
    if isinstance(V, Scaled):
        inner = _constant_pieces(V.inner)
        if inner is None:
            return None
        return [(a / V.alpha, b / V.alpha, V.alpha**2 * v)
                for a, b, v in inner]
    if isinstance(V, Sum):
        parts = [_constant_pieces(t) for t in V.terms]
        if any(p is None for p in parts):
            return None
        edges = sorted({e for p in parts for a, b, _ in p for e in (a, b)})
        out = []
        for a, b in zip(edges[:-1], edges[1:]):
            mid = 0.5 * (a + b)
            val = sum(v for p in parts for x0, x1, v in p if x0 <= mid <= x1)
            out.append((a, b, val))
        return out
    return None


def _piece_matrix(d: float, q: float) -> np.ndarray:
    """Propagator of u'' = -q u over a step of length d, acting on (u, u')."""
    if q > 0.0:
        w = math.sqrt(q)
        c, s = math.cos(w * d), math.sin(w * d)
        return np.array([[c, s / w], [-w * s, c]])
    if q < 0.0:
        m = math.sqrt(-q)
        c, s = math.cosh(m * d), math.sinh(m * d)
        return np.array([[c, s / m], [m * s, c]])
    return np.array([[1.0, d], [0.0, 1.0]])


def _transfer_exact(pieces, X: float, k: float) -> np.ndarray:
    edges = [-X]
    for a, b, _ in pieces:
        for e in (a, b):
            if -X < e < X:
                edges.append(e)
    edges.append(X)
    edges = sorted(set(edges))
    M = np.eye(2)
    for a, b in zip(edges[:-1], edges[1:]):
        mid = 0.5 * (a + b)
        v = sum(val for x0, x1, val in pieces if x0 <= mid <= x1)
        M = _piece_matrix(b - a, k * k + v) @ M
    return M


def _transfer_ode(V: Potential, X: float, k: float,
                  tol: Tolerance) -> np.ndarray:
    def rhs(x, y):
        q = k * k + float(V.evaluate(x))
        return [y[1], -q * y[0], y[3], -q * y[2]]

    sol = solve_ivp(rhs, (-X, X), [1.0, 0.0, 0.0, 1.0], method="DOP853",
                    rtol=max(tol.rel, 1e-12),
                    atol=max(tol.abs * 1e-2, 1e-13))
    if not sol.success:
        raise ScatteringError(f"wave propagation failed at k={k}")
    y = sol.y[:, -1]
    return np.array([[y[0], y[2]], [y[1], y[3]]])


def _reflection_at(V, X, k, pieces, tol):
    """(R, T, unitarity_defect) at one positive wavenumber."""
    if k <= 0.0:
        raise ValueError("wavenumbers must be positive")
    if pieces is not None:
        M = _transfer_exact(pieces, X, k)
    else:
        M = _transfer_ode(V, X, k, tol)
    det_err = abs(M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0] - 1.0)
    if det_err > 100.0 * tol.abs:
        raise ScatteringError(
            f"transfer matrix determinant drifted by {det_err:.2e} at k={k}")
    ik = 1j * k
    em, ep = cmath.exp(-ik * X), cmath.exp(ik * X)
    # columns of W(x) are the plane waves e^{ikx}, e^{-ikx} as (u, u') data
    Wm = np.array([[em, ep], [ik * em, -ik * ep]])
    Wp = np.array([[ep, em], [ik * ep, -ik * em]])
    P = np.linalg.solve(Wp, M @ Wm)
    R = -P[1, 0] / P[1, 1]
    T = P[0, 0] + P[0, 1] * R
    defect = abs(1.0 - abs(R) ** 2 - abs(T) ** 2)
    if defect > 100.0 * tol.abs:
        raise ScatteringError(f"unitarity defect {defect:.2e} at k={k}")
    return R, T, defect


def _log_integrand(V, X, pieces, tol):
    def f(k):
        R, _, _ = _reflection_at(V, X, k, pieces, tol)
        # keep 1 - r2 representable; |R|^2 can round to exactly 1 at low k
        r2 = min(abs(R) ** 2, 1.0 - 1e-16)
        return math.log1p(-r2)

    return f


def _log_integral(V: Potential, X: float, pieces, tol: Tolerance) -> float:
    """pi^(-1) int_R ln(1-|R|^2) dk = (2/pi) int_0^inf, by symmetry."""
    f = _log_integrand(V, X, pieces, tol)
    # stop early once the integrand is negligible at two incommensurate
    # points (smooth potentials reflect exponentially little at large k)
    k_cut = K_MAX
    if pieces is None:
        for kc in (2.0, 5.0, 10.0, 25.0):
            if abs(f(kc)) < 1e-14 and abs(f(1.37 * kc)) < 1e-14:
                k_cut = 1.37 * kc
                break
    with warnings.catch_warnings():
        # near-total reflection at k -> 0 makes the integrand log-singular;
        # quad flags roundoff there although the value converges fine
        warnings.simplefilter("ignore", IntegrationWarning)
        val, _ = quad(f, 0.0, k_cut, epsabs=1e-9, epsrel=1e-8, limit=2000)
    # beyond the cut the integrand decays at least like k^-4 (the Born
    # amplitude of an L1 potential falls off like 1/k^2 or faster)
    tail = abs(f(k_cut)) * k_cut / 3.0
    return (2.0 / math.pi) * (val - tail)


def reflection_coefficient(V: Potential, k_grid=None,
                           tol: Tolerance = SCATTER_TOL) -> ScatteringData:
    """Reflection data R(k) on a grid of positive wavenumbers.

    Non-compact potentials are truncated where the tail mass drops below
    1e-10.  One refinement pass inserts midpoints where |R|^2 moves by more
    than 0.05 between neighbours.
    """
    ks = default_k_grid() if k_grid is None else np.asarray(k_grid,
                                                            dtype=float)
    if len(ks) == 0 or np.any(ks <= 0.0):
        raise ValueError("k_grid must contain positive wavenumbers")
    X = _scatter_box(V)
    pieces = _constant_pieces(V)
    ks = np.sort(ks)
    Rs = {k: _reflection_at(V, X, k, pieces, tol) for k in ks}
    extra = []
    for k1, k2 in zip(ks[:-1], ks[1:]):
        if abs(abs(Rs[k1][0]) ** 2 - abs(Rs[k2][0]) ** 2) > 0.05:
            extra.append(math.sqrt(k1 * k2))
    for k in extra:
        Rs[k] = _reflection_at(V, X, k, pieces, tol)
    grid = sorted(Rs)
    return ScatteringData(
        k_grid=tuple(grid),
        R_values=tuple(Rs[k][0] for k in grid),
        unitarity_defects=tuple(Rs[k][2] for k in grid),
        log_integral=_log_integral(V, X, pieces, tol))


def sum_rule_residual(V: Potential, tol: Tolerance = SCATTER_TOL) -> float:
    """int V - 4 Sigma sqrt|E_i| - pi^(-1) int ln(1-|R|^2) dk.

    The three terms come from independent pipelines (quadrature, eigenvalue
    solver, wave propagation); the residual is a cross-check of all three.
    """
    integral = V.integrate()
    spec = solve_line(V)
    moment = riesz_mean(spec, 0.5)
    X = _scatter_box(V)
    pieces = _constant_pieces(V)
    log_term = _log_integral(V, X, pieces, tol)
    return integral - 4.0 * moment.value - log_term


def theorem2_check(V: Potential, L_half: float | None = None,
                   tol: Tolerance = SCATTER_TOL) -> tuple[float, float]:
    """(lhs, rhs) of the transmission bound; the contract is lhs <= rhs.

    lhs = pi^(-1) int |ln(1-|R|^2)| dk; rhs = int V_- + (4 L - 1) int V_+
    with the attractive part V_+ and repulsive part V_- of V.
    """
    if L_half is None:
        L_half = VARSIGMA_3 / 3.0
    X = _scatter_box(V)
    pieces = _constant_pieces(V)
    lhs = -_log_integral(V, X, pieces, tol)
    plus, minus = V.sign_split()
    rhs = minus.integrate() + (4.0 * L_half - 1.0) * plus.integrate()
    return lhs, rhs
