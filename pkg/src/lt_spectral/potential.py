"""Potential families for one-dimensional Schroedinger operators.

Every potential is immutable after construction.  Integrals of V and V^p use
closed forms where the family admits one and adaptive quadrature otherwise
(absolute tolerance 1e-10).  Sampled potentials are zero outside their grid,
so all integrals are finite.

JSON exchange format::

    {"family": "square_well", "params": {"v": 3, "a": 0, "b": 2},
     "domain": "full_line"}

domain is "full_line", "half_line" or a two-element [a, b] list.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Sequence

import numpy as np
from scipy.integrate import quad

QUAD_ABS_TOL = 1e-10

FULL_LINE = (-math.inf, math.inf)
HALF_LINE = (0.0, math.inf)


def _domain_tuple(domain) -> tuple[float, float]:
    if domain == "full_line" or domain is None:
        return FULL_LINE
    if domain == "half_line":
        return HALF_LINE
    a, b = float(domain[0]), float(domain[1])
    if not a < b:
        raise ValueError("interval domain needs a < b")
    return (a, b)


class Potential:
    """Base class; subclasses implement pointwise evaluation and support."""

    def __init__(self, domain="full_line"):
        self.domain = _domain_tuple(domain)

    # -- pointwise -------------------------------------------------------

    def _values(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def evaluate(self, x):
        """V(x) for a scalar or array x inside the domain."""
        arr = np.asarray(x, dtype=float)
        lo, hi = self.domain
        if np.any(arr < lo) or np.any(arr > hi):
            raise ValueError("evaluation point outside domain")
        out = self._values(np.atleast_1d(arr))
        return float(out[0]) if arr.ndim == 0 else out

    __call__ = evaluate

    # -- support and integrals -------------------------------------------

    def support(self) -> tuple[float, float]:
        """Smallest interval outside of which V vanishes (may be infinite)."""
        return self.domain

    def integrate(self, a=None, b=None) -> float:
        """Integral of V over [a, b] (defaults: the whole domain)."""
        a, b = self._clip_interval(a, b)
        return self._integral(a, b)

    def lp_integral(self, p: float, a=None, b=None) -> float:
        """Integral of V^p; requires V >= 0 on the range and p >= 1."""
        if p < 1.0:
            raise ValueError("p must be >= 1")
        a, b = self._clip_interval(a, b)
        return self._lp(p, a, b)

    def _clip_interval(self, a, b):
        lo, hi = self.domain
        a = lo if a is None else float(a)
        b = hi if b is None else float(b)
        if a < lo or b > hi:
            raise ValueError("integration interval outside domain")
        return a, b

    def _integral(self, a, b):
        return self._quad_pow(1.0, a, b)

    def _lp(self, p, a, b):
        if p == 1.0:
            return self._integral(a, b)
        return self._quad_pow(p, a, b)

    def _quad_pow(self, p, a, b):
        lo, hi = self.support()
        a, b = max(a, lo), min(b, hi)
        if not a < b:
            return 0.0

        def f(x):
            v = float(self._values(np.atleast_1d(np.float64(x)))[0])
            if p != 1.0 and v < -1e-13:
                raise ValueError("V < 0 encountered in V^p quadrature")
            return max(v, 0.0) ** p if p != 1.0 else v

        pts = [q for q in self._breaks() if a < q < b]
        if math.isinf(a) or math.isinf(b):
            val, _ = quad(f, a, b, epsabs=QUAD_ABS_TOL, limit=500)
        else:
            val, _ = quad(f, a, b, epsabs=QUAD_ABS_TOL, limit=500,
                          points=pts or None)
        return val

    def _breaks(self) -> Iterable[float]:
        """Interior points where V may be non-smooth (quadrature hints)."""
        return ()

    def cell_average(self, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
        """Mean of V over the cells [lo_i, hi_i].

        Families with jump discontinuities override this with the exact
        antiderivative so grid-based solvers see the correct mass per cell;
        the default midpoint value is accurate for continuous families.
        """
        return self._values(0.5 * (lo + hi))

    def jump_total(self) -> float:
        """Sum of |jump| over all discontinuities of V (0 when continuous)."""
        return 0.0

    # -- algebra -----------------------------------------------------------

    def sign_split(self) -> tuple["Potential", "Potential"]:
        """(V_plus, V_minus) with V = V_plus - V_minus, both nonnegative."""
        return _Clipped(self, +1), _Clipped(self, -1)

    def even_extension(self) -> "Potential":
        """Reflect a half-line potential to a symmetric one on the line."""
        if self.domain != HALF_LINE:
            raise ValueError("even_extension requires a half-line domain")
        return _EvenExtension(self)

    def scaled(self, alpha: float) -> "Potential":
        return Scaled(alpha, self)

    def amplified(self, c: float) -> "Potential":
        """Pointwise multiple c*V (coupling constant)."""
        return Amplified(c, self)

    def restricted(self, a: float, b: float) -> "Potential":
        """Same pointwise values on the sub-domain [a, b]."""
        return _Restriction(self, a, b)

    def half_view(self, side: int) -> "Potential":
        """x -> V(side*x) on [0, inf): one half of a whole-line potential."""
        if self.domain != FULL_LINE:
            raise ValueError("half_view requires a full-line domain")
        if side not in (+1, -1):
            raise ValueError("side must be +1 or -1")
        return _HalfView(self, side)

    def is_nonnegative(self) -> bool:
        """True when V >= 0 can be read off the family parameters."""
        return False

    def to_json_dict(self) -> dict:
        raise NotImplementedError(f"{type(self).__name__} has no JSON form")

    def _domain_json(self):
        if self.domain == FULL_LINE:
            return "full_line"
        if self.domain == HALF_LINE:
            return "half_line"
        return list(self.domain)


class Zero(Potential):
    """The identically-zero potential."""

    def _values(self, x):
        return np.zeros_like(x)

    def support(self):
        return (0.0, 0.0)

    def _integral(self, a, b):
        return 0.0

    def _lp(self, p, a, b):
        return 0.0

    def sign_split(self):
        return self, Zero(self._domain_json())

    def is_nonnegative(self):
        return True

    def to_json_dict(self):
        return {"family": "zero", "params": {}, "domain": self._domain_json()}


class SquareWell(Potential):
    """Constant depth v on [a, b], zero elsewhere."""

    def __init__(self, v: float, a: float, b: float, domain="full_line"):
        super().__init__(domain)
        if v <= 0:
            raise ValueError("square well depth must be positive")
        if not a < b:
            raise ValueError("need a < b")
        self.v, self.a, self.b = float(v), float(a), float(b)

    def _values(self, x):
        return np.where((x >= self.a) & (x <= self.b), self.v, 0.0)

    def support(self):
        return (self.a, self.b)

    def _breaks(self):
        return (self.a, self.b)

    def _overlap(self, a, b):
        return max(0.0, min(b, self.b) - max(a, self.a))

    def _integral(self, a, b):
        return self.v * self._overlap(a, b)

    def _lp(self, p, a, b):
        return self.v**p * self._overlap(a, b)

    def cell_average(self, lo, hi):
        over = np.clip(hi, self.a, self.b) - np.clip(lo, self.a, self.b)
        return self.v * np.maximum(over, 0.0) / (hi - lo)

    def jump_total(self):
        return 2.0 * self.v

    def sign_split(self):
        return self, Zero(self._domain_json())

    def even_extension(self):
        if self.domain != HALF_LINE:
            raise ValueError("even_extension requires a half-line domain")
        if self.a == 0.0:
            return SquareWell(self.v, -self.b, self.b)
        return _EvenExtension(self)

    def is_nonnegative(self):
        return True

    def to_json_dict(self):
        return {"family": "square_well",
                "params": {"v": self.v, "a": self.a, "b": self.b},
                "domain": self._domain_json()}


class PoschlTeller(Potential):
    """V(x) = nu(nu+1) alpha^2 sech^2(alpha (x - c)); reflectionless for
    integer nu, with bound states at -(alpha (nu - n))^2."""

    def __init__(self, nu: float, c: float = 0.0, alpha: float = 1.0,
                 domain="full_line"):
        super().__init__(domain)
        if nu <= 0 or alpha <= 0:
            raise ValueError("nu and alpha must be positive")
        self.nu, self.c, self.alpha = float(nu), float(c), float(alpha)

    def _values(self, x):
        return (self.nu * (self.nu + 1) * self.alpha**2
                / np.cosh(self.alpha * (x - self.c)) ** 2)

    def _antiderivative(self, x):
        # of nu(nu+1) a^2 sech^2(a(x-c)):  nu(nu+1) a tanh(a(x-c))
        if math.isinf(x):
            s = math.copysign(1.0, x)
        else:
            s = math.tanh(self.alpha * (x - self.c))
        return self.nu * (self.nu + 1) * self.alpha * s

    def _integral(self, a, b):
        return self._antiderivative(b) - self._antiderivative(a)

    def _lp(self, p, a, b):
        if (a, b) == self.domain == FULL_LINE:
            # int sech^{2p} = sqrt(pi) Gamma(p) / Gamma(p + 1/2)
            amp = self.nu * (self.nu + 1) * self.alpha**2
            return (amp**p / self.alpha * math.sqrt(math.pi)
                    * math.gamma(p) / math.gamma(p + 0.5))
        return self._quad_pow(p, a, b)

    def sign_split(self):
        return self, Zero(self._domain_json())

    def is_nonnegative(self):
        return True

    def to_json_dict(self):
        return {"family": "poschl_teller",
                "params": {"nu": self.nu, "c": self.c, "alpha": self.alpha},
                "domain": self._domain_json()}


class Gaussian(Potential):
    """V(x) = amplitude * exp(-((x - center)/width)^2)."""

    def __init__(self, amplitude: float, center: float = 0.0,
                 width: float = 1.0, domain="full_line"):
        super().__init__(domain)
        if width <= 0:
            raise ValueError("width must be positive")
        self.amplitude = float(amplitude)
        self.center, self.width = float(center), float(width)

    def _values(self, x):
        return self.amplitude * np.exp(-(((x - self.center) / self.width) ** 2))

    def _integral(self, a, b):
        w, c = self.width, self.center
        ea = math.erf((a - c) / w) if not math.isinf(a) else math.copysign(1, a)
        eb = math.erf((b - c) / w) if not math.isinf(b) else math.copysign(1, b)
        return self.amplitude * w * math.sqrt(math.pi) / 2 * (eb - ea)

    def _lp(self, p, a, b):
        if self.amplitude < 0:
            raise ValueError("V^p integral requires V >= 0")
        if (a, b) == FULL_LINE:
            return self.amplitude**p * self.width * math.sqrt(math.pi / p)
        return self._quad_pow(p, a, b)

    def sign_split(self):
        if self.amplitude >= 0:
            return self, Zero(self._domain_json())
        neg = Gaussian(-self.amplitude, self.center, self.width,
                       self._domain_json())
        return Zero(self._domain_json()), neg

    def is_nonnegative(self):
        return self.amplitude >= 0

    def to_json_dict(self):
        return {"family": "gaussian",
                "params": {"amplitude": self.amplitude,
                           "center": self.center, "width": self.width},
                "domain": self._domain_json()}


class PiecewiseConstant(Potential):
    """Constant values between strictly increasing breakpoints, zero outside."""

    def __init__(self, breakpoints: Sequence[float], values: Sequence[float],
                 domain="full_line"):
        super().__init__(domain)
        bp = np.asarray(breakpoints, dtype=float)
        vals = np.asarray(values, dtype=float)
        if bp.ndim != 1 or len(bp) != len(vals) + 1:
            raise ValueError("need len(breakpoints) == len(values) + 1")
        if np.any(np.diff(bp) <= 0):
            raise ValueError("breakpoints must be strictly increasing")
        self.breakpoints, self.values = bp, vals

    def _values(self, x):
        idx = np.searchsorted(self.breakpoints, x, side="right") - 1
        inside = (idx >= 0) & (idx < len(self.values)) \
            & (x <= self.breakpoints[-1])
        idx = np.clip(idx, 0, len(self.values) - 1)
        return np.where(inside, self.values[idx], 0.0)

    def support(self):
        return (float(self.breakpoints[0]), float(self.breakpoints[-1]))

    def _breaks(self):
        return tuple(self.breakpoints)

    def _piece_overlaps(self, a, b):
        left = np.maximum(self.breakpoints[:-1], a)
        right = np.minimum(self.breakpoints[1:], b)
        return np.maximum(right - left, 0.0)

    def _integral(self, a, b):
        return float(np.dot(self.values, self._piece_overlaps(a, b)))

    def _lp(self, p, a, b):
        if np.any(self.values < 0):
            raise ValueError("V^p integral requires V >= 0")
        return float(np.dot(self.values**p, self._piece_overlaps(a, b)))

    def cell_average(self, lo, hi):
        # exact means from the piecewise-linear antiderivative
        cum = np.concatenate(
            ([0.0], np.cumsum(self.values * np.diff(self.breakpoints))))

        def anti(x):
            return np.interp(x, self.breakpoints, cum)

        return (anti(hi) - anti(lo)) / (hi - lo)

    def jump_total(self):
        padded = np.concatenate(([0.0], self.values, [0.0]))
        return float(np.sum(np.abs(np.diff(padded))))

    def sign_split(self):
        dom = self._domain_json()
        plus = PiecewiseConstant(self.breakpoints,
                                 np.maximum(self.values, 0.0), dom)
        minus = PiecewiseConstant(self.breakpoints,
                                  np.maximum(-self.values, 0.0), dom)
        return plus, minus

    def is_nonnegative(self):
        return bool(np.all(self.values >= 0))

    def to_json_dict(self):
        return {"family": "piecewise_constant",
                "params": {"breakpoints": self.breakpoints.tolist(),
                           "values": self.values.tolist()},
                "domain": self._domain_json()}


class Sampled(Potential):
    """Linear interpolation of samples on a strictly increasing grid;
    zero outside the grid (compact support by convention)."""

    def __init__(self, grid: Sequence[float], values: Sequence[float],
                 domain="full_line"):
        super().__init__(domain)
        g = np.asarray(grid, dtype=float)
        v = np.asarray(values, dtype=float)
        if g.ndim != 1 or g.shape != v.shape or len(g) < 2:
            raise ValueError("grid and values must be equal-length, len >= 2")
        if np.any(np.diff(g) <= 0):
            raise ValueError("grid must be strictly increasing")
        self.grid, self.values = g, v

    def _values(self, x):
        inside = (x >= self.grid[0]) & (x <= self.grid[-1])
        return np.where(inside, np.interp(x, self.grid, self.values), 0.0)

    def support(self):
        return (float(self.grid[0]), float(self.grid[-1]))

    def _breaks(self):
        return (float(self.grid[0]), float(self.grid[-1]))

    def _integral(self, a, b):
        a = max(a, self.grid[0])
        b = min(b, self.grid[-1])
        if not a < b:
            return 0.0
        # exact trapezoid integral of the interpolant over [a, b]
        xs = np.concatenate(([a],
                             self.grid[(self.grid > a) & (self.grid < b)],
                             [b]))
        ys = np.interp(xs, self.grid, self.values)
        return float(np.trapezoid(ys, xs))

    def _lp(self, p, a, b):
        if np.any(self.values < 0):
            raise ValueError("V^p integral requires V >= 0")
        a = max(a, self.grid[0])
        b = min(b, self.grid[-1])
        if not a < b:
            return 0.0
        xs = np.concatenate(([a],
                             self.grid[(self.grid > a) & (self.grid < b)],
                             [b]))
        ys = np.interp(xs, self.grid, self.values)
        # exact integral of (linear segment)^p:
        # h * (y2^{p+1} - y1^{p+1}) / ((p+1)(y2 - y1)), y1 != y2
        h = np.diff(xs)
        y1, y2 = ys[:-1], ys[1:]
        same = np.isclose(y1, y2, rtol=1e-14, atol=0.0)
        seg = np.where(
            same, 0.5 * (y1**p + y2**p) * h,
            h * (y2 ** (p + 1) - y1 ** (p + 1))
            / ((p + 1) * np.where(same, 1.0, y2 - y1)))
        return float(np.sum(seg))

    def sign_split(self):
        dom = self._domain_json()
        plus = Sampled(self.grid, np.maximum(self.values, 0.0), dom)
        minus = Sampled(self.grid, np.maximum(-self.values, 0.0), dom)
        return plus, minus

    def is_nonnegative(self):
        return bool(np.all(self.values >= 0))

    def to_json_dict(self):
        return {"family": "sampled",
                "params": {"grid": self.grid.tolist(),
                           "values": self.values.tolist()},
                "domain": self._domain_json()}


class Sum(Potential):
    """Pointwise sum of potentials on a common domain."""

    def __init__(self, terms: Sequence[Potential], domain=None):
        if not terms:
            raise ValueError("sum needs at least one term")
        if domain is None:
            domain = terms[0]._domain_json()
        super().__init__(domain)
        self.terms = tuple(terms)

    def _values(self, x):
        out = np.zeros_like(x)
        for t in self.terms:
            out = out + t._values(x)
        return out

    def support(self):
        los, his = zip(*(t.support() for t in self.terms))
        return (min(los), max(his))

    def _breaks(self):
        pts = []
        for t in self.terms:
            pts.extend(t._breaks())
        return tuple(sorted(set(pts)))

    def _integral(self, a, b):
        return sum(t._integral(a, b) for t in self.terms)

    def _lp(self, p, a, b):
        if p == 1.0:
            return self._integral(a, b)
        return self._quad_pow(p, a, b)

    def cell_average(self, lo, hi):
        out = np.zeros_like(np.asarray(lo, dtype=float))
        for t in self.terms:
            out = out + t.cell_average(lo, hi)
        return out

    def jump_total(self):
        return sum(t.jump_total() for t in self.terms)

    def is_nonnegative(self):
        return all(t.is_nonnegative() for t in self.terms)

    def sign_split(self):
        if self.is_nonnegative():
            return self, Zero(self._domain_json())
        return _Clipped(self, +1), _Clipped(self, -1)

    def to_json_dict(self):
        return {"family": "sum",
                "params": {"terms": [t.to_json_dict() for t in self.terms]},
                "domain": self._domain_json()}


class Scaled(Potential):
    """scaled(alpha, V): x -> alpha^2 V(alpha x)."""

    def __init__(self, alpha: float, inner: Potential):
        if alpha <= 0:
            raise ValueError("alpha must be positive")
        lo, hi = inner.domain
        super().__init__((lo / alpha, hi / alpha) if (lo, hi) != FULL_LINE
                         and (lo, hi) != HALF_LINE else inner._domain_json())
        self.alpha, self.inner = float(alpha), inner

    def _values(self, x):
        return self.alpha**2 * self.inner._values(self.alpha * x)

    def support(self):
        lo, hi = self.inner.support()
        return (lo / self.alpha, hi / self.alpha)

    def _breaks(self):
        return tuple(q / self.alpha for q in self.inner._breaks())

    def _integral(self, a, b):
        return self.alpha * self.inner._integral(self.alpha * a,
                                                 self.alpha * b)

    def _lp(self, p, a, b):
        return self.alpha ** (2 * p - 1) * self.inner._lp(
            p, self.alpha * a, self.alpha * b)

    def cell_average(self, lo, hi):
        return self.alpha**2 * self.inner.cell_average(self.alpha * lo,
                                                       self.alpha * hi)

    def jump_total(self):
        return self.alpha**2 * self.inner.jump_total()

    def is_nonnegative(self):
        return self.inner.is_nonnegative()

    def sign_split(self):
        ip, im = self.inner.sign_split()
        return Scaled(self.alpha, ip), Scaled(self.alpha, im)

    def to_json_dict(self):
        return {"family": "scaled",
                "params": {"alpha": self.alpha,
                           "inner": self.inner.to_json_dict()},
                "domain": self._domain_json()}


class Amplified(Potential):
    """Pointwise multiple c * V(x) (coupling constant, c >= 0)."""

    def __init__(self, c: float, inner: Potential):
        if c < 0:
            raise ValueError("coupling must be nonnegative")
        super().__init__(inner._domain_json())
        self.c, self.inner = float(c), inner

    def _values(self, x):
        return self.c * self.inner._values(x)

    def support(self):
        return self.inner.support()

    def _breaks(self):
        return self.inner._breaks()

    def _integral(self, a, b):
        return self.c * self.inner._integral(a, b)

    def _lp(self, p, a, b):
        return self.c**p * self.inner._lp(p, a, b)

    def cell_average(self, lo, hi):
        return self.c * self.inner.cell_average(lo, hi)

    def jump_total(self):
        return self.c * self.inner.jump_total()

    def is_nonnegative(self):
        return self.inner.is_nonnegative()

    def sign_split(self):
        ip, im = self.inner.sign_split()
        return Amplified(self.c, ip), Amplified(self.c, im)

    def to_json_dict(self):
        return {"family": "amplified",
                "params": {"c": self.c, "inner": self.inner.to_json_dict()},
                "domain": self._domain_json()}


class _EvenExtension(Potential):
    """V(x) := inner(|x|) on the full line, for a half-line inner."""

    def __init__(self, inner: Potential):
        super().__init__("full_line")
        self.inner = inner

    def _values(self, x):
        return self.inner._values(np.abs(x))

    def support(self):
        lo, hi = self.inner.support()
        return (-hi, hi)

    def _breaks(self):
        pts = set()
        for q in self.inner._breaks():
            pts.update((q, -q))
        pts.add(0.0)
        return tuple(sorted(pts))

    def _split_at_zero(self, fn, a, b):
        total = 0.0
        if a < 0:
            total += fn(max(0.0, -b), -a)
        if b > 0:
            total += fn(max(0.0, a), b)
        return total

    def _integral(self, a, b):
        return self._split_at_zero(self.inner._integral, a, b)

    def _lp(self, p, a, b):
        return self._split_at_zero(lambda lo, hi: self.inner._lp(p, lo, hi),
                                   a, b)

    def cell_average(self, lo, hi):
        if self.inner.jump_total() == 0.0:
            return self._values(0.5 * (lo + hi))
        lo = np.atleast_1d(np.asarray(lo, dtype=float))
        hi = np.atleast_1d(np.asarray(hi, dtype=float))
        out = np.empty_like(lo)
        for i in range(len(lo)):
            out[i] = self._split_at_zero(self.inner._integral, lo[i], hi[i])
        return out / (hi - lo)

    def jump_total(self):
        return 2.0 * self.inner.jump_total()

    def is_nonnegative(self):
        return self.inner.is_nonnegative()


class _Restriction(Potential):
    """Pointwise values of a parent potential on an interval domain."""

    def __init__(self, inner: Potential, a: float, b: float):
        super().__init__((a, b))
        self.inner = inner

    def _values(self, x):
        return self.inner._values(x)

    def support(self):
        lo, hi = self.inner.support()
        return (max(lo, self.domain[0]), min(hi, self.domain[1]))

    def _breaks(self):
        return self.inner._breaks()

    def _integral(self, a, b):
        return self.inner._integral(a, b)

    def _lp(self, p, a, b):
        return self.inner._lp(p, a, b)

    def cell_average(self, lo, hi):
        return self.inner.cell_average(lo, hi)

    def jump_total(self):
        return self.inner.jump_total()

    def is_nonnegative(self):
        return self.inner.is_nonnegative()


class _HalfView(Potential):
    """x -> inner(side*x) on [0, inf); half of a whole-line potential."""

    def __init__(self, inner: Potential, side: int):
        super().__init__("half_line")
        self.inner, self.side = inner, int(side)

    def _map(self, a, b):
        # image of [a, b] under x -> side*x, as an ordered interval
        return (a, b) if self.side > 0 else (-b, -a)

    def _values(self, x):
        return self.inner._values(self.side * x)

    def support(self):
        lo, hi = self.inner.support()
        if self.side < 0:
            lo, hi = -hi, -lo
        return (max(lo, 0.0), max(hi, 0.0))

    def _breaks(self):
        return tuple(sorted(q for q in
                            (self.side * p for p in self.inner._breaks())
                            if q > 0))

    def _integral(self, a, b):
        return self.inner._integral(*self._map(a, b))

    def _lp(self, p, a, b):
        return self.inner._lp(p, *self._map(a, b))

    def cell_average(self, lo, hi):
        if self.side > 0:
            return self.inner.cell_average(lo, hi)
        return self.inner.cell_average(-hi, -lo)

    def jump_total(self):
        return self.inner.jump_total()

    def is_nonnegative(self):
        return self.inner.is_nonnegative()

    def to_json_dict(self):
        return {"family": "half_view",
                "params": {"side": self.side,
                           "inner": self.inner.to_json_dict()},
                "domain": "half_line"}


class _Clipped(Potential):
    """max(0, sign * V): generic positive/negative part."""

    def __init__(self, inner: Potential, sign: int):
        super().__init__(inner._domain_json())
        self.inner, self.sign = inner, sign

    def _values(self, x):
        return np.maximum(self.sign * self.inner._values(x), 0.0)

    def support(self):
        return self.inner.support()

    def _breaks(self):
        return self.inner._breaks()

    def jump_total(self):
        return self.inner.jump_total()

    def is_nonnegative(self):
        return True


_FAMILIES = {}


def from_json_dict(doc: dict) -> Potential:
    """Build a potential from its JSON document."""
    family = doc.get("family")
    params = doc.get("params", {})
    domain = doc.get("domain", "full_line")
    if family == "zero":
        return Zero(domain)
    if family == "square_well":
        return SquareWell(params["v"], params["a"], params["b"], domain)
    if family == "poschl_teller":
        return PoschlTeller(params["nu"], params.get("c", 0.0),
                            params.get("alpha", 1.0), domain)
    if family == "gaussian":
        return Gaussian(params["amplitude"], params.get("center", 0.0),
                        params.get("width", 1.0), domain)
    if family == "piecewise_constant":
        return PiecewiseConstant(params["breakpoints"], params["values"],
                                 domain)
    if family == "sampled":
        return Sampled(params["grid"], params["values"], domain)
    if family == "sum":
        return Sum([from_json_dict(t) for t in params["terms"]], domain)
    if family == "scaled":
        return Scaled(params["alpha"], from_json_dict(params["inner"]))
    if family == "amplified":
        return Amplified(params["c"], from_json_dict(params["inner"]))
    if family == "half_view":
        return _HalfView(from_json_dict(params["inner"]), params["side"])
    raise ValueError(f"unknown potential family: {family!r}")


def from_json(text: str) -> Potential:
    return from_json_dict(json.loads(text))


def load(path) -> Potential:
    with open(path) as fh:
        return from_json_dict(json.load(fh))


def truncation_point(V: Potential, tail_tol: float,
                     x_min: float = 1.0) -> float:
    """Smallest convenient X with integral of V outside [-X, X] < tail_tol."""
    lo, hi = V.support()
    if math.isfinite(lo) and math.isfinite(hi):
        return max(abs(lo), abs(hi), x_min)
    a, b = V.domain
    X = x_min
    for _ in range(200):
        tail = 0.0
        if hi > X:
            tail += abs(V.integrate(min(X, b), b))
        if lo < -X and a < -X:
            tail += abs(V.integrate(a, max(-X, a)))
        if tail < tail_tol:
            return X
        X *= 1.5
    raise ValueError("potential tail does not decay to the requested mass")
