"""Numerical substrate: adaptive quadrature, log-domain complex values,
difference ladders and grids.

All routines are pure functions.  Integrands handed to the quadrature
routines must be vectorised: they receive a 1-D float array of abscissae and
return an array (real or complex) of the same shape.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import BadRange, GridTooSmall, NonConvergence, NonFiniteSample, OverflowRisk

Evaluator = Callable[[np.ndarray], np.ndarray]

_EPS = np.finfo(float).eps

# 15-point Kronrod nodes on [0, 1] (the rule is symmetric) and the weights of
# the embedded 7-point Gauss rule.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG7 = np.array([
    0.0, 0.129484966168869693270611432679082,
    0.0, 0.279705391489276667901467771423780,
    0.0, 0.381830050505118944950369775488975,
    0.0, 0.417959183673469387755102040816327,
])

_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_W_K15 = np.concatenate([_WGK[:-1], _WGK[::-1]])
_W_G7 = np.concatenate([_WG7[:-1], _WG7[::-1]])


def sinpi(u):
    """``sin(pi*u)``, exactly zero at integers and accurate for large ``u``."""
    u = np.mod(np.asarray(u, dtype=float), 2.0)
    sign = np.where(u >= 1.0, -1.0, 1.0)
    u = np.where(u >= 1.0, u - 1.0, u)
    u = np.where(u > 0.5, 1.0 - u, u)
    return sign * np.sin(np.pi * u) + 0.0  # no negative zeros


def cospi(u):
    return sinpi(np.asarray(u, dtype=float) + 0.5)


def default_rel_tol() -> float:
    """Default relative tolerance, overridable through ``STABLE_HCM_TOL``."""
    raw = os.environ.get("STABLE_HCM_TOL")
    if raw is None:
        return 1e-10
    value = float(raw)
    if not value > 0:
        raise ValueError(f"STABLE_HCM_TOL must be positive, got {raw!r}")
    return value


@dataclass(frozen=True)
class QuadConfig:
    """Settings for :func:`integrate_half_line` and :func:`integrate_interval`.

    ``peak_hint`` is the approximate location of the integrand's maximum on
    the half-line; the integration variable is rescaled so that the peak sits
    near 1.
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-300
    max_levels: int = 48
    peak_hint: float | None = None

    def __post_init__(self) -> None:
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be > 0")
        if not self.abs_tol >= 0:
            raise ValueError("abs_tol must be >= 0")
        if self.max_levels < 1:
            raise ValueError("max_levels must be >= 1")
        if self.peak_hint is not None and not self.peak_hint > 0:
            raise ValueError("peak_hint must be > 0")

    def with_peak(self, peak: float | None) -> "QuadConfig":
        return QuadConfig(self.rel_tol, self.abs_tol, self.max_levels, peak)


def default_quad_config() -> QuadConfig:
    return QuadConfig(rel_tol=default_rel_tol())


@dataclass(frozen=True)
class QuadResult:
    value: complex
    err_estimate: float
    evaluations: int


@dataclass(frozen=True)
class LogComplex:
    """Complex number stored as ``exp(log_mod) * exp(i*pi*phase_over_pi)``.

    Use :meth:`from_polar` to build one from an unnormalised phase.
    """

    log_mod: float
    phase_over_pi: float

    def __post_init__(self) -> None:
        if not (-1.0 < self.phase_over_pi <= 1.0):
            raise ValueError(f"phase_over_pi={self.phase_over_pi} outside (-1, 1]")

    @staticmethod
    def _wrap(phase: float) -> float:
        p = math.fmod(phase + 1.0, 2.0)
        if p < 0:
            p += 2.0
        p -= 1.0
        return 1.0 if p == -1.0 else p

    @classmethod
    def from_polar(cls, log_mod: float, phase_over_pi: float) -> "LogComplex":
        if log_mod == -math.inf:
            return cls(-math.inf, 0.0)
        return cls(float(log_mod), cls._wrap(float(phase_over_pi)))

    @classmethod
    def from_complex(cls, z: complex) -> "LogComplex":
        z = complex(z)
        if z == 0:
            return cls(-math.inf, 0.0)
        return cls.from_polar(math.log(abs(z)), math.atan2(z.imag, z.real) / math.pi)

    @classmethod
    def from_log(cls, w: complex) -> "LogComplex":
        """Value ``exp(w)`` for a complex logarithm ``w``."""
        w = complex(w)
        return cls.from_polar(w.real, w.imag / math.pi)

    def log(self) -> complex:
        return complex(self.log_mod, math.pi * self.phase_over_pi)

    def to_complex(self) -> complex:
        if self.log_mod > 700.0:
            raise OverflowRisk(f"log-modulus {self.log_mod:.1f} exceeds 700")
        if self.log_mod == -math.inf:
            return 0j
        r = math.exp(self.log_mod)
        return complex(r * float(cospi(self.phase_over_pi)), r * float(sinpi(self.phase_over_pi)))

    def __complex__(self) -> complex:
        return self.to_complex()

    def __mul__(self, other: "LogComplex") -> "LogComplex":
        return LogComplex.from_polar(self.log_mod + other.log_mod,
                                     self.phase_over_pi + other.phase_over_pi)

    def __truediv__(self, other: "LogComplex") -> "LogComplex":
        return LogComplex.from_polar(self.log_mod - other.log_mod,
                                     self.phase_over_pi - other.phase_over_pi)

    def __add__(self, other: "LogComplex") -> "LogComplex":
        if self.log_mod == -math.inf:
            return other
        if other.log_mod == -math.inf:
            return self
        m = max(self.log_mod, other.log_mod)
        a = LogComplex(self.log_mod - m, self.phase_over_pi).to_complex()
        b = LogComplex(other.log_mod - m, other.phase_over_pi).to_complex()
        return LogComplex.from_complex(a + b).scaled(m)

    def __neg__(self) -> "LogComplex":
        return LogComplex.from_polar(self.log_mod, self.phase_over_pi + 1.0)

    def __sub__(self, other: "LogComplex") -> "LogComplex":
        return self + (-other)

    def scaled(self, log_factor: float) -> "LogComplex":
        """Multiply by the positive real ``exp(log_factor)``."""
        return LogComplex.from_polar(self.log_mod + log_factor, self.phase_over_pi)

    def conjugate(self) -> "LogComplex":
        if self.phase_over_pi == 1.0:
            return self
        return LogComplex(self.log_mod, -self.phase_over_pi)

    @property
    def imag_sign(self) -> int:
        p = self.phase_over_pi
        if self.log_mod == -math.inf or p == 0.0 or p == 1.0:
            return 0
        return 1 if p > 0 else -1


def _gk15(f: Evaluator, a: np.ndarray, b: np.ndarray):
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    x = c[:, None] + h[:, None] * _NODES[None, :]
    y = np.asarray(f(x.ravel())).reshape(x.shape)
    if not np.all(np.isfinite(y)):
        bad = x[~np.isfinite(y)][0]
        raise NonFiniteSample(f"integrand is not finite at y={bad!r}")
    k15 = h * (y @ _W_K15)
    g7 = h * (y @ _W_G7)
    ay = np.abs(y)
    resabs = np.abs(h) * (ay @ _W_K15)
    mean = (y @ _W_K15) * 0.5
    resasc = np.abs(h) * (np.abs(y - mean[:, None]) @ _W_K15)
    err = np.abs(k15 - g7)
    with np.errstate(divide="ignore", invalid="ignore"):
        scaled = resasc * np.minimum(1.0, (200.0 * err / resasc) ** 1.5)
    err = np.where((resasc > 0) & (err > 0), scaled, err)
    floor = 50.0 * _EPS * resabs
    return k15, np.maximum(err, floor), floor


def _adaptive(f: Evaluator, edges: np.ndarray, cfg: QuadConfig) -> QuadResult:
    a = np.asarray(edges[:-1], dtype=float)
    b = np.asarray(edges[1:], dtype=float)
    level = np.zeros(a.size, dtype=int)
    val, err, floor = _gk15(f, a, b)
    evaluations = 15 * a.size
    for _ in range(10_000):
        total = val.sum()
        total_err = float(err.sum())
        tol = max(cfg.rel_tol * abs(total), cfg.abs_tol)
        if total_err <= tol:
            return QuadResult(complex(total), total_err, evaluations)
        # split the fewest worst panels that leave at most tol/2 behind
        order = np.argsort(err)[::-1]
        tail = np.cumsum(err[order][::-1])[::-1]
        remaining = np.concatenate([tail[1:], [0.0]])
        n_split = int(np.argmax(remaining <= 0.5 * tol)) + 1
        chosen = order[:n_split]
        splittable = (err[chosen] > floor[chosen] * (1 + 1e-12)) & (level[chosen] < cfg.max_levels)
        chosen = chosen[splittable]
        if chosen.size == 0:
            raise NonConvergence(
                f"quadrature stalled: error estimate {total_err:.3e} above tolerance {tol:.3e}"
                " (roundoff floor or max_levels reached)")
        keep = np.ones(a.size, dtype=bool)
        keep[chosen] = False
        mid = 0.5 * (a[chosen] + b[chosen])
        na = np.concatenate([a[chosen], mid])
        nb = np.concatenate([mid, b[chosen]])
        nlev = np.concatenate([level[chosen], level[chosen]]) + 1
        nval, nerr, nfloor = _gk15(f, na, nb)
        evaluations += 15 * na.size
        a = np.concatenate([a[keep], na])
        b = np.concatenate([b[keep], nb])
        level = np.concatenate([level[keep], nlev])
        val = np.concatenate([val[keep], nval])
        err = np.concatenate([err[keep], nerr])
        floor = np.concatenate([floor[keep], nfloor])
    raise NonConvergence("quadrature exceeded its iteration budget")


def _tail_cutoff(g: Evaluator, cfg: QuadConfig) -> float:
    """Smallest U = 8 * 2^k beyond which the integrand is negligible."""
    probes = 2.0 ** np.arange(-12.0, 3.5, 0.5)
    scale = 0.0
    upper = 8.0
    for _ in range(64):
        vals = np.abs(np.asarray(g(probes)))
        if not np.all(np.isfinite(vals)):
            raise NonFiniteSample("integrand is not finite while probing the tail")
        scale = max(scale, float(np.max(vals * probes)))
        ends = upper * np.array([1.0, 1.25, 1.5, 2.0])
        tail = np.abs(np.asarray(g(ends)))
        if not np.all(np.isfinite(tail)):
            raise NonFiniteSample("integrand is not finite while probing the tail")
        threshold = max(cfg.abs_tol, 1e-3 * cfg.rel_tol * scale)
        if np.all(tail * ends <= threshold):
            return upper
        probes = ends
        upper *= 2.0
    raise NonConvergence("integrand does not decay on the half-line")


def integrate_half_line(f: Evaluator, cfg: QuadConfig | None = None) -> QuadResult:
    """Integrate ``f`` over ``(0, inf)``.

    The integral is truncated at a point ``Y`` where ``|f|`` is negligible,
    then computed with adaptive Gauss-Kronrod panels.  Raises
    :class:`NonConvergence` when the requested tolerance cannot be met and
    :class:`NonFiniteSample` when ``f`` returns NaN or an infinity.
    """
    cfg = cfg or default_quad_config()
    s = cfg.peak_hint or 1.0

    def g(u: np.ndarray) -> np.ndarray:
        return s * np.asarray(f(s * u))

    upper = _tail_cutoff(g, cfg)
    top = int(round(math.log2(upper)))
    edges = np.concatenate([[0.0], 2.0 ** np.arange(-12, top + 1)])
    res = _adaptive(g, edges, cfg)
    return res


def integrate_interval(f: Evaluator, a: float, b: float, cfg: QuadConfig | None = None,
                       breakpoints: np.ndarray | None = None) -> QuadResult:
    """Integrate ``f`` over the finite interval ``[a, b]``."""
    cfg = cfg or default_quad_config()
    if not (np.isfinite(a) and np.isfinite(b)) or not b > a:
        raise BadRange(f"need finite a < b, got ({a}, {b})")
    edges = [a, b] if breakpoints is None else sorted({a, b, *(p for p in breakpoints if a < p < b)})
    return _adaptive(f, np.asarray(edges, dtype=float), cfg)


def alternating_differences(samples, order: int) -> np.ndarray:
    """Return ``(-1)^k Delta_h^k f(x0)`` for ``k = 0..order``.

    ``samples`` are ``f(x0), f(x0+h), ...``.  Differences are formed by
    repeated subtraction of neighbours, which keeps each level's rounding
    error proportional to the previous level instead of to the binomial
    coefficients.
    """
    s = np.asarray(samples, dtype=float)
    if order < 0 or s.size < order + 1:
        raise ValueError(f"need at least {order + 1} samples, got {s.size}")
    out = np.empty(order + 1)
    cur = s[: order + 1].copy()
    for k in range(order + 1):
        out[k] = cur[0] if k % 2 == 0 else -cur[0]
        cur = cur[1:] - cur[:-1]
    return out


def central_derivative(t, y) -> np.ndarray:
    """Derivative of tabulated data on a strictly increasing, possibly uneven grid.

    Interior nodes use the three-point non-uniform central formula, the two
    end nodes the second-order one-sided formulas.  Exact for quadratics.
    """
    t = np.asarray(t, dtype=float)
    y = np.asarray(y, dtype=float)
    if t.size < 3 or y.shape != t.shape:
        raise GridTooSmall(f"need >= 3 nodes with matching values, got {t.size}")
    if not np.all(np.diff(t) > 0):
        raise BadRange("grid must be strictly increasing")
    return np.gradient(y, t, edge_order=2)


def log_grid(t_min: float, t_max: float, n: int) -> np.ndarray:
    """``n`` geometrically spaced nodes from ``t_min`` to ``t_max`` inclusive."""
    if not (0 < t_min < t_max) or not np.isfinite(t_max) or n < 2:
        raise BadRange(f"need 0 < t_min < t_max and n >= 2, got ({t_min}, {t_max}, {n})")
    grid = np.geomspace(t_min, t_max, n)
    grid[0], grid[-1] = t_min, t_max
    return grid
