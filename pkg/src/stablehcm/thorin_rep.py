"""Exponential Stieltjes representation of G built from the boundary angle.

With ``theta(t)`` the angle of ``G(-t+) = R(t) exp(-i pi theta(t))``,

    G(z) = a exp(-delta z) L(z),
    L(z) = exp int_0^inf [1/(z+t) - 1/(1+t)] theta(t) dt.

``theta`` is sampled on a log grid (a :class:`ThetaTable`) and interpolated
linearly, with ``theta = alpha`` below the grid and ``theta = 1/2`` above it.
Every piece of the integral then has an elementary antiderivative, so
``L(1) = 1`` holds exactly.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import galpha
from .errors import EndpointMismatch, GridTooSmall, NotMonotone
from .galpha import SlitPoint
from .numerics import LogComplex, central_derivative, log_grid

DEFAULT_T_MIN = 1e-4
DEFAULT_T_MAX = 1e4
DEFAULT_N = 2000
# |theta_0 - alpha| <= LOWER_BUDGET * t_min^(1 - alpha)
LOWER_BUDGET = 10.0
UPPER_TOL = 1e-3

_GL_U, _GL_W = np.polynomial.legendre.leggauss(64)


@dataclass(frozen=True)
class ThetaTable:
    """Boundary angle sampled on a strictly increasing log grid."""

    alpha: float
    t: np.ndarray
    theta: np.ndarray

    def __post_init__(self) -> None:
        t = np.asarray(self.t, dtype=float)
        th = np.asarray(self.theta, dtype=float)
        if t.ndim != 1 or t.shape != th.shape:
            raise ValueError("nodes and values must be 1-D arrays of equal length")
        if t.size < 3:
            raise GridTooSmall(f"need at least 3 nodes, got {t.size}")
        if not (t[0] > 0 and np.all(np.diff(t) > 0)):
            raise ValueError("nodes must be positive and strictly increasing")
        if not np.all((th > 0) & (th < 1)):
            raise ValueError("theta values must lie in (0, 1)")
        t.flags.writeable = False
        th.flags.writeable = False
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "theta", th)

    @property
    def t_min(self) -> float:
        return float(self.t[0])

    @property
    def t_max(self) -> float:
        return float(self.t[-1])

    @property
    def n(self) -> int:
        return int(self.t.size)

    def sidecar(self, a: float | None = None) -> dict:
        if a is None:
            a = calibrate_a(self.alpha, self)
        return {"alpha": self.alpha, "t_min": self.t_min, "t_max": self.t_max,
                "n": self.n, "delta": galpha.delta(self.alpha), "a": a}

    def write_csv(self, stream, precision: int = 17) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["t", "theta"])
        fmt = f"{{:.{precision}g}}"
        for t, th in zip(self.t, self.theta):
            writer.writerow([fmt.format(t), fmt.format(th)])

    def save(self, path, precision: int = 17) -> Path:
        """Write ``path`` (CSV) and ``path`` with a ``.json`` suffix (sidecar)."""
        path = Path(path)
        with open(path, "w", newline="") as fh:
            self.write_csv(fh, precision)
        side = path.with_suffix(".json")
        side.write_text(json.dumps(self.sidecar(), indent=2, sort_keys=True) + "\n")
        return side

    @classmethod
    def load(cls, path) -> "ThetaTable":
        path = Path(path)
        meta = json.loads(path.with_suffix(".json").read_text())
        data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
        return cls(float(meta["alpha"]), data[:, 0], data[:, 1])


@dataclass(frozen=True)
class MonotonicityReport:
    verdict: str
    worst_violation: float
    location: float
    margin: float

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "worst_violation": self.worst_violation,
                "location": self.location, "margin": self.margin}


def build_theta(alpha: float, t_min: float = DEFAULT_T_MIN, t_max: float = DEFAULT_T_MAX,
                n: int = DEFAULT_N) -> ThetaTable:
    """Sample ``theta`` at ``n`` log-spaced nodes of ``[t_min, t_max]``.

    Raises
    ------
    GridTooSmall
        ``n < 16``.
    EndpointMismatch
        ``theta`` at ``t_max`` is not within ``1e-3`` of 1/2, or ``theta`` at
        ``t_min`` is further from ``alpha`` than ``10 t_min^(1 - alpha)``.
    """
    if n < 16:
        raise GridTooSmall(f"theta table needs n >= 16, got {n}")
    t = log_grid(t_min, t_max, n)
    theta = galpha.theta_array(alpha, t)
    if abs(theta[-1] - 0.5) > UPPER_TOL:
        raise EndpointMismatch(
            f"theta({t_max:g}) = {theta[-1]:.6f} is not within {UPPER_TOL} of 1/2; raise t_max")
    if abs(theta[0] - alpha) > LOWER_BUDGET * t_min ** (1.0 - alpha):
        raise EndpointMismatch(
            f"theta({t_min:g}) = {theta[0]:.6f} too far from alpha = {alpha}; lower t_min")
    return ThetaTable(float(alpha), t, theta)


# -- the representation ------------------------------------------------------

def _segment_terms(table: ThetaTable, z: complex) -> complex:
    t, th = table.t, table.theta
    dt = np.diff(t)
    slope = np.diff(th) / dt
    left = t[:-1]
    # log(z + t_{i+1}) - log(z + t_i) without cancellation
    lam = np.log1p(dt / (z + left))
    return complex(np.sum((th[:-1] - slope * (z + left)) * lam))


def l_eval_log(table: ThetaTable, p: SlitPoint) -> complex:
    """``log L(z)``, continuous on the slit plane."""
    z = p.z
    lo, hi = table.t_min, table.t_max
    # the segment primitive's (slope * dt) parts cancel between z and 1
    body = _segment_terms(table, z) - _segment_terms(table, 1.0 + 0j)
    lower = table.alpha * (np.log1p(lo / z) - math.log1p(lo))
    upper = 0.5 * (math.log1p(hi) - np.log(z + hi))
    return complex(body + lower + upper)


def l_eval(table: ThetaTable, p: SlitPoint | complex) -> complex:
    """``L(z) = exp int_0^inf [1/(z+t) - 1/(1+t)] theta(t) dt``."""
    if not isinstance(p, SlitPoint):
        p = SlitPoint.from_complex(p)
    return complex(np.exp(l_eval_log(table, p)))


def calibrate_a(alpha: float, table: ThetaTable) -> float:
    """``a = e^delta G(1)``, using ``L(1) = 1``."""
    g1 = galpha.evaluate_log(alpha, SlitPoint(1.0))
    return math.exp(galpha.delta(alpha) + g1.log_mod)


def reconstruct_log(alpha: float, table: ThetaTable, p: SlitPoint,
                    a: float | None = None) -> LogComplex:
    if a is None:
        a = calibrate_a(alpha, table)
    return LogComplex.from_log(math.log(a) - galpha.delta(alpha) * p.z + l_eval_log(table, p))


def reconstruct(alpha: float, table: ThetaTable, p: SlitPoint | complex,
                a: float | None = None) -> complex:
    """``a exp(-delta z) L(z)``."""
    if not isinstance(p, SlitPoint):
        p = SlitPoint.from_complex(p)
    return reconstruct_log(alpha, table, p, a).to_complex()


# -- the derivative form -----------------------------------------------------

def _dtheta_ds(table: ThetaTable) -> tuple[np.ndarray, np.ndarray]:
    """``s = log t`` and ``d theta / ds`` by central differences."""
    s = np.log(table.t)
    return s, central_derivative(s, table.theta)


def _trapezoid(s: np.ndarray, y: np.ndarray):
    return np.sum(0.5 * (y[1:] + y[:-1]) * np.diff(s))


def total_variation(table: ThetaTable) -> float:
    """``int theta'(t) dt`` over the table, from the differentiated samples."""
    s, d = _dtheta_ds(table)
    return float(_trapezoid(s, d))


def _lower_mass(table: ThetaTable) -> float:
    return float(table.theta[0] - table.alpha)


def _upper_mass(table: ThetaTable) -> float:
    return float(0.5 - table.theta[-1])


def log_moment(table: ThetaTable) -> float:
    """``exp(-int log t theta'(t) dt)``.

    Below ``t_min`` the rise ``theta_0 - alpha`` is spread as
    ``theta' ~ t^{-alpha}`` (matching ``theta - alpha = O(t^{1-alpha})``),
    which contributes ``(theta_0 - alpha)(log t_min - 1/(1-alpha))``; the
    remaining gap to 1/2 above ``t_max`` is placed at ``t_max``.
    """
    s, d = _dtheta_ds(table)
    body = _trapezoid(s, s * d)
    lower = _lower_mass(table) * (math.log(table.t_min) - 1.0 / (1.0 - table.alpha))
    upper = _upper_mass(table) * math.log(table.t_max)
    return math.exp(-(body + lower + upper))


def log_moment_expected(alpha: float) -> float:
    """Value of :func:`log_moment` forced by the small-z and large-z laws.

    Letting ``z -> 0`` in the derivative form and comparing with
    ``G(z) ~ Gamma(1+alpha) sin(pi alpha)/pi z^{-alpha}`` gives
    ``sin(pi alpha)/pi * Gamma(1+alpha)/c`` with ``c`` the large-z prefactor.
    """
    c = galpha.constants(alpha).c_adopted
    return math.sin(math.pi * alpha) / math.pi * math.gamma(1.0 + alpha) / c


def _log_kernel_integral(table: ThetaTable, z: complex) -> complex:
    """``int_0^inf log(1 + t/z) theta'(t) dt``."""
    s, d = _dtheta_ds(table)
    body = _trapezoid(s, np.log1p(table.t / z) * d)
    # lower tail, theta' proportional to t^{-alpha} on (0, t_min]; with
    # t = t_min v^{1/(1-alpha)} the weight becomes uniform in v
    v = 0.5 * (_GL_U + 1.0)
    ratio = table.t_min / z
    lower = _lower_mass(table) * 0.5 * np.sum(
        _GL_W * np.log1p(ratio * v ** (1.0 / (1.0 - table.alpha))))
    upper = _upper_mass(table) * np.log1p(table.t_max / z)
    return complex(body + lower + upper)


def theta_prime_form(alpha: float, table: ThetaTable, p: SlitPoint | complex,
                     prefactor: float | None = None) -> complex:
    """``K e^{-delta z} z^{-1/2} exp(-int log(1 + t/z) theta'(t) dt)``.

    ``K`` defaults to the large-z prefactor ``c`` of ``G``, the only value
    compatible with ``G(z) ~ c z^{-1/2} e^{-delta z}``.

    Raises
    ------
    NotMonotone
        When the table is not increasing (or constant) within its margin.
    """
    if not isinstance(p, SlitPoint):
        p = SlitPoint.from_complex(p)
    report = monotonicity(table)
    if report.verdict not in ("increasing", "constant"):
        raise NotMonotone(f"theta table is {report.verdict}; the derivative form needs it increasing")
    if prefactor is None:
        prefactor = galpha.constants(alpha).c_adopted
    z = p.z
    w = (math.log(prefactor) - galpha.delta(alpha) * z - 0.5 * p.log_z
         - _log_kernel_integral(table, z))
    return LogComplex.from_log(w).to_complex()


def monotonicity(table: ThetaTable, rel_margin: float = 1e-9) -> MonotonicityReport:
    """Classify the table from consecutive differences.

    The margin is ``rel_margin * max|theta|``.  ``worst_violation`` is the
    largest step against the reported direction (negative means slack), or,
    for ``constant``, the largest absolute step.
    """
    th = table.theta
    d = np.diff(th)
    margin = rel_margin * float(np.max(np.abs(th)))
    mid = np.sqrt(table.t[1:] * table.t[:-1])
    up, down = -d, d
    if np.all(np.abs(d) <= margin):
        i = int(np.argmax(np.abs(d)))
        return MonotonicityReport("constant", float(abs(d[i])), float(mid[i]), margin)
    i_up, i_down = int(np.argmax(up)), int(np.argmax(down))
    if up[i_up] <= margin:
        return MonotonicityReport("increasing", float(up[i_up]), float(mid[i_up]), margin)
    if down[i_down] <= margin:
        return MonotonicityReport("decreasing", float(down[i_down]), float(mid[i_down]), margin)
    if up[i_up] <= down[i_down]:
        return MonotonicityReport("neither", float(up[i_up]), float(mid[i_up]), margin)
    return MonotonicityReport("neither", float(down[i_down]), float(mid[i_down]), margin)


__all__ = [
    "ThetaTable",
    "MonotonicityReport",
    "build_theta",
    "l_eval",
    "l_eval_log",
    "calibrate_a",
    "reconstruct",
    "reconstruct_log",
    "theta_prime_form",
    "total_variation",
    "log_moment",
    "log_moment_expected",
    "monotonicity",
]
