"""The slit-plane function

    G(z) = (2 i pi)^{-1} int_0^inf [exp(-e^{-i pi a} y^a z^{1-a})
                                    - exp(-e^{i pi a} y^a z^{1-a})] e^{-y} dy / z,

its boundary values on the cut ``(-inf, 0]`` and the boundary angle
``theta(r)`` defined by ``G(-r+) = R(r) exp(-i pi theta(r))``.

Four evaluators are provided:

series
    The entire expansion in ``z^{1-a}``; summed in the log domain and, when
    the alternating terms cancel, re-summed with mpmath at a working
    precision chosen from the measured cancellation.
integral
    Quadrature.  On the right half-plane, far from the origin, the straight
    half-line integral above cancels catastrophically, so the integral route
    switches to the non-oscillatory angular form
    ``G(z) = a/((1-a) pi) int_0^pi A(phi) exp(-z A(phi)) dphi``.
asymptotic
    ``c z^{-1/2} exp(-delta z)``.
auto
    Picks the cheapest evaluator that is accurate at ``z``.

Values near the cut grow like ``exp(delta r)`` and are therefore carried as
:class:`~stablehcm.numerics.LogComplex`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath
import numpy as np
from scipy.special import gammaln

from .errors import CancellationOverflow, DomainError, NonConvergence
from .numerics import (
    LogComplex,
    QuadConfig,
    cospi,
    default_quad_config,
    integrate_half_line,
    integrate_interval,
    sinpi,
)

METHODS = ("series", "integral", "asymptotic", "auto")
CUT_METHODS = ("series", "integral", "auto")

# float summation is trusted up to this max-term/sum ratio
_FLOAT_CANCELLATION = 1e4


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    return alpha


@dataclass(frozen=True)
class SlitPoint:
    """``z = r * exp(i*pi*t)`` with ``r > 0`` and ``-1 < t < 1``."""

    r: float
    t: float = 0.0

    def __post_init__(self) -> None:
        if not (self.r > 0 and math.isfinite(self.r)):
            raise DomainError(f"r must be positive and finite, got {self.r}")
        if not -1.0 < self.t < 1.0:
            raise DomainError(f"t must lie in (-1, 1), got {self.t}; use CutPoint on the cut")

    @classmethod
    def from_complex(cls, z: complex) -> "SlitPoint":
        z = complex(z)
        return cls(abs(z), math.atan2(z.imag, z.real) / math.pi)

    @property
    def z(self) -> complex:
        return complex(self.r * float(cospi(self.t)), self.r * float(sinpi(self.t)))

    @property
    def log_z(self) -> complex:
        return complex(math.log(self.r), math.pi * self.t)

    def conjugate(self) -> "SlitPoint":
        return SlitPoint(self.r, -self.t)


@dataclass(frozen=True)
class CutPoint:
    """Boundary point ``-r`` approached from the upper or lower half-plane."""

    r: float
    side: str = "upper"

    def __post_init__(self) -> None:
        if not (self.r > 0 and math.isfinite(self.r)):
            raise DomainError(f"r must be positive and finite, got {self.r}")
        if self.side not in ("upper", "lower"):
            raise DomainError(f"side must be 'upper' or 'lower', got {self.side!r}")


@dataclass(frozen=True)
class AsymptoticConstants:
    delta: float
    c_paper: float
    c_adopted: float


@dataclass(frozen=True)
class PolarValue:
    """``G(-r+) = R * exp(-i*pi*theta)``; ``R`` is kept as its logarithm."""

    log_R: float
    theta: float

    @property
    def R(self) -> float:
        return math.exp(self.log_R) if self.log_R < 709 else math.inf


def delta(alpha: float) -> float:
    alpha = _check_alpha(alpha)
    return (1.0 - alpha) * alpha ** (alpha / (1.0 - alpha))


def constants(alpha: float) -> AsymptoticConstants:
    alpha = _check_alpha(alpha)
    c_paper = (1.0 - alpha) ** -0.5 * alpha ** (1.0 / (2.0 * (1.0 - alpha)))
    return AsymptoticConstants(delta(alpha), c_paper, c_paper / math.sqrt(2.0 * math.pi))


def small_z_constant(alpha: float) -> float:
    """``lim_{z->0} z^a G(z) = Gamma(a+1) sin(pi a) / pi``."""
    alpha = _check_alpha(alpha)
    return math.gamma(alpha + 1.0) * float(sinpi(alpha)) / math.pi


def small_z_constant_printed(alpha: float) -> float:
    """The rival candidate ``Gamma(a+1) sin(2 pi a) / pi``, kept for reports."""
    alpha = _check_alpha(alpha)
    return math.gamma(alpha + 1.0) * float(sinpi(2.0 * alpha)) / math.pi


# -- series -----------------------------------------------------------------

def _n_terms(alpha: float, log_x: float) -> int:
    """Term count for sums of Gamma(n a + 1)/n! * exp(n log_x)."""
    log_peak = (alpha * math.log(alpha) + log_x) / (1.0 - alpha)
    peak = math.exp(min(log_peak, 50.0))
    width = math.sqrt(peak / (1.0 - alpha))
    return int(peak + 12.0 * width + 60.0 / (1.0 - alpha))


def _series_log_terms(alpha: float, r: float, t: float, n: np.ndarray):
    s = sinpi(n * alpha)
    keep = s != 0.0
    n, s = n[keep], s[keep]
    logmag = (np.log(np.abs(s)) + gammaln(n * alpha + 1.0) - gammaln(n + 1.0)
              + (n * (1.0 - alpha) - 1.0) * math.log(r) - math.log(math.pi))
    phase = (n + 1.0) % 2.0 + (s < 0) + np.mod(t * (n * (1.0 - alpha) - 1.0), 2.0)
    return logmag, phase


def _sum_log_terms(logmag: np.ndarray, phase: np.ndarray):
    m = float(np.max(logmag))
    w = np.exp(logmag - m)
    total = complex(np.sum(w * cospi(phase)), np.sum(w * sinpi(phase)))
    return total, m


def _series_float(alpha: float, r: float, t: float):
    """Return (value, max-term/|value| ratio) of the series at r e^{i pi t}."""
    n_max = _n_terms(alpha, (1.0 - alpha) * math.log(r))
    while True:
        n = np.arange(1.0, n_max + 1.0)
        logmag, phase = _series_log_terms(alpha, r, t, n)
        total, m = _sum_log_terms(logmag, phase)
        if logmag[-1] < m - 40.0:
            break
        n_max *= 2
    if total == 0:
        return LogComplex(-math.inf, 0.0), math.inf
    return LogComplex.from_complex(total).scaled(m), 1.0 / abs(total)


def _series_mp(alpha: float, r: float, t: float, dps: int) -> tuple[LogComplex, float]:
    with mpmath.workdps(dps):
        a = mpmath.mpf(alpha)
        logz = mpmath.log(mpmath.mpf(r)) + 1j * mpmath.pi * mpmath.mpf(t)
        total = mpmath.mpc(0)
        biggest = mpmath.mpf(0)
        n_peak = math.exp(min((alpha * math.log(alpha) + (1 - alpha) * math.log(r)) / (1 - alpha), 50))
        tiny = mpmath.mpf(10) ** (-dps - 5)
        n = 0
        while True:
            n += 1
            s = mpmath.sinpi(n * a)
            term = (s * mpmath.exp(mpmath.loggamma(n * a + 1) - mpmath.loggamma(n + 1)
                                   + (n * (1 - a) - 1) * logz))
            if n % 2 == 0:
                term = -term
            total += term
            mag = abs(term)
            biggest = max(biggest, mag)
            if n > n_peak + 10 and mag < tiny * biggest and s != 0:
                break
        total /= mpmath.pi
        biggest /= mpmath.pi
        if total == 0:
            return LogComplex(-math.inf, 0.0), math.inf
        ratio = float(mpmath.log10(biggest / abs(total)))
        value = LogComplex.from_polar(float(mpmath.log(abs(total))),
                                      float(mpmath.arg(total) / mpmath.pi))
        return value, ratio


def _asymptotic_log(alpha: float, p: SlitPoint) -> LogComplex:
    k = constants(alpha)
    w = math.log(k.c_adopted) - 0.5 * p.log_z - k.delta * p.z
    return LogComplex.from_log(w)


def series_log(alpha: float, p: SlitPoint, extended: bool = True,
               max_cancellation: float = 1e12) -> LogComplex:
    """Sum the expansion of G at ``p``.

    With ``extended=False`` the float sum is returned unless the largest term
    exceeds ``max_cancellation`` times the result, which raises
    :class:`CancellationOverflow`.  With ``extended=True`` heavy cancellation
    triggers an mpmath re-summation instead.
    """
    alpha = _check_alpha(alpha)
    value, ratio = _series_float(alpha, p.r, p.t)
    if ratio <= _FLOAT_CANCELLATION:
        return value
    if not extended:
        if ratio > max_cancellation:
            raise CancellationOverflow(
                f"series at r={p.r}, t={p.t}: max term / sum = {ratio:.3e}")
        return value
    # digits lost to cancellation: log10(max term) - log10(|G|), with |G|
    # estimated from the float sum when usable and from the asymptotic law
    max_log = value.log_mod + math.log(ratio) if math.isfinite(ratio) else None
    est = _asymptotic_log(alpha, p).log_mod
    if max_log is None:
        max_log = max(est, 0.0) + 2.0 * delta(alpha) * p.r
    lost = max(math.log10(ratio) if ratio < 1e14 else 0.0, (max_log - est) / math.log(10.0))
    dps = int(25 + lost)
    for _ in range(4):
        if dps > 4000:
            break
        value, lost_mp = _series_mp(alpha, p.r, p.t, dps)
        if lost_mp < dps - 20:
            return value
        dps = int(lost_mp + 30)
    raise CancellationOverflow(f"series at r={p.r}, t={p.t} needs more than 4000 digits")


# -- quadratures ------------------------------------------------------------

def _log_sinc(u: np.ndarray) -> np.ndarray:
    """``log(sin(u)/u)`` without cancellation for small ``u``."""
    u = np.asarray(u, dtype=float)
    small = np.abs(u) < 0.1
    u2 = u * u
    series = -u2 * (1 / 6 + u2 * (1 / 180 + u2 * (1 / 2835 + u2 / 37800)))
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = np.log(np.sin(u) / np.where(small, 1.0, u))
    return np.where(small, series, direct)


def _kanter_excess(alpha: float, phi: np.ndarray) -> np.ndarray:
    """``log(A(phi)/delta)`` for the angular kernel, accurate as phi -> 0."""
    return ((_log_sinc(alpha * phi) - _log_sinc(phi)) / (1.0 - alpha)
            + _log_sinc((1.0 - alpha) * phi) - _log_sinc(alpha * phi))


def _phi_cutoff(alpha: float, x: np.ndarray, level: float) -> np.ndarray:
    """Angle where ``x * (A(phi) - delta)`` reaches ``level`` (A is increasing)."""
    d = delta(alpha)
    lo = np.zeros_like(x)
    hi = np.full_like(x, math.pi)
    for _ in range(64):
        mid = 0.5 * (lo + hi)
        with np.errstate(over="ignore"):
            big = x * d * np.expm1(_kanter_excess(alpha, mid)) > level
        hi = np.where(big, mid, hi)
        lo = np.where(big, lo, mid)
    return hi


def laplace_log(alpha: float, p: SlitPoint, cfg: QuadConfig | None = None) -> LogComplex:
    """G on the right half-plane from the angular (Laplace-type) form."""
    alpha = _check_alpha(alpha)
    if abs(p.t) >= 0.5:
        raise DomainError("the angular form needs Re z > 0")
    cfg = cfg or default_quad_config()
    z = p.z
    d = delta(alpha)
    phi_max = float(_phi_cutoff(alpha, np.array([z.real]), 700.0)[0])

    def f(phi: np.ndarray) -> np.ndarray:
        excess = _kanter_excess(alpha, phi)
        return np.exp(excess - z * d * np.expm1(excess))

    start = min(1.0, 1.0 / math.sqrt(abs(z)))
    breaks = start * 2.0 ** np.arange(0, 12)
    res = integrate_interval(f, 0.0, phi_max, cfg.with_peak(None), breakpoints=breaks)
    value = LogComplex.from_complex(alpha * d / ((1.0 - alpha) * math.pi) * res.value)
    return value * LogComplex.from_log(-d * z)


def _gl_nodes(n: int = 128):
    return np.polynomial.legendre.leggauss(n)


_GL_U, _GL_W = _gl_nodes()


def scaled_log_positive_axis(alpha: float, x) -> np.ndarray:
    """Vectorised ``log(G(x) e^{delta x})`` for ``x > 0`` (~1e-13 relative).

    Small arguments use the series (cancellation below ``e^6``), larger ones
    a fixed 128-point Gauss-Legendre rule on the angular form truncated where
    the integrand has decayed by ``e^-40``.
    """
    alpha = _check_alpha(alpha)
    x = np.asarray(x, dtype=float)
    flat = x.ravel()
    if np.any(~(flat > 0)):
        raise DomainError("positive-axis evaluation needs x > 0")
    out = np.empty_like(flat)
    d = delta(alpha)
    small = flat <= 3.0 / d
    if np.any(small):
        xs = flat[small]
        n_max = _n_terms(alpha, (1.0 - alpha) * math.log(float(xs.max())))
        n = np.arange(1.0, n_max + 1.0)
        s = sinpi(n * alpha)
        keep = s != 0
        n, s = n[keep], s[keep]
        logc = np.log(np.abs(s)) + gammaln(n * alpha + 1.0) - gammaln(n + 1.0) - math.log(math.pi)
        sign = np.where((n % 2 == 1) ^ (s < 0), 1.0, -1.0)
        logt = logc[None, :] + np.outer(np.log(xs), n * (1.0 - alpha) - 1.0)
        m = logt.max(axis=1, keepdims=True)
        total = (sign[None, :] * np.exp(logt - m)).sum(axis=1)
        out[small] = np.log(total) + m[:, 0] + d * xs
    large = ~small
    if np.any(large):
        xl = flat[large]
        pm = _phi_cutoff(alpha, xl, 40.0)
        phi = pm[:, None] * (_GL_U[None, :] + 1.0) * 0.5
        excess = _kanter_excess(alpha, phi)
        integrand = np.exp(excess - xl[:, None] * d * np.expm1(excess))
        integral = (_GL_W[None, :] * integrand).sum(axis=1) * pm * 0.5
        # the integral underflows to 0 only for astronomically large x
        with np.errstate(divide="ignore"):
            out[large] = np.log(alpha * d / ((1.0 - alpha) * math.pi) * integral)
    return out.reshape(x.shape)


def log_positive_axis(alpha: float, x) -> np.ndarray:
    """Vectorised ``log G(x)`` on the positive axis."""
    x = np.asarray(x, dtype=float)
    return scaled_log_positive_axis(alpha, x) - delta(alpha) * x


def positive_axis(alpha: float, x) -> np.ndarray:
    """Vectorised ``G(x)`` on the positive axis."""
    return np.exp(log_positive_axis(alpha, x))


def halfline_log(alpha: float, p: SlitPoint, cfg: QuadConfig | None = None) -> LogComplex:
    """G(z) by direct half-line quadrature of its defining integral."""
    alpha = _check_alpha(alpha)
    cfg = cfg or default_quad_config()
    z = p.z
    rho_pow = p.r ** (1.0 - alpha)
    coefs = []
    for sgn in (-1.0, 1.0):
        ph = p.t * (1.0 - alpha) + sgn * alpha
        coefs.append(complex(rho_pow * float(cospi(ph)), rho_pow * float(sinpi(ph))))
    shift, peak = 0.0, None
    for b in coefs:
        if b.real < 0:
            y_star = (alpha * -b.real) ** (1.0 / (1.0 - alpha))
            s = y_star * (1.0 / alpha - 1.0)
            if s > shift:
                shift, peak = s, y_star
    if peak is None:
        peak = min(1.0, max(abs(coefs[0]), 1e-300) ** (-1.0 / alpha))
    b_minus, b_plus = coefs

    def f(y: np.ndarray) -> np.ndarray:
        ya = y ** alpha
        return np.exp(-b_minus * ya - y - shift) - np.exp(-b_plus * ya - y - shift)

    res = integrate_half_line(f, cfg.with_peak(peak))
    value = LogComplex.from_complex(res.value / (2j * math.pi * z))
    return value.scaled(shift)


def integral_log(alpha: float, p: SlitPoint, cfg: QuadConfig | None = None) -> LogComplex:
    """Quadrature route: angular form where the half-line integral cancels."""
    alpha = _check_alpha(alpha)
    if abs(p.t) < 0.45 and delta(alpha) * p.r * math.cos(math.pi * p.t) > 2.0:
        return laplace_log(alpha, p, cfg)
    return halfline_log(alpha, p, cfg)


@lru_cache(maxsize=None)
def asymptotic_radius(alpha: float) -> float:
    """Smallest grid radius where the asymptotic law matches quadrature to 1e-6.

    Cached per alpha; every caller computes the same value, so concurrent
    first calls are harmless.
    """
    alpha = _check_alpha(alpha)
    grid = np.geomspace(10.0, 1e12, 89)
    exact = scaled_log_positive_axis(alpha, grid)
    approx = math.log(constants(alpha).c_adopted) - 0.5 * np.log(grid)
    ok = np.abs(np.expm1(exact - approx)) < 1e-6
    # first radius from which agreement persists
    bad = np.nonzero(~ok)[0]
    idx = 0 if bad.size == 0 else bad[-1] + 1
    if idx >= grid.size:
        return math.inf
    return float(grid[idx])


def choose_method(alpha: float, p: SlitPoint) -> str:
    alpha = _check_alpha(alpha)
    if p.r >= asymptotic_radius(alpha):
        return "asymptotic"
    # expected max-term / |G| for the series
    cancel = delta(alpha) * p.r * (1.0 + math.cos(math.pi * p.t))
    if cancel <= math.log(_FLOAT_CANCELLATION):
        return "series"
    if abs(p.t) < 0.45 and delta(alpha) * p.r * math.cos(math.pi * p.t) > 2.0:
        return "integral"
    return "series"


def evaluate_log(alpha: float, p: SlitPoint, method: str = "auto",
                 cfg: QuadConfig | None = None) -> LogComplex:
    """G(z) at a slit-plane point as a log-domain value."""
    alpha = _check_alpha(alpha)
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    if method == "auto":
        method = choose_method(alpha, p)
    if method == "series":
        return series_log(alpha, p)
    if method == "integral":
        return integral_log(alpha, p, cfg)
    return _asymptotic_log(alpha, p)


def evaluate(alpha: float, p: SlitPoint | complex, method: str = "auto",
             cfg: QuadConfig | None = None) -> complex:
    """G(z) as a plain complex number (raises OverflowRisk when too large)."""
    if not isinstance(p, SlitPoint):
        p = SlitPoint.from_complex(p)
    return evaluate_log(alpha, p, method, cfg).to_complex()


# -- the cut ----------------------------------------------------------------

def _cut_series(alpha: float, r: float) -> LogComplex:
    """G(-r+) = (1/pi) sum sin(pi n a) e^{-i pi n a} Gamma(na+1)/n! r^{n(1-a)-1}."""
    n_max = _n_terms(alpha, (1.0 - alpha) * math.log(r))
    while True:
        n = np.arange(1.0, n_max + 1.0)
        frac = np.mod(n * alpha, 2.0)
        s = sinpi(frac)
        keep = s != 0.0
        nk, s, frac = n[keep], s[keep], frac[keep]
        logmag = (np.log(np.abs(s)) + gammaln(nk * alpha + 1.0) - gammaln(nk + 1.0)
                  + (nk * (1.0 - alpha) - 1.0) * math.log(r) - math.log(math.pi))
        phase = -frac + (s < 0)
        total, m = _sum_log_terms(logmag, phase)
        if logmag[-1] < m - 40.0:
            return LogComplex.from_complex(total).scaled(m)
        n_max *= 2


def _cut_integral(alpha: float, r: float, cfg: QuadConfig | None) -> LogComplex:
    cfg = cfg or default_quad_config()
    b = r ** (1.0 - alpha)
    d = delta(alpha)
    y1 = alpha ** (1.0 / (1.0 - alpha)) * r
    shift1 = d * r

    def f1(y: np.ndarray) -> np.ndarray:
        return np.exp(b * y ** alpha - y - shift1)

    rot = complex(float(cospi(-2.0 * alpha)), float(sinpi(-2.0 * alpha)))
    if rot.real > 0:
        y2 = (alpha * b * rot.real) ** (1.0 / (1.0 - alpha))
        shift2 = y2 * (1.0 / alpha - 1.0)
    else:
        y2 = min(1.0, (b * abs(rot.real) + 1e-300) ** (-1.0 / alpha))
        shift2 = 0.0

    def f2(y: np.ndarray) -> np.ndarray:
        return np.exp(rot * b * y ** alpha - y - shift2)

    i1 = integrate_half_line(f1, cfg.with_peak(y1))
    i2 = integrate_half_line(f2, cfg.with_peak(y2))
    first = LogComplex.from_complex(i1.value.real).scaled(shift1)
    second = LogComplex.from_complex(i2.value).scaled(shift2)
    return (first - second) / LogComplex.from_complex(2j * math.pi * r)


def _cut_real_mp(alpha: float, r: float, dps: int) -> tuple[float, float]:
    with mpmath.workdps(dps):
        a = mpmath.mpf(alpha)
        log_r = mpmath.log(mpmath.mpf(r))
        total = mpmath.mpf(0)
        biggest = mpmath.mpf(0)
        n_peak = math.exp(min((alpha * math.log(alpha) + (1 - alpha) * math.log(r)) / (1 - alpha), 50))
        tiny = mpmath.mpf(10) ** (-dps - 5)
        n = 0
        while True:
            n += 1
            s = mpmath.sinpi(2 * n * a)
            term = s * mpmath.exp(mpmath.loggamma(n * a + 1) - mpmath.loggamma(n + 1)
                                  + (n * (1 - a) - 1) * log_r)
            total += term
            biggest = max(biggest, abs(term))
            if n > n_peak + 10 and abs(term) < tiny * biggest and s != 0:
                break
        total /= 2 * mpmath.pi
        biggest /= 2 * mpmath.pi
        if total == 0:
            return 0.0, 0.0
        return float(total), float(mpmath.log10(biggest / abs(total)))


def cut_real_part(alpha: float, r: float) -> float:
    """``Re G(-r+)`` to full relative precision.

    The real part can be exponentially smaller than ``|G(-r+)|`` (it is for
    ``alpha = 1/3``), so it is summed on its own,
    ``(1/2pi) sum sin(2 pi n a) Gamma(na+1)/n! r^{n(1-a)-1}``, with mpmath at a
    precision raised until the cancellation is covered.
    """
    alpha = _check_alpha(alpha)
    if not r > 0:
        raise DomainError(f"r must be positive, got {r}")
    dps = int(30 + 2.0 * delta(alpha) * r / math.log(10.0))
    for _ in range(6):
        value, lost = _cut_real_mp(alpha, r, dps)
        if lost < dps - 20:
            return value
        dps = int(lost + 30)
    raise CancellationOverflow(f"real part on the cut at r={r} needs more digits")


def boundary(alpha: float, q: CutPoint, method: str = "auto",
             cfg: QuadConfig | None = None) -> LogComplex:
    """Boundary value ``G(-r+)`` (upper side) or ``G(-r-)`` (lower side)."""
    alpha = _check_alpha(alpha)
    if method not in CUT_METHODS:
        raise ValueError(f"method must be one of {CUT_METHODS}, got {method!r}")
    if method == "integral":
        value = _cut_integral(alpha, q.r, cfg)
    else:
        value = _cut_series(alpha, q.r)
    return value if q.side == "upper" else value.conjugate()


def theta_at(alpha: float, r: float, method: str = "auto") -> PolarValue:
    """Polar decomposition ``G(-r+) = R exp(-i pi theta)`` with theta in (0, 1)."""
    value = boundary(alpha, CutPoint(r, "upper"), method)
    theta = -value.phase_over_pi
    if not 0.0 < theta < 1.0:
        raise NonConvergence(f"boundary value at r={r} has Im >= 0 (theta={theta})")
    return PolarValue(value.log_mod, theta)


def theta_array(alpha: float, r) -> np.ndarray:
    return np.array([theta_at(alpha, float(x)).theta for x in np.asarray(r, dtype=float)])


# -- links with the stable density -------------------------------------------

def from_g(alpha: float, x: float) -> float:
    """G on the positive axis computed from the one-sided stable density."""
    from .stable_density import StableParams, density

    alpha = _check_alpha(alpha)
    return x ** (-1.0 / alpha) * float(density(StableParams(alpha, 1.0),
                                               x ** (-(1.0 - alpha) / alpha)))


def to_g(alpha: float, x: float, method: str = "auto") -> float:
    """One-sided stable density from G."""
    alpha = _check_alpha(alpha)
    if not x > 0:
        raise DomainError(f"x must be positive, got {x}")
    arg = x ** (-alpha / (1.0 - alpha))
    value = evaluate_log(alpha, SlitPoint(arg), method)
    return math.exp(value.log_mod - math.log(x) / (1.0 - alpha))
