"""Strictly stable densities on the positive half-line.

For ``0 < alpha < 1`` and ``0 < rho <= 1`` the density of the strictly
stable law with positivity parameter ``rho`` is, for ``x > 0``,

    g(x) = (2 i pi)^{-1} int_0^inf [exp(-e^{-i pi rho alpha} y^alpha x^{-alpha})
                                   - exp(-e^{i pi rho alpha} y^alpha x^{-alpha})]
                                  x^{-1} e^{-y} dy.

``rho = 1`` is the one-sided law with Laplace transform ``exp(-lambda^alpha)``.
The module also provides the product-of-variables machinery used to check
subordination identities: multiplicative convolution, power push-forwards
and the subordination mixture.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import mpmath
import numpy as np
from scipy.special import gammaln

from .errors import CancellationOverflow, DomainError
from .numerics import QuadConfig, default_quad_config, integrate_half_line, sinpi

Density = Callable[[np.ndarray], np.ndarray]

# max |term| / |sum| accepted by density_series
SERIES_GUARD = 1e12
# float summation is trusted up to this max-term/sum ratio
_FLOAT_CANCELLATION = 1e4


@dataclass(frozen=True)
class StableParams:
    """Stability index ``alpha`` in (0, 1) and positivity parameter ``rho`` in (0, 1]."""

    alpha: float
    rho: float = 1.0

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not 0.0 < self.rho <= 1.0:
            raise DomainError(f"rho must lie in (0, 1], got {self.rho}")

    @property
    def one_sided(self) -> bool:
        return self.rho == 1.0


class DensityMethod(str, enum.Enum):
    INTEGRAL = "integral"
    SERIES = "series"
    CLOSED_FORM_LEVY = "closed_form_levy"
    AUTO = "auto"


def _positive(x) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if not np.all(arr > 0):
        raise DomainError("x must be positive")
    return arr


def _shaped(values: np.ndarray, like):
    return float(values) if np.ndim(like) == 0 else values


def levy_density(x):
    """``(2 sqrt(pi))^{-1} x^{-3/2} exp(-1/(4x))``, the alpha = 1/2 one-sided density."""
    x = _positive(x)
    out = np.exp(-1.0 / (4.0 * x) - 1.5 * np.log(x)) / (2.0 * math.sqrt(math.pi))
    return _shaped(out, x)


def levy_density_alt(x):
    """The same shape under the ``exp(-sqrt(2 lambda))`` normalization."""
    x = _positive(x)
    out = np.exp(-1.0 / (2.0 * x)) / np.sqrt(2.0 * math.pi * x ** 3)
    return _shaped(out, x)


# -- series ------------------------------------------------------------------

def _series_terms(p: StableParams, x: float, n: np.ndarray):
    s = sinpi(n * p.rho * p.alpha)
    sign = np.sign(s) * np.where(n % 2 == 1, 1.0, -1.0)
    with np.errstate(divide="ignore"):
        logmag = (np.log(np.abs(s)) + gammaln(n * p.alpha + 1.0) - gammaln(n + 1.0)
                  - (n * p.alpha + 1.0) * math.log(x) - math.log(math.pi))
    return sign, logmag


def _series_sum_mp(p: StableParams, x: float, n_max: int, weight) -> mpmath.mpf:
    alpha, ar = mpmath.mpf(p.alpha), mpmath.mpf(p.rho) * mpmath.mpf(p.alpha)
    log_x = mpmath.log(mpmath.mpf(x))
    acc = mpmath.mpf(0)
    for k in range(1, n_max + 1):
        s = mpmath.sinpi(k * ar)
        if s == 0:
            continue
        term = s * mpmath.exp(mpmath.loggamma(k * alpha + 1) - mpmath.loggamma(k + 1)
                              - (k * alpha + 1) * log_x)
        if weight is not None:
            term *= weight(mpmath.mpf(k))
        acc += term if k % 2 == 1 else -term
    return acc / mpmath.pi


def _series_sum(p: StableParams, x: float, rel_tol: float,
                weight: Callable | None = None) -> float:
    """Sum ``sum_n (-1)^{n+1} sin(n pi rho alpha) Gamma(n alpha+1)/n! x^{-n alpha-1} / pi``.

    ``weight(n)``, if given, multiplies the n-th term.  Float summation is
    used while the terms cancel mildly, mpmath at 40 digits otherwise; the
    result is rejected when the largest term exceeds ``SERIES_GUARD`` times
    the sum.
    """
    # the densities stay far below Gamma(1 + 1/alpha) e^5, so a larger max
    # term would break the guard anyway
    limit = math.log(SERIES_GUARD) + gammaln(1.0 + 1.0 / p.alpha) + 5.0
    n_max = 32
    while True:
        n = np.arange(1.0, n_max + 1.0)
        sign, logmag = _series_terms(p, x, n)
        if weight is not None:
            logmag = logmag + np.log(weight(n))
        finite = logmag[np.isfinite(logmag)]
        m = float(np.max(finite))
        if m > limit:
            raise CancellationOverflow(f"series terms reach exp({m:.1f}) at x={x}")
        if finite[-1] < m + math.log(rel_tol) - 10.0 and np.all(np.diff(finite[-4:]) < 0):
            break
        n_max *= 2
    keep = np.isfinite(logmag)
    total = math.fsum(sign[keep] * np.exp(logmag[keep] - m))
    if total != 0 and 1.0 / abs(total) <= _FLOAT_CANCELLATION:
        return total * math.exp(m)
    with mpmath.workdps(40):
        exact = _series_sum_mp(p, x, n_max, weight)
        ratio = mpmath.inf if exact == 0 else mpmath.exp(m) / abs(exact)
        if ratio > SERIES_GUARD:
            raise CancellationOverflow(
                f"series cancellation {float(ratio):.2e} exceeds {SERIES_GUARD:.0e} at x={x}")
        return float(exact)


def density_series(params: StableParams, x, rel_tol: float = 1e-16):
    """Convergent expansion in ``x^{-alpha}``.

    ``g(x) = (1/pi) sum_{n>=1} (-1)^{n+1} sin(n pi rho alpha) Gamma(n alpha + 1)/n! x^{-n alpha - 1}``

    Raises
    ------
    CancellationOverflow
        When the largest term exceeds ``1e12`` times the sum, which happens
        for small ``x``.
    """
    xs = _positive(x)
    out = np.array([_series_sum(params, float(v), rel_tol) for v in xs.ravel()]).reshape(xs.shape)
    return _shaped(out, xs)


# -- Eq.-(2)-style quadrature --------------------------------------------------

def _density_integral_scalar(p: StableParams, x: float, cfg: QuadConfig) -> float:
    ang = p.rho * p.alpha
    e_minus = complex(float(sinpi(0.5 - ang)), -float(sinpi(ang)))
    e_plus = e_minus.conjugate()
    scale = x ** (-p.alpha)

    def f(y: np.ndarray) -> np.ndarray:
        ya = scale * y ** p.alpha
        return (np.exp(-e_minus * ya - y) - np.exp(-e_plus * ya - y)) / x

    res = integrate_half_line(f, cfg.with_peak(min(x, 1.0)))
    return (res.value / (2j * math.pi)).real


def density_integral(params: StableParams, x, cfg: QuadConfig | None = None):
    """Quadrature of the defining half-line integral; the real part is returned."""
    cfg = cfg or default_quad_config()
    xs = _positive(x)
    out = np.array([_density_integral_scalar(params, float(v), cfg)
                    for v in xs.ravel()]).reshape(xs.shape)
    return _shaped(out, xs)


def _one_sided_via_g(alpha: float, x: np.ndarray) -> np.ndarray:
    from .galpha import delta, scaled_log_positive_axis

    z = x ** (-alpha / (1.0 - alpha))
    log_g = scaled_log_positive_axis(alpha, z) - delta(alpha) * z
    return np.exp(log_g - np.log(x) / (1.0 - alpha))


def density(params: StableParams, x, method: DensityMethod | str = DensityMethod.AUTO,
            cfg: QuadConfig | None = None):
    """Stable density ``g_{alpha, rho}(x)`` for ``x > 0``.

    Parameters
    ----------
    params : StableParams
    x : float or array_like
        Positive abscissae.
    method : {"auto", "series", "integral", "closed_form_levy"}
        ``auto`` uses the series where its cancellation guard passes (large
        ``x``).  Elsewhere the one-sided case goes through the slit-plane
        function on the positive axis, whose angular integral stays accurate
        where the density is exponentially small; other ``rho`` use the
        half-line quadrature.

    Returns
    -------
    float or ndarray
    """
    method = DensityMethod(method)
    xs = _positive(x)
    if method is DensityMethod.CLOSED_FORM_LEVY:
        if params.alpha != 0.5 or params.rho != 1.0:
            raise DomainError("closed_form_levy requires alpha = 1/2 and rho = 1")
        return levy_density(x)
    if method is DensityMethod.SERIES:
        return density_series(params, x)
    if method is DensityMethod.INTEGRAL:
        return density_integral(params, x, cfg)
    if params.one_sided:
        return _shaped(_one_sided_via_g(params.alpha, xs), xs)
    cfg = cfg or default_quad_config()
    flat = xs.ravel()
    out = np.empty(flat.size)
    for i, v in enumerate(flat):
        try:
            out[i] = _series_sum(params, float(v), 1e-16)
        except CancellationOverflow:
            out[i] = _density_integral_scalar(params, float(v), cfg)
    return _shaped(out.reshape(xs.shape), xs)


def density_evaluator(params: StableParams, method: DensityMethod | str = DensityMethod.AUTO
                      ) -> Density:
    """Vectorised ``x -> density(params, x)``, usable as a quadrature integrand."""
    def f(x: np.ndarray) -> np.ndarray:
        return np.asarray(density(params, np.asarray(x, dtype=float), method), dtype=float)
    return f


# -- products, powers and mixtures --------------------------------------------

def _integrate_real_line(h: Callable[[np.ndarray], np.ndarray], cfg: QuadConfig,
                         span: float = 80.0) -> float:
    """``int_{-inf}^{inf} h(s) ds`` for an integrand with one dominant bump."""
    probe = np.linspace(-span, span, 641)
    vals = np.abs(h(probe))
    if not np.any(vals > 0):
        return 0.0
    s0 = float(probe[int(np.argmax(vals))])
    right = integrate_half_line(lambda u: h(s0 + u), cfg)
    left = integrate_half_line(lambda u: h(s0 - u), cfg)
    return float((right.value + left.value).real)


def _masked(f: Density, arg: np.ndarray) -> np.ndarray:
    """``f(arg)`` with under/overflowed arguments contributing zero."""
    out = np.zeros(arg.shape)
    ok = np.isfinite(arg) & (arg > 0)
    if np.any(ok):
        out[ok] = f(arg[ok])
    return out


def mult_convolution(f: Density, g: Density, x: float, cfg: QuadConfig | None = None) -> float:
    """Density at ``x`` of ``X*Y`` for independent ``X ~ f`` and ``Y ~ g``.

    Computes ``int_0^inf f(y) g(x/y) dy / y`` after the substitution ``y = e^s``.
    """
    if not x > 0:
        raise DomainError(f"x must be positive, got {x}")
    cfg = cfg or default_quad_config()
    log_x = math.log(x)

    def h(s: np.ndarray) -> np.ndarray:
        s = np.asarray(s, dtype=float)
        with np.errstate(over="ignore"):
            a = _masked(f, np.exp(s))
            b = _masked(g, np.exp(log_x - s))
        return a * b

    return _integrate_real_line(h, cfg)


def pushforward_power(f: Density, p: float, x):
    """Density of ``X^p`` at ``x`` when ``X`` has density ``f``."""
    if p == 0 or not math.isfinite(p):
        raise DomainError(f"power must be finite and nonzero, got {p}")
    xs = _positive(x)
    y = xs ** (1.0 / p)
    out = abs(1.0 / p) * np.exp((1.0 / p - 1.0) * np.log(xs)) * np.asarray(f(y), dtype=float)
    return _shaped(out, xs)


def power_density(f: Density, p: float) -> Density:
    """Evaluator form of :func:`pushforward_power`."""
    return lambda x: np.asarray(pushforward_power(f, p, np.asarray(x, dtype=float)))


def tilde_density(params: StableParams, x):
    """``x^{-1-alpha} g(1/x)``; decreasing in ``x`` when ``rho <= min(1, 1/(2 alpha))``."""
    xs = _positive(x)
    out = xs ** (-1.0 - params.alpha) * np.asarray(density(params, 1.0 / xs), dtype=float)
    return _shaped(out, xs)


def subordination_mixture(alpha2: float, rho: float, x: float,
                          cfg: QuadConfig | None = None) -> float:
    """Mixture integral expressing ``g_{alpha, rho}`` through ``g_{2 alpha, rho}``.

    Evaluates

        2 alpha int_0^inf g_{2alpha,rho}(y) exp(-(y/x)^{2alpha}/2) y^alpha
                          / (sqrt(2 pi) x^{alpha+1}) dy

    with ``alpha = alpha2 / 2``.  The (1/2)-stable subordinator behind it has
    Laplace transform ``exp(-sqrt(2 lambda))``, so the result is a rescaled
    copy of ``g_{alpha, rho}``; see :func:`subordination_scale`.
    """
    params2 = StableParams(alpha2, rho)
    if not x > 0:
        raise DomainError(f"x must be positive, got {x}")
    cfg = cfg or default_quad_config()
    alpha = 0.5 * alpha2
    g2 = density_evaluator(params2)
    log_x = math.log(x)
    log_pref = math.log(2.0 * alpha) - 0.5 * math.log(2.0 * math.pi) - (alpha + 1.0) * log_x

    def h(s: np.ndarray) -> np.ndarray:
        s = np.asarray(s, dtype=float)
        with np.errstate(over="ignore"):
            y = np.exp(s)
            decay = np.exp(-0.5 * np.exp(alpha2 * (s - log_x)))
            weight = np.exp(log_pref + (alpha + 1.0) * s) * decay
        out = np.zeros(s.shape)
        ok = np.isfinite(y) & (y > 0) & (weight > 0)
        if np.any(ok):
            out[ok] = g2(y[ok]) * weight[ok]
        return out

    return _integrate_real_line(h, cfg)


def subordination_scale(alpha: float) -> float:
    """Scale ``s`` with ``mixture(x) = g_alpha(x / s) / s``, namely ``2^{1/(2 alpha)}``."""
    return 2.0 ** (1.0 / (2.0 * alpha))


def mass(params: StableParams, cfg: QuadConfig | None = None) -> float:
    """Total mass of the density on ``(0, inf)``.

    ``int_0^1`` is integrated numerically in ``log x``; the rest is the
    term-wise integral of the series, ``sum c_n / (n alpha)``.
    """
    cfg = cfg or default_quad_config()
    f = density_evaluator(params)

    def h(u: np.ndarray) -> np.ndarray:
        x = np.exp(-np.asarray(u, dtype=float))
        return _masked(f, x) * x

    head = float(integrate_half_line(h, cfg).value.real)
    # int_1^inf x^{-n alpha - 1} dx = 1 / (n alpha)
    tail = _series_sum(params, 1.0, 1e-16, weight=lambda n: 1 / (n * params.alpha))
    return head + tail


__all__ = [
    "StableParams",
    "DensityMethod",
    "SERIES_GUARD",
    "density",
    "density_series",
    "density_integral",
    "density_evaluator",
    "levy_density",
    "levy_density_alt",
    "mult_convolution",
    "pushforward_power",
    "power_density",
    "tilde_density",
    "subordination_mixture",
    "subordination_scale",
    "mass",
]
