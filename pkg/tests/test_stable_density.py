import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from stablehcm.errors import CancellationOverflow, DomainError
from stablehcm.stable_density import (
    DensityMethod,
    StableParams,
    density,
    density_evaluator,
    density_integral,
    density_series,
    levy_density,
    levy_density_alt,
    mass,
    mult_convolution,
    power_density,
    pushforward_power,
    subordination_mixture,
    subordination_scale,
    tilde_density,
)

from oracles import bessel_product_quad
from reference_values import G_025, G_04, G_04_05_AT_10, TWO_K0_2


def test_params_validation():
    with pytest.raises(DomainError):
        StableParams(1.2)
    with pytest.raises(DomainError):
        StableParams(0.4, 0.0)
    assert StableParams(0.4).rho == 1.0


def test_levy_normalization_matches_defining_integral():
    x = np.geomspace(0.05, 50, 30)
    p = StableParams(0.5)
    ref = levy_density(x)
    assert np.max(np.abs(density_integral(p, x) / ref - 1)) < 1e-10
    assert np.max(np.abs(density_series(p, x[x > 0.2]) / ref[x > 0.2] - 1)) < 1e-10
    # the exp(-sqrt(2 lambda)) variant is a different law
    assert abs(levy_density_alt(1.0) / levy_density(1.0) - 1) > 0.1


def test_levy_value_at_one():
    v = density(StableParams(0.5), 1.0)
    assert v == pytest.approx(math.exp(-0.25) / (2 * math.sqrt(math.pi)), rel=1e-12)
    assert v == pytest.approx(0.2197, abs=1e-4)
    assert density(StableParams(0.5), 1.0, "closed_form_levy") == pytest.approx(v, rel=1e-14)


def test_closed_form_only_at_half():
    with pytest.raises(DomainError):
        density(StableParams(0.4), 1.0, DensityMethod.CLOSED_FORM_LEVY)


def test_series_vs_integral_half_at_four():
    p = StableParams(0.5)
    assert density_series(p, 4.0) / density_integral(p, 4.0) == pytest.approx(1, rel=1e-9)


def test_series_leading_term_at_large_x():
    x = 1e8
    lead = x ** -1.5 / (2 * math.sqrt(math.pi))
    assert density_series(StableParams(0.5), x) / lead == pytest.approx(1, rel=1e-4)


def test_asymmetric_series_vs_integral():
    p = StableParams(0.4, 0.5)
    s, i = density_series(p, 10.0), density_integral(p, 10.0)
    assert s / i == pytest.approx(1, rel=1e-8)
    assert s == pytest.approx(G_04_05_AT_10, rel=1e-12)


@pytest.mark.parametrize("x", [0.5, 1.0, 2.0])
def test_one_sided_against_frozen_oracle(x):
    for method in ("auto", "integral", "series"):
        assert density(StableParams(0.4), x, method) == pytest.approx(G_04[x], rel=1e-10)


@pytest.mark.parametrize("alpha", [0.3, 0.4, 0.5])
def test_cross_method_agreement(alpha):
    p = StableParams(alpha)
    worst = 0.0
    for x in np.geomspace(0.1, 50, 25):
        try:
            s = density_series(p, x)
        except CancellationOverflow:
            continue
        i = density_integral(p, x)
        worst = max(worst, abs(s - i) / abs(i))
    assert worst <= 1e-8


def test_series_guard_trips_for_small_x():
    with pytest.raises(CancellationOverflow):
        density_series(StableParams(0.4), 1e-3)


@settings(max_examples=25)
@given(alpha=st.floats(0.1, 0.9), frac=st.floats(0.05, 1.0), logx=st.floats(-4, 4))
def test_positivity(alpha, frac, logx):
    # rho alpha <= 1/2 keeps the quadrature free of exponential growth
    p = StableParams(alpha, frac * min(1.0, 0.5 / alpha))
    v = density(p, math.exp(logx))
    assert v >= -1e-12 * max(1.0, abs(v))


def test_small_x_limit_is_zero():
    vals = density(StableParams(0.4), np.array([1e-2, 1e-3, 1e-4]))
    assert vals[-1] < 1e-30 and np.all(np.diff(vals) < 0)


def test_domain_errors():
    with pytest.raises(DomainError):
        density(StableParams(0.4), 0.0)
    with pytest.raises(DomainError):
        density(StableParams(0.4), -1.0)


@pytest.mark.parametrize("alpha", [0.3, 0.4])
def test_mass_one_sided(alpha):
    assert mass(StableParams(alpha)) == pytest.approx(1.0, abs=1e-6)


def test_mass_asymmetric_is_rho():
    # never asserted by the CLI; the positivity parameter is the mass
    assert mass(StableParams(0.4, 0.5)) == pytest.approx(0.5, abs=1e-6)


# -- products and powers --------------------------------------------------------------

def test_product_of_exponentials():
    assert bessel_product_quad(1.0) == pytest.approx(TWO_K0_2, rel=1e-14)
    e = lambda y: np.exp(-y)
    assert mult_convolution(e, e, 1.0) == pytest.approx(TWO_K0_2, rel=1e-10)


def test_product_of_disjoint_supports():
    u = lambda y: ((y >= 1) & (y <= 2)).astype(float)
    assert mult_convolution(u, u, 1.0) == 0.0


def test_subordination_lemma():
    half = density_evaluator(StableParams(0.5))
    half_sq = power_density(half, 2.0)
    for x, ref in G_025.items():
        assert density(StableParams(0.25), x) == pytest.approx(ref, rel=1e-10)
        assert mult_convolution(half, half_sq, x) == pytest.approx(ref, rel=1e-6)


def test_pushforward_examples():
    e = lambda y: np.exp(-y)
    x = np.array([0.3, 1.0, 2.0])
    assert np.allclose(pushforward_power(e, 1.0, x), e(x), rtol=1e-15)
    assert pushforward_power(e, -1.0, 2.0) == pytest.approx(0.25 * math.exp(-0.5), rel=1e-14)
    with pytest.raises(DomainError):
        pushforward_power(e, 0.0, 1.0)


@given(p=st.floats(0.3, 3.0).map(lambda v: v if v != 0 else 1.0), sign=st.sampled_from([-1, 1]))
@settings(max_examples=10)
def test_pushforward_preserves_mass(p, sign):
    from scipy.integrate import quad
    f = lambda y: np.exp(-y)
    q = sign * p
    total = quad(lambda s: float(pushforward_power(f, q, math.exp(s))) * math.exp(s), -60, 60,
                 limit=400)[0]
    assert total == pytest.approx(1.0, abs=1e-6)


# -- tilde density and the mixture ------------------------------------------------------------

@pytest.mark.parametrize("alpha,rho", [(0.3, 0.5), (0.3, 1.0), (0.4, 0.5), (0.4, 1.0),
                                       (0.49, 0.5), (0.49, 1.0)])
def test_tilde_density_decreasing(alpha, rho):
    x = np.geomspace(1e-2, 1e2, 200)
    v = tilde_density(StableParams(alpha, rho), x)
    assert np.max(np.diff(v)) <= 1e-10 * np.max(v)


def test_tilde_density_half_closed_form():
    x = np.geomspace(0.1, 10, 7)
    expected = np.exp(-x / 4) / (2 * math.sqrt(math.pi))
    assert np.allclose(tilde_density(StableParams(0.5), x), expected, rtol=1e-12)


def test_tilde_density_fixed_point():
    p = StableParams(0.4, 0.7)
    assert tilde_density(p, 1.0) == pytest.approx(density(p, 1.0), rel=1e-14)


def test_subordination_mixture_scale_is_constant():
    alpha = 0.4
    s = subordination_scale(alpha)
    ratios = []
    for x in (0.3, 1.0, 3.0, 10.0):
        mix = subordination_mixture(2 * alpha, 1.0, x)
        assert mix > 0
        ratios.append(mix * s / density(StableParams(alpha), x / s))
    assert np.allclose(ratios, 1.0, rtol=1e-6)


def test_subordination_mixture_decays():
    vals = [subordination_mixture(0.8, 1.0, x) for x in (10.0, 1e3, 1e5)]
    assert vals[0] > vals[1] > vals[2] > 0 and vals[2] < 1e-6
