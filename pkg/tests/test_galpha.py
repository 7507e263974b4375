import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from stablehcm import galpha as ga
from stablehcm.errors import DomainError, OverflowRisk
from stablehcm.galpha import CutPoint, SlitPoint
from stablehcm.stable_density import StableParams, density

from reference_values import AT_100, G04_CUT_R2, G04_OFF_AXIS, G05_CUT_R4, SMALL_Z, THETA_04

INV_2SQRTPI = 1 / (2 * math.sqrt(math.pi))


def rel(a, b):
    return abs(a - b) / abs(b)


def test_points_validate():
    with pytest.raises(DomainError):
        SlitPoint(0.0)
    with pytest.raises(DomainError):
        SlitPoint(1.0, 1.0)
    with pytest.raises(DomainError):
        CutPoint(1.0, "left")
    p = SlitPoint.from_complex(-1 + 1j)
    assert p.t == pytest.approx(0.75) and p.z == pytest.approx(-1 + 1j)


def test_alpha_domain():
    with pytest.raises(DomainError):
        ga.evaluate(1.0, 1.0)


@pytest.mark.parametrize("method", ["series", "integral", "auto"])
def test_half_positive_axis(method):
    expected = INV_2SQRTPI * 0.5 * math.exp(-1.0)
    assert ga.evaluate(0.5, SlitPoint(4.0), method) == pytest.approx(expected, rel=1e-10)
    assert expected == pytest.approx(0.051888, abs=1e-6)


def test_half_closed_form_everywhere():
    rng = np.random.default_rng(1)
    for r, t in zip(np.exp(rng.uniform(-3, 3, 20)), rng.uniform(-0.95, 0.95, 20)):
        z = SlitPoint(r, t).z
        expected = INV_2SQRTPI * z ** -0.5 * np.exp(-z / 4)
        assert rel(ga.evaluate(0.5, SlitPoint(r, t)), expected) < 1e-9


@given(r=st.floats(0.01, 30), t=st.floats(-0.99, 0.99))
def test_conjugation(r, t):
    # the float series runs up to 1e4 cancellation before mpmath takes over,
    # so rounding here means about 1e4 * eps
    a = ga.evaluate_log(0.4, SlitPoint(r, t))
    b = ga.evaluate_log(0.4, SlitPoint(r, -t))
    assert a.log_mod == pytest.approx(b.log_mod, rel=1e-11, abs=1e-11)
    assert a.phase_over_pi == pytest.approx(-b.phase_over_pi, abs=1e-11)


def test_conjugation_example():
    a = ga.evaluate(0.4, SlitPoint(1, 0.25))
    b = ga.evaluate(0.4, SlitPoint(1, -0.25))
    assert abs(a - b.conjugate()) <= 4 * np.finfo(float).eps * abs(a)


def test_off_axis_cross_method():
    p = SlitPoint(2.0, 0.6)
    s = ga.evaluate(0.4, p, "series")
    i = ga.evaluate(0.4, p, "integral")
    assert abs(s - i) / abs(s) < 1e-8
    assert rel(s, G04_OFF_AXIS) < 1e-12


def test_asymptotic_method():
    c = ga.constants(0.4)
    z = 2e5
    v = ga.evaluate_log(0.4, SlitPoint(z), "asymptotic")
    assert v.log_mod == pytest.approx(math.log(c.c_adopted) - 0.5 * math.log(z) - c.delta * z)
    assert ga.choose_method(0.4, SlitPoint(z)) == "asymptotic"


def test_overflow_guard():
    big = ga.boundary(0.4, CutPoint(5000.0))
    assert big.log_mod > 700
    with pytest.raises(OverflowRisk):
        big.to_complex()


@pytest.mark.parametrize("alpha", [0.35, 0.4, 0.45, 0.5])
def test_value_at_100_against_oracle(alpha):
    assert rel(ga.evaluate(alpha, 100.0), AT_100[alpha]) < 1e-9


@pytest.mark.parametrize("alpha", [0.35, 0.4, 0.45, 0.5])
def test_growth_decay_split(alpha):
    d = ga.delta(alpha)
    axis = [ga.evaluate_log(alpha, SlitPoint(x), "integral").log_mod + 0.5 * math.log(x) + d * x
            for x in (100.0, 200.0)]
    cut = [ga.boundary(alpha, CutPoint(x)).log_mod + 0.5 * math.log(x) - d * x
           for x in (100.0, 200.0)]
    assert abs(math.expm1(axis[1] - axis[0])) < 0.02
    assert abs(math.expm1(cut[1] - cut[0])) < 0.02
    assert math.exp(axis[1]) == pytest.approx(ga.constants(alpha).c_adopted, rel=0.01)


# -- constants ---------------------------------------------------------------------

def test_constants_at_half():
    c = ga.constants(0.5)
    assert c.delta == 0.25
    assert c.c_paper == pytest.approx(2 ** -0.5, rel=1e-15)
    assert c.c_adopted == pytest.approx(INV_2SQRTPI, rel=1e-15)


def test_delta_positive_continuous():
    a = np.linspace(0.1, 0.9, 81)
    d = np.array([ga.delta(x) for x in a])
    assert np.all(d > 0) and np.max(np.abs(np.diff(d))) < 0.02


def test_small_z_constant():
    assert ga.small_z_constant(0.5) == pytest.approx(INV_2SQRTPI, rel=1e-15)
    assert ga.small_z_constant_printed(0.5) == 0.0
    for a in np.linspace(0.05, 0.95, 19):
        assert ga.small_z_constant(a) > 0


@pytest.mark.parametrize("alpha", [0.35, 0.4, 0.45])
def test_small_z_limit(alpha):
    x = 1e-5
    measured = x ** alpha * ga.evaluate(alpha, x).real
    assert rel(measured, SMALL_Z[alpha]) < 1e-12
    # first correction is O(x^{1-alpha})
    assert rel(measured, ga.small_z_constant(alpha)) < 1e-3


# -- the cut ------------------------------------------------------------------------

def test_cut_against_oracle():
    assert rel(ga.boundary(0.4, CutPoint(2.0)).to_complex(), G04_CUT_R2) < 1e-12
    v = ga.boundary(0.5, CutPoint(4.0)).to_complex()
    assert rel(v, G05_CUT_R4) < 1e-12
    assert rel(v, -1j * INV_2SQRTPI * 0.5 * math.e) < 1e-12


def test_cut_cross_method():
    s = ga.boundary(0.4, CutPoint(2.0), "series").to_complex()
    i = ga.boundary(0.4, CutPoint(2.0), "integral").to_complex()
    assert abs(s - i) / abs(s) < 1e-8


def test_lower_side_is_conjugate():
    up = ga.boundary(0.4, CutPoint(3.0, "upper"))
    lo = ga.boundary(0.4, CutPoint(3.0, "lower"))
    assert lo.phase_over_pi == -up.phase_over_pi and lo.log_mod == up.log_mod


@pytest.mark.parametrize("side,sign", [("upper", 1), ("lower", -1)])
def test_boundary_consistency(side, sign):
    # the gap is pi*eps*|z G'/G| to first order, so it shrinks linearly in eps
    for r in (0.5, 2.0, 10.0):
        edge = ga.boundary(0.4, CutPoint(r, side)).to_complex()
        gaps = [abs(ga.evaluate(0.4, SlitPoint(r, sign * (1 - eps))) - edge) / abs(edge)
                for eps in (1e-4, 1e-5, 1e-6)]
        assert gaps[0] < 1e-2
        assert gaps[1] / gaps[0] == pytest.approx(0.1, rel=0.05)
        assert gaps[2] < 1e-4


@pytest.mark.parametrize("alpha", [1 / 3, 0.4, 0.45])
def test_sign_laws_on_cut(alpha):
    r = np.geomspace(1e-3, 50, 60)
    vals = [ga.boundary(alpha, CutPoint(x)) for x in r]
    im = np.array([v.to_complex().imag for v in vals])
    assert np.all(im < 0)
    assert np.all(np.diff(-(r ** alpha) * im) > 0)
    re = np.array([x ** alpha * ga.cut_real_part(alpha, x) for x in r])
    assert np.all(np.diff(re) < 0)


def test_cut_real_part_matches_polar_form():
    for r in (0.1, 1.0, 5.0):
        assert rel(ga.cut_real_part(0.4, r), ga.boundary(0.4, CutPoint(r)).to_complex().real) < 1e-10


def test_theta_values():
    for r, ref in THETA_04.items():
        assert ga.theta_at(0.4, r).theta == pytest.approx(ref, abs=1e-12)
    assert abs(ga.theta_at(0.4, 1e-6).theta - 0.4) < 1e-3
    assert abs(ga.theta_at(0.4, 50.0).theta - 0.5) < 1e-3


def test_theta_half_is_constant():
    th = ga.theta_array(0.5, np.geomspace(1e-3, 100, 30))
    assert np.allclose(th, 0.5, atol=1e-13)


@given(alpha=st.floats(0.1, 0.9), r=st.floats(1e-3, 60))
def test_theta_in_unit_interval(alpha, r):
    assert 0 < ga.theta_at(alpha, r).theta < 1


# -- links with the density ----------------------------------------------------------

def test_from_g_half():
    assert ga.from_g(0.5, 1.0) == pytest.approx(INV_2SQRTPI * math.exp(-0.25), rel=1e-12)


@pytest.mark.parametrize("x", [0.5, 1.0, 2.0])
def test_round_trip(x):
    alpha = 0.4
    g = ga.to_g(alpha, x)
    assert rel(g, float(density(StableParams(alpha), x, "integral"))) < 1e-9
    # the two change-of-variables relations are mutual inverses
    y = x ** (-alpha / (1 - alpha))
    assert rel(ga.from_g(alpha, y), ga.evaluate(alpha, y).real) < 1e-9
    assert rel(x ** (-1 / (1 - alpha)) * ga.from_g(alpha, y), g) < 1e-9
