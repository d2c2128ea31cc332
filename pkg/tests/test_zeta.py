import math

import mpmath
import numpy as np
import pytest

from veribench import zeta
from veribench.errors import DomainError


def series_zeta2(terms=10**6):
    """Independent oracle: partial sum of 1/k^2 plus the integral tail."""
    k = np.arange(1, terms + 1, dtype=float)
    return float(np.sum(1 / k**2)) + 1 / terms - 1 / (2 * terms**2)


def test_integral_at_two():
    assert abs(zeta.zeta_integral(2, 1e-6) - series_zeta2()) < 1e-4
    assert abs(zeta.zeta_integral(2) - math.pi**2 / 6) < 1e-8


def test_integral_at_half():
    assert zeta.zeta_integral(0.5, 1e-4).real == pytest.approx(-1.46035, abs=1e-3)
    assert abs(zeta.zeta_integral(0.5) - complex(mpmath.zeta(0.5))) < 1e-7


@pytest.mark.parametrize("s", [1, 0, -1 + 2j])
def test_integral_domain(s):
    with pytest.raises(DomainError):
        zeta.zeta_integral(s)


def test_em_matches_integral_at_two():
    assert abs(zeta.zeta_em(2) - zeta.zeta_integral(2)) < 1e-6


def test_em_against_mpmath():
    for s in (0.5 + 14.134725j, 0.3 + 30j, 1.7 - 3j, 0.5 + 499j):
        assert abs(zeta.zeta_em(s) - complex(mpmath.zeta(s))) < 1e-7


def test_em_conjugate_symmetry():
    s = 0.7 + 12.5j
    assert zeta.zeta_em(s.conjugate()) == pytest.approx(zeta.zeta_em(s).conjugate(), abs=1e-12)


def test_em_domain():
    for s in (1, 2.5, -0.1 + 3j, 0.5 + 501j):
        with pytest.raises(DomainError):
            zeta.zeta_em(s)


def test_evaluator_agreement_sampled():
    rng = np.random.default_rng(3)
    tol = 1e-6
    for _ in range(50):
        s = complex(rng.uniform(0.3, 2), rng.uniform(-30, 30))
        vals, err = zeta.zeta_em_with_error(s)
        assert abs(zeta.zeta_integral(s, tol) - vals[0]) <= tol + err[0]


def test_theta_at_100():
    th = zeta.theta(100)
    assert th == pytest.approx(87.97, abs=5e-3)
    assert th == pytest.approx(float(mpmath.siegeltheta(100)), abs=1e-10)
    assert th / math.pi + 1 == pytest.approx(29.0, abs=0.01)


@pytest.mark.parametrize("t", [2, 3.3, 7, 9.999, 10, 40, 250, 500])
def test_theta_against_log_gamma(t):
    ref = float(mpmath.im(mpmath.loggamma(0.25 + 0.5j * t)) - t / 2 * mpmath.log(mpmath.pi))
    assert zeta.theta(t) == pytest.approx(ref, abs=1e-9)


def test_theta_monotone_above_10():
    ts = np.linspace(10, 500, 5000)
    assert np.all(np.diff(zeta.theta(ts)) > 0)


def test_theta_domain():
    with pytest.raises(DomainError):
        zeta.theta(1.9)


@pytest.mark.parametrize("t", [20, 30, 40])
def test_z_modulus(t):
    assert abs(zeta.z_function(t).z) == pytest.approx(abs(zeta.zeta_em(0.5 + 1j * t)), abs=1e-6)


def test_z_modulus_at_25():
    assert abs(zeta.z_function(25).z) == pytest.approx(abs(zeta.zeta_em(0.5 + 25j)), abs=1e-9)


def test_first_zero_bracket_and_bisection():
    a, b = zeta.z_function(14.0).z, zeta.z_function(14.25).z
    assert a * b < 0
    lo, hi = 14.0, 14.25
    for _ in range(40):
        mid = (lo + hi) / 2
        if zeta.z_function(mid).z * a > 0:
            lo = mid
        else:
            hi = mid
    assert lo == pytest.approx(14.134725, abs=1e-6)


def test_realness_health_scan():
    ts = np.linspace(2, 500, 4000)
    z, im, err = zeta.z_values(ts)
    assert np.max(np.abs(im)) < 1e-6
    assert np.all(np.abs(im) <= 10 * err)


def test_z_domain():
    with pytest.raises(DomainError):
        zeta.z_function(1.0)


@pytest.mark.parametrize("T,count", [(20, 1), (50, 10), (100, 29)])
def test_sign_change_counts(T, count):
    assert zeta.count_sign_changes(T).sign_changes == count


def test_fine_grid_oracle_agrees_at_50():
    ts = np.arange(2, 50, 0.005)
    z, _, _ = zeta.z_values(ts)
    assert int(np.sum(np.sign(z[1:]) != np.sign(z[:-1]))) == 10


def test_no_sign_change_below_10():
    zeros, unresolved, _ = zeta.scan_sign_changes(2.0, 10.0)
    assert zeros == [] and unresolved == 0


def test_zero_locations_against_mpmath():
    rep = zeta.count_sign_changes(50)
    for k, z in enumerate(rep.zeros, start=1):
        assert z == pytest.approx(float(mpmath.zetazero(k).imag), abs=2e-6)


def test_argument_principle_count_matches():
    for T in (20, 30, 50, 100):
        rep = zeta.count_sign_changes(T)
        assert round(rep.argument_count) == rep.sign_changes
        assert abs(rep.argument_count - round(rep.argument_count)) < 1e-6


def test_main_term_estimate_invariant():
    # stated invariant: sign changes equal round(theta(T)/pi + 1) at T = 30, 50, 100
    for T in (30, 50, 100):
        rep = zeta.count_sign_changes(T)
        assert rep.sign_changes == round(rep.argument_estimate), (T, rep.sign_changes, rep.argument_estimate)


def test_count_domain():
    with pytest.raises(DomainError):
        zeta.count_sign_changes(5)
    with pytest.raises(DomainError):
        zeta.count_sign_changes(50, 0.5)


def test_report_json_and_samples_csv():
    rep = zeta.count_sign_changes(20)
    assert rep.to_json().startswith('{"T":20.0,"sign_changes":1,')
    lines = zeta.z_samples_csv(2, 3, 0.5).splitlines()
    assert lines[0] == "t,Z(t)" and len(lines) == 4
