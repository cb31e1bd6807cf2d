"""Smoke tests for the python bindings; the deep numerics are covered by the
C++ suites, so these only exercise the binding surface."""

import math

import pytest

import dzeta


def test_free_gaussian_partition_function():
    params = dzeta.ModelParams(m0_sq=1.0, lambda_=0.0)
    z = dzeta.partition_function(params, 0.0)
    assert z == pytest.approx(math.sqrt(2.0 * math.pi), rel=1e-10)


def test_quenched_free_energy_closed_form():
    params = dzeta.ModelParams(m0_sq=1.0, lambda_=0.0)
    dist = dzeta.DisorderDistribution.uniform(1.0)
    report = dzeta.quenched_free_energy(
        params, dist, dzeta.SeriesConfig(a=1.0, k_max=40), attach_oracle=True
    )
    expected = 0.5 * math.log(2.0 * math.pi) + 1.0 / 6.0
    assert report.series_converged
    assert report.total == pytest.approx(expected, abs=1e-7)
    assert report.oracle_value == pytest.approx(expected, abs=1e-8)


def test_phi_normalization_and_annealed_route():
    params = dzeta.ModelParams()
    dist = dzeta.DisorderDistribution.truncated_gaussian(sigma=1.0, radius=1.0)
    assert dzeta.phi(0.0, params, dist) == pytest.approx(1.0, abs=1e-12)
    annealed = dzeta.annealed_value(params, dist)
    log_mean_z, _ = dzeta.moment(params, dist, 1)
    assert annealed == pytest.approx(-log_mean_z, abs=1e-12)


def test_moment_growth_bound():
    params = dzeta.ModelParams(m0_sq=1.0, lambda_=1.0)
    dist = dzeta.DisorderDistribution.uniform(1.0)
    report = dzeta.verify_moment_growth(params, dist, 8)
    assert report.ok
    assert all(row.margin > 0.0 for row in report.rows)


def test_mc_is_deterministic_per_seed():
    params = dzeta.ModelParams()
    dist = dzeta.DisorderDistribution.finite_atoms([(-1.0, 0.5), (1.0, 0.5)])
    mc = dzeta.McConfig(n_samples=2000, seed=99)
    a = dzeta.quenched_mc(params, dist, mc)
    b = dzeta.quenched_mc(params, dist, mc)
    assert a.estimate == b.estimate
    assert a.std_error == b.std_error


def test_non_compact_disorder_rejected():
    with pytest.raises(ValueError):
        dzeta.DisorderDistribution.uniform(math.inf)


def test_exp_integral_tail_bound():
    for x in (0.5, 1.0, 5.0, 20.0):
        assert dzeta.exp_integral_e1(x) <= math.exp(-x) / x
