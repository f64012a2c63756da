"""Response-curve and Monte Carlo oracle tests."""

import math

import numpy as np
import pytest

from targetmark import (
    InfoTechnology,
    ParameterError,
    informed_fraction_monte_carlo,
)


def bisect_inverse(tech, y, lo=1e-12, hi=1e6, iters=200):
    """Independent bisection oracle for phi'^-1 on s = sqrt(a)."""
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if tech.phi_prime(mid * mid) > y:
            lo = mid
        else:
            hi = mid
    s = 0.5 * (lo + hi)
    return s * s


class TestPhi:
    def test_zero_intensity_means_nobody_informed(self):
        assert InfoTechnology(0.1).phi(0.0) == 0.0

    def test_base_case_informed_share(self):
        # units sold / potential buyers in the base case: 42.080 / 220
        assert InfoTechnology(0.1).phi(4.06) == pytest.approx(42.080 / 220.0, abs=5e-5)

    def test_saturates_at_one(self):
        assert InfoTechnology(0.1).phi(1e9) == pytest.approx(1.0, abs=1e-6)

    def test_negative_intensity_rejected(self):
        with pytest.raises(ParameterError):
            InfoTechnology(0.1).phi(-0.5)

    def test_lambda_domain(self):
        for bad in (0.0, 1.0, -0.2, 1.5, float("nan")):
            with pytest.raises(ParameterError):
                InfoTechnology(bad)

    def test_array_input(self):
        tech = InfoTechnology(0.3)
        a = np.array([0.0, 1.0, 4.0])
        out = tech.phi(a)
        assert out.shape == (3,)
        assert out[0] == 0.0
        assert np.all(np.diff(out) > 0)

    def test_monotone_on_random_pairs(self):
        rng = np.random.default_rng(7)
        tech = InfoTechnology(0.1)
        for _ in range(200):
            a, b = np.sort(rng.uniform(0.0, 200.0, size=2))
            if a == b:
                continue
            assert tech.phi(a) < tech.phi(b)

    def test_concave_on_random_pairs(self):
        rng = np.random.default_rng(8)
        tech = InfoTechnology(0.25)
        for _ in range(200):
            a, b = np.sort(rng.uniform(1e-3, 200.0, size=2))
            if b - a < 1e-9:
                continue
            midpoint_value = tech.phi(0.5 * (a + b))
            assert midpoint_value > 0.5 * (tech.phi(a) + tech.phi(b))


class TestPhiPrime:
    def test_base_case_marginal_value(self):
        # frozen from the central-difference oracle below
        assert InfoTechnology(0.1).phi_prime(4.06) == pytest.approx(0.021144, abs=1e-6)

    def test_vanishes_at_large_intensity(self):
        assert InfoTechnology(0.1).phi_prime(1e9) < 1e-6

    def test_strictly_decreasing(self):
        tech = InfoTechnology(0.1)
        assert tech.phi_prime(1.0) < tech.phi_prime(0.25)

    def test_zero_and_negative_rejected(self):
        tech = InfoTechnology(0.1)
        for bad in (0.0, -1.0):
            with pytest.raises(ParameterError):
                tech.phi_prime(bad)

    @pytest.mark.parametrize("lam", [0.1, 0.2, 0.5])
    def test_matches_central_difference(self, lam):
        tech = InfoTechnology(lam)
        for a in np.geomspace(0.01, 100.0, 60):
            h = 1e-6 * max(1.0, a)
            fd = (tech.phi(a + h) - tech.phi(a - h)) / (2.0 * h)
            assert abs(tech.phi_prime(a) - fd) <= 1e-6


class TestInversePhiPrime:
    def test_roundtrip_identity(self):
        tech = InfoTechnology(0.1)
        assert tech.inverse_phi_prime(tech.phi_prime(6.13)) == pytest.approx(6.13, abs=1e-8)

    def test_matches_bisection_oracle(self):
        tech = InfoTechnology(0.1)
        assert tech.inverse_phi_prime(0.021144) == pytest.approx(
            bisect_inverse(tech, 0.021144), rel=1e-9
        )
        assert tech.inverse_phi_prime(0.021144) == pytest.approx(4.06, abs=0.01)

    def test_huge_marginal_target_forces_tiny_intensity(self):
        assert InfoTechnology(0.1).inverse_phi_prime(1e6) < 1e-6

    def test_domain_errors(self):
        tech = InfoTechnology(0.1)
        for bad in (0.0, -1.0, float("nan"), float("inf")):
            with pytest.raises(ParameterError):
                tech.inverse_phi_prime(bad)

    @pytest.mark.parametrize("lam", [0.1, 0.2, 0.5])
    def test_residual_over_log_grid(self, lam):
        tech = InfoTechnology(lam)
        for y in np.geomspace(1e-6, 1e3, 40):
            a = tech.inverse_phi_prime(y)
            assert abs(tech.phi_prime(a) - y) <= 1e-12 * max(1.0, y)


class TestMonteCarlo:
    def test_zero_messages_means_zero_estimate(self):
        result = informed_fraction_monte_carlo(0.1, 0, 10_000, seed=1)
        assert result.estimate == 0.0

    def test_near_certain_exposure(self):
        result = informed_fraction_monte_carlo(1.0 - 1e-15, 1, 10_000, seed=2)
        assert result.estimate == pytest.approx(1.0, abs=1e-9)

    def test_base_grid_point_within_three_sigma(self):
        result = informed_fraction_monte_carlo(0.1, 4, 1_000_000, seed=3)
        analytic = 1.0 - 0.9**4
        assert abs(result.estimate - analytic) <= 3.0 * result.std_error

    def test_deterministic_given_seed(self):
        first = informed_fraction_monte_carlo(0.2, 5, 50_000, seed=11)
        second = informed_fraction_monte_carlo(0.2, 5, 50_000, seed=11)
        assert first == second

    def test_preconditions(self):
        with pytest.raises(ParameterError):
            informed_fraction_monte_carlo(0.1, 4, 0, seed=0)
        with pytest.raises(ParameterError):
            informed_fraction_monte_carlo(0.1, -1, 100, seed=0)
        with pytest.raises(ParameterError):
            informed_fraction_monte_carlo(1.5, 4, 100, seed=0)

    @pytest.mark.parametrize("lam", [0.1, 0.2, 0.5])
    def test_agreement_with_binomial_complement(self, lam):
        # yardstick is the analytic binomial standard error: the sample one
        # degenerates to 0 when every consumer happens to be informed
        trials = 1_000_000
        for messages in range(1, 21):
            result = informed_fraction_monte_carlo(
                lam, messages, trials, seed=1000 + messages + int(lam * 1000) * 37
            )
            analytic = 1.0 - (1.0 - lam) ** messages
            sigma = math.sqrt(analytic * (1.0 - analytic) / trials)
            assert abs(result.estimate - analytic) <= 3.0 * sigma, (
                f"lam={lam} messages={messages}"
            )
