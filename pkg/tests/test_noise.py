import numpy as np
import pytest

from eitqfc.noise import (
    DiffusionMatrix,
    default_window,
    diffusion_matrix,
    eta1,
    eta2,
    langevin_photon_noise,
)
from eitqfc.params import symmetric_params
from eitqfc.spectral import solve_susceptibilities
from eitqfc.transfer import coupling_matrix, expm2, noise_kernels, resolved_coefficients


def midpoint_noise_integral(params, diffusion, kernel, n_omega=2048, n_z=2048):
    """Independent midpoint-rule evaluation of the same windowed integral."""
    window = default_window(params)
    domega = 2 * window / n_omega
    omegas = -window + (np.arange(n_omega) + 0.5) * domega
    dz = 1.0 / n_z
    zs = (np.arange(n_z) + 0.5) * dz
    total = 0.0
    for w in omegas:
        coeffs = solve_susceptibilities(params, float(w))
        raw = expm2(coupling_matrix(coeffs))
        ker = noise_kernels(coeffs, raw, zs)
        k = ker.p if kernel == "P" else ker.q
        form = np.einsum("az,ab,bz->z", k, diffusion.entries, k.conj()).real
        total += domega * dz * form.sum()
    return total / (2 * np.pi)


class TestDiffusionMatrix:
    def test_weak_probe_matrix_is_zero(self):
        d = diffusion_matrix(0.0, 0.0)
        assert np.all(d.entries == 0.0)
        assert d.is_zero

    def test_half_populations(self):
        d = diffusion_matrix(0.5, 0.5)
        assert d.entries[0, 0] == 0.5
        assert np.count_nonzero(d.entries) == 1

    def test_linearity_in_populations(self):
        assert diffusion_matrix(1.0, 0.0).entries[0, 0] == 0.5
        assert diffusion_matrix(0.25, 0.75).entries[0, 0] == 0.5

    def test_population_bounds(self):
        with pytest.raises(ValueError):
            diffusion_matrix(-0.1, 0.0)
        with pytest.raises(ValueError):
            diffusion_matrix(0.0, 1.5)


class TestNoiseIntegrals:
    def test_zero_with_default_diffusion(self):
        p = symmetric_params(4.0)
        assert langevin_photon_noise(p) == 0.0
        assert eta1(p) == 0.0

    def test_zero_in_empty_medium(self):
        p = symmetric_params(0.0)
        d = diffusion_matrix(0.5, 0.5)
        assert langevin_photon_noise(p, d) == 0.0
        assert eta1(p, d) == 0.0

    def test_injected_diffusion_eta1_against_midpoint_oracle(self):
        p = symmetric_params(4.0)
        d = diffusion_matrix(0.5, 0.5)
        value = eta1(p, d)
        assert value > 0.0
        oracle = midpoint_noise_integral(p, d, "Q")
        assert abs(value - oracle) < 1e-6 * oracle

    def test_injected_diffusion_photon_noise_against_midpoint_oracle(self):
        p = symmetric_params(4.0)
        d = diffusion_matrix(0.5, 0.5)
        value = langevin_photon_noise(p, d)
        assert value > 0.0
        oracle = midpoint_noise_integral(p, d, "P")
        assert abs(value - oracle) < 1e-6 * oracle

    def test_bilinearity_in_diffusion(self):
        p = symmetric_params(4.0)
        d = diffusion_matrix(0.5, 0.5)
        doubled = DiffusionMatrix(entries=2 * d.entries)
        assert eta1(p, doubled) == pytest.approx(2 * eta1(p, d), rel=1e-10)
        assert langevin_photon_noise(p, doubled) == pytest.approx(
            2 * langevin_photon_noise(p, d), rel=1e-10
        )


class TestEta2:
    def test_empty_medium_is_identity_channel(self):
        assert eta2(symmetric_params(0.0)) == pytest.approx(0.0, abs=1e-14)

    def test_crossover_value(self):
        assert eta2(symmetric_params(4.0)) == pytest.approx(0.5, abs=1e-13)

    def test_closed_form(self):
        for alpha in (0.0, 4.0, 40.0, 400.0, 17.3):
            expected = 8 * alpha / (4 + alpha) ** 2
            assert abs(eta2(symmetric_params(alpha)) - expected) < 1e-12

    def test_vanishes_at_large_od(self):
        assert abs(eta2(symmetric_params(1e6))) < 1e-5

    def test_commutator_consistency(self):
        for alpha in (0.0, 4.0, 40.0, 400.0):
            p = symmetric_params(alpha)
            _, _, c0, d0 = resolved_coefficients(p, 0.0)
            assert abs(abs(c0) ** 2 + abs(d0) ** 2 + eta2(p) - 1.0) < 1e-12

    def test_nonnegative_over_od_range(self):
        for alpha in np.linspace(0.0, 500.0, 26):
            assert eta2(symmetric_params(float(alpha))) >= 0.0
