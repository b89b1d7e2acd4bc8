import math

import numpy as np
import pytest

from eitqfc.errors import DimensionTooSmall, TruncationOverflow
from eitqfc.params import symmetric_params
from eitqfc.states import (
    Coherent,
    Fock,
    Squeezed,
    apply_loss_channel,
    beam_splitter_oracle,
    channel_amplitude,
    coherent_dm,
    coherent_fidelity,
    density_matrix_coherent,
    fidelity,
    fock_dm,
    input_variances,
    output_variance,
    output_variances,
    trace_distance,
    validate_density_matrix,
)

CE_HEADLINE = (200 / 204) ** 2  # conversion efficiency at optical depth 200


class TestChannelAmplitude:
    def test_headline_od(self):
        c0 = channel_amplitude(symmetric_params(200.0))
        assert abs(c0 - 200 / 204) < 1e-13

    def test_empty_medium(self):
        assert abs(channel_amplitude(symmetric_params(0.0))) < 1e-14

    def test_crossover(self):
        assert abs(channel_amplitude(symmetric_params(4.0)) - 0.5) < 1e-13


class TestApplyLossChannel:
    def test_single_photon_split(self):
        out = apply_loss_channel(fock_dm(1, 6), math.sqrt(0.96))
        assert out[0, 0].real == pytest.approx(0.04, abs=1e-12)
        assert out[1, 1].real == pytest.approx(0.96, abs=1e-12)
        assert np.allclose(out - np.diag(np.diag(out)), 0.0, atol=1e-14)

    def test_vacuum_fixed_point(self):
        for c0 in (0.0, 0.3 + 0.4j, 1.0):
            out = apply_loss_channel(fock_dm(0, 5), c0)
            assert np.allclose(out, fock_dm(0, 5), atol=1e-14)

    def test_two_photon_binomial(self):
        out = apply_loss_channel(fock_dm(2, 8), math.sqrt(0.5))
        assert np.allclose(np.diag(out).real[:3], [0.25, 0.5, 0.25], atol=1e-13)

    def test_output_is_valid_density_matrix(self):
        for rho, c0 in (
            (fock_dm(3, 12), 0.7),
            (coherent_dm(1.2, 20), 0.9 * np.exp(0.3j)),
        ):
            out = apply_loss_channel(rho, c0)
            validate_density_matrix(out, trace_tol=1e-9)

    def test_trace_preserved(self):
        out = apply_loss_channel(coherent_dm(1.5, 24), 0.55)
        assert abs(np.trace(out).real - 1.0) < 1e-9

    def test_truncation_overflow_guard(self):
        with pytest.raises(TruncationOverflow):
            apply_loss_channel(fock_dm(11, 12), 0.5)
        with pytest.raises(TruncationOverflow):
            apply_loss_channel(fock_dm(10, 12), 0.5)

    def test_amplitude_bound(self):
        with pytest.raises(ValueError):
            apply_loss_channel(fock_dm(1, 6), 1.2)


class TestBeamSplitterOracle:
    def test_identity_channel(self):
        rho = coherent_dm(0.8, 16)
        out = beam_splitter_oracle(rho, 1.0, 16)
        assert np.max(np.abs(out - rho)) < 1e-12

    def test_full_loss(self):
        out = beam_splitter_oracle(fock_dm(3, 10), 0.0, 10)
        assert out[0, 0].real == pytest.approx(1.0, abs=1e-12)

    def test_coherent_transmission(self):
        out = beam_splitter_oracle(coherent_dm(1.0, 20), 0.9612, 20)
        target = coherent_dm(math.sqrt(0.9612), 20)
        assert trace_distance(out, target) < 1e-8

    def test_dimension_guard(self):
        with pytest.raises(DimensionTooSmall):
            beam_splitter_oracle(fock_dm(10, 12), 0.5, 12)
        with pytest.raises(DimensionTooSmall):
            beam_splitter_oracle(fock_dm(3, 24), 0.5, 4)

    def test_transmissivity_bounds(self):
        with pytest.raises(ValueError):
            beam_splitter_oracle(fock_dm(1, 8), 1.5, 8)


class TestChannelEquivalence:
    def test_fock_inputs(self):
        dim = 24
        for n in range(6):
            rho = fock_dm(n, dim)
            for t in (0.0, 0.25, 0.5, 0.9612, 1.0):
                series = apply_loss_channel(rho, math.sqrt(t))
                oracle = beam_splitter_oracle(rho, t, dim)
                assert np.linalg.norm(series - oracle) < 1e-9

    def test_coherent_inputs(self):
        dim = 24
        for beta in (0.5, 1.0, 2.0, 1.0 + 1.0j):
            rho = coherent_dm(beta, dim)
            for t in (0.25, 0.9612):
                series = apply_loss_channel(rho, math.sqrt(t))
                oracle = beam_splitter_oracle(rho, t, dim)
                assert np.linalg.norm(series - oracle) < 1e-9

    def test_complex_amplitude_phase_adjustment(self):
        # a complex channel amplitude equals the real-transmissivity beam
        # splitter followed by the phase rotation exp(-i arg(c0) n)
        dim = 20
        c0 = math.sqrt(0.7) * np.exp(0.8j)
        rho = coherent_dm(1.0, dim)
        series = apply_loss_channel(rho, c0)
        oracle = beam_splitter_oracle(rho, abs(c0) ** 2, dim)
        phase = np.exp(-1j * np.angle(c0) * np.arange(dim))
        rotated = phase[:, None] * oracle * np.conj(phase)[None, :]
        assert np.linalg.norm(series - rotated) < 1e-9


class TestCoherentOutput:
    def test_vacuum_input(self):
        out = density_matrix_coherent(0.0, 0.9, 10)
        assert np.allclose(out, fock_dm(0, 10), atol=1e-14)

    def test_unit_amplitude_element(self):
        out = density_matrix_coherent(1.0, 1.0, 20)
        assert out[0, 0].real == pytest.approx(math.exp(-1.0), rel=1e-12)

    def test_matches_loss_channel(self):
        c0 = math.sqrt(0.5)
        direct = density_matrix_coherent(1.0, c0, 25)
        channel = apply_loss_channel(coherent_dm(1.0, 25), c0)
        assert trace_distance(direct, channel) < 1e-9

    def test_complex_amplitude_phase(self):
        c0 = math.sqrt(0.6) * np.exp(0.5j)
        direct = density_matrix_coherent(0.9, c0, 22)
        channel = apply_loss_channel(coherent_dm(0.9, 22), c0)
        assert trace_distance(direct, channel) < 1e-9

    def test_truncation_guard(self):
        with pytest.raises(TruncationOverflow):
            density_matrix_coherent(3.0, 1.0, 10)


class TestFidelity:
    def test_headline_numbers(self):
        out = apply_loss_channel(fock_dm(1, 6), math.sqrt(CE_HEADLINE))
        f = fidelity(Fock(1), out)
        assert f == pytest.approx(0.9804, abs=1e-4)
        assert f == pytest.approx(math.sqrt(CE_HEADLINE), abs=1e-12)

    def test_perfect_conversion(self):
        out = apply_loss_channel(fock_dm(1, 6), 1.0)
        assert fidelity(Fock(1), out) == pytest.approx(1.0, abs=1e-12)

    def test_coherent_closed_form_example(self):
        expected = math.exp(-((1 - math.sqrt(0.96)) ** 2) / 2)
        assert coherent_fidelity(1.0, 0.96) == pytest.approx(expected, rel=1e-12)
        assert expected == pytest.approx(0.99980, abs=1e-5)

    def test_matrix_route_matches_closed_form(self):
        for ce in (0.25, 0.5, 0.9612):
            out = apply_loss_channel(coherent_dm(1.0, 20), math.sqrt(ce))
            matrix_f = fidelity(Coherent(1.0), out)
            assert matrix_f == pytest.approx(coherent_fidelity(1.0, ce), abs=1e-9)

    def test_fock_square_root_law(self):
        for ce in np.linspace(0.0, 1.0, 50):
            out = apply_loss_channel(fock_dm(1, 4), math.sqrt(ce))
            assert abs(fidelity(Fock(1), out) - math.sqrt(ce)) < 1e-10

    def test_monotone_in_ce(self):
        ces = np.linspace(0.0, 1.0, 40)
        fock = [fidelity(Fock(1), apply_loss_channel(fock_dm(1, 4), math.sqrt(c))) for c in ces]
        coh = [coherent_fidelity(1.0, c) for c in ces]
        assert np.all(np.diff(fock) >= 0)
        assert np.all(np.diff(coh) >= 0)

    def test_bright_coherent_converts_worse(self):
        for ce in np.linspace(0.0, 0.99, 34):
            assert coherent_fidelity(10.0, ce) < coherent_fidelity(1.0, ce)

    def test_squeezed_input_unsupported(self):
        with pytest.raises(TypeError):
            fidelity(Squeezed(0.5), fock_dm(0, 5))


class TestQuadratures:
    def test_coherent_input(self):
        assert input_variances(Coherent(0.7 + 2.0j)) == (0.25, 0.25)

    def test_fock_input(self):
        assert input_variances(Fock(1)) == (0.75, 0.75)
        assert input_variances(Fock(3)) == (1.75, 1.75)

    def test_squeezed_factor_four(self):
        v = input_variances(Squeezed(math.log(2.0)))
        assert v.var_x == pytest.approx(1.0, rel=1e-12)
        assert v.var_y == pytest.approx(0.0625, rel=1e-12)
        # a variance ratio of 4 relative to vacuum is 6.02 dB
        assert 10 * math.log10(v.var_x / 0.25) == pytest.approx(6.0206, abs=1e-3)

    def test_output_variance_examples(self):
        assert output_variance(0.25, 0.37) == pytest.approx(0.25, abs=1e-15)
        assert output_variance(1.0, 1.0) == 1.0
        assert output_variance(0.87, 0.0) == 0.25

    def test_output_variance_validation(self):
        with pytest.raises(ValueError):
            output_variance(-0.1, 0.5)
        with pytest.raises(ValueError):
            output_variance(0.25, 1.2)

    def test_fock_outputs_stay_symmetric(self):
        for ce in np.linspace(0.0, 1.0, 21):
            v = output_variances(Fock(1), float(ce))
            assert v.var_x == v.var_y

    def test_heisenberg_bound_preserved(self):
        states = [Coherent(1.0), Squeezed(0.3), Squeezed(math.log(2.0)), Squeezed(-1.1)]
        for state in states:
            for coeff in np.linspace(0.0, 1.0, 21):
                v = output_variances(state, float(coeff))
                assert v.var_x * v.var_y >= 1 / 16 - 1e-12

    def test_squeezed_angle_rotates_quadratures(self):
        v0 = input_variances(Squeezed(0.5, theta=0.0))
        vpi = input_variances(Squeezed(0.5, theta=math.pi))
        assert v0.var_x == pytest.approx(vpi.var_y, rel=1e-12)
        assert v0.var_y == pytest.approx(vpi.var_x, rel=1e-12)
