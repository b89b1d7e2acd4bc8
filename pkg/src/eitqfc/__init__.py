"""Quantum frequency conversion through a resonant backward FWM medium.

A numpy/scipy library that models the conversion of a weak probe field
into a counter-propagating signal field inside an EIT-supported
four-wave-mixing medium: per-frequency propagation coefficients, the
backward-boundary transfer matrix, vacuum-reservoir noise accounting,
converted-state density matrices, fidelities and quadrature variances.
"""

from . import errors
from .params import GAMMA, LENGTH, SystemParams, is_symmetric, symmetric_params, validate
from .spectral import (
    NOISE_INDICES,
    FirstOrderSystem,
    SpectralCoefficients,
    build_first_order_system,
    closed_form_coefficients,
    eit_denominator,
    solve_susceptibilities,
)
from .transfer import (
    NoiseKernels,
    PropagationMatrix,
    boundary_resolve,
    conversion_efficiency,
    coupling_matrix,
    expm2,
    noise_kernels,
    propagation_matrix,
    reassemble_raw,
    resolved_coefficients,
    semiclassical_solve,
    transmittance,
)
from .noise import (
    DiffusionMatrix,
    default_window,
    diffusion_matrix,
    eta1,
    eta2,
    gauss_legendre_grid,
    langevin_photon_noise,
)
from .states import (
    DEFAULT_DIM,
    Coherent,
    Fock,
    InputState,
    QuadratureStats,
    Squeezed,
    apply_loss_channel,
    beam_splitter_oracle,
    channel_amplitude,
    coherent_dm,
    coherent_fidelity,
    coherent_vector,
    density_matrix_coherent,
    destroy,
    fidelity,
    fock_dm,
    input_variances,
    output_variance,
    output_variances,
    trace_distance,
    validate_density_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "GAMMA",
    "LENGTH",
    "SystemParams",
    "is_symmetric",
    "symmetric_params",
    "validate",
    "NOISE_INDICES",
    "FirstOrderSystem",
    "SpectralCoefficients",
    "build_first_order_system",
    "closed_form_coefficients",
    "eit_denominator",
    "solve_susceptibilities",
    "NoiseKernels",
    "PropagationMatrix",
    "boundary_resolve",
    "conversion_efficiency",
    "coupling_matrix",
    "expm2",
    "noise_kernels",
    "propagation_matrix",
    "reassemble_raw",
    "resolved_coefficients",
    "semiclassical_solve",
    "transmittance",
    "DiffusionMatrix",
    "default_window",
    "diffusion_matrix",
    "eta1",
    "eta2",
    "gauss_legendre_grid",
    "langevin_photon_noise",
    "DEFAULT_DIM",
    "Coherent",
    "Fock",
    "InputState",
    "QuadratureStats",
    "Squeezed",
    "apply_loss_channel",
    "beam_splitter_oracle",
    "channel_amplitude",
    "coherent_dm",
    "coherent_fidelity",
    "coherent_vector",
    "density_matrix_coherent",
    "destroy",
    "fidelity",
    "fock_dm",
    "input_variances",
    "output_variance",
    "output_variances",
    "trace_distance",
    "validate_density_matrix",
    "errors",
]
