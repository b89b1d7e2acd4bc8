"""Vacuum-reservoir noise accounting.

The Langevin noise enters the output photon number and quadrature
variances through double integrals of the spatial kernels weighted by
the normally-ordered diffusion matrix.  Under the weak-probe
approximation the excited-state populations vanish, the diffusion
matrix is zero and so are those integrals; the signal-side noise term
eta2 then follows from the output commutator instead of any
anti-normally-ordered integration.

All integrals carry the correlation prefactor L/(2 pi c) with L and c
normalized to 1 (c drops out of the dimensionless model once the
i*omega/c propagation term is neglected).

Ground-state dephasing (gamma21 > 0) enters the deterministic
propagation coefficients but not the diffusion matrix here: its
Langevin back-action on the photon statistics is not modeled, and a
caller who wants to study it must supply the extra diffusion entries
explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NonConvergedIntegral
from .params import GAMMA, LENGTH, SystemParams, validate
from .spectral import solve_susceptibilities
from .transfer import coupling_matrix, expm2, noise_kernels, resolved_coefficients

#: Row labels jk of the diffusion matrix and their adjoint pairs k'j'.
DIFFUSION_ROWS = (21, 31, 41)
DIFFUSION_COLS = (12, 13, 14)

#: Convergence target for grid doubling of the noise integrals.
INTEGRAL_TOL = 1e-8


@dataclass(frozen=True)
class DiffusionMatrix:
    """Normally-ordered diffusion coefficients D_{jk,k'j'}.

    entries[a, b] couples noise slot DIFFUSION_ROWS[a] to the adjoint
    slot DIFFUSION_COLS[b].
    """

    entries: np.ndarray

    @property
    def is_zero(self) -> bool:
        return bool(np.all(self.entries == 0))


def diffusion_matrix(pop33: float = 0.0, pop44: float = 0.0) -> DiffusionMatrix:
    """Einstein-relation diffusion matrix for given excited populations.

    The only nonzero entry is D_{21,12} = (GAMMA/2)(pop44 + pop33); with
    the weak-probe zero populations the whole matrix vanishes.
    """
    if not (0.0 <= pop33 <= 1.0 and 0.0 <= pop44 <= 1.0):
        raise ValueError(f"populations must lie in [0, 1], got {pop33}, {pop44}")
    entries = np.zeros((3, 3), dtype=complex)
    entries[0, 0] = GAMMA / 2 * (pop44 + pop33)
    return DiffusionMatrix(entries=entries)


def default_window(params: SystemParams) -> float:
    """Half-width of the frequency truncation window."""
    return 10.0 * max(GAMMA, abs(params.omega_c), abs(params.omega_d))


@lru_cache(maxsize=32)
def _gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(n)


def gauss_legendre_grid(a: float, b: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [a, b]."""
    x, w = _gauss_legendre(n)
    half = (b - a) / 2
    return a + half * (x + 1), half * w


def _integral_on_grid(
    params: SystemParams,
    diffusion: DiffusionMatrix,
    kernel: str,
    omega_nodes: np.ndarray,
    omega_weights: np.ndarray,
    z_nodes: np.ndarray,
    z_weights: np.ndarray,
) -> float:
    """sum_jk,j'k' of int dz d_omega K_jk D K*_j'k' / (2 pi) on fixed grids."""
    d = diffusion.entries
    total = 0.0
    for omega, w_omega in zip(omega_nodes, omega_weights):
        coeffs = solve_susceptibilities(params, float(omega))
        raw = expm2(coupling_matrix(coeffs) * LENGTH)
        kernels = noise_kernels(coeffs, raw, z_nodes)
        k = kernels.p if kernel == "P" else kernels.q
        # quadratic form over the noise slots, per z node
        form = np.einsum("az,ab,bz->z", k, d, np.conj(k)).real
        total += w_omega * float(z_weights @ form)
    return total * LENGTH / (2 * np.pi)


def _adaptive_noise_integral(
    params: SystemParams,
    diffusion: DiffusionMatrix | None,
    kernel: str,
    window: float | None,
    n_omega: int,
    n_z: int,
    tol: float,
    max_doublings: int,
) -> float:
    validate(params)
    if diffusion is None:
        diffusion = diffusion_matrix()
    if window is None:
        window = default_window(params)

    previous = None
    for level in range(max_doublings + 1):
        omega_nodes, omega_weights = gauss_legendre_grid(-window, window, n_omega * 2**level)
        z_nodes, z_weights = gauss_legendre_grid(0.0, LENGTH, n_z * 2**level)
        value = _integral_on_grid(
            params, diffusion, kernel, omega_nodes, omega_weights, z_nodes, z_weights
        )
        if previous is not None and abs(value - previous) < tol:
            return value
        previous = value
    raise NonConvergedIntegral(
        f"noise integral changed by more than {tol} at the deepest grid level"
    )


def langevin_photon_noise(
    params: SystemParams,
    diffusion: DiffusionMatrix | None = None,
    window: float | None = None,
    n_omega: int = 513,
    n_z: int = 64,
    tol: float = INTEGRAL_TOL,
    max_doublings: int = 4,
) -> float:
    """Langevin contribution to the output probe photon number (P kernels).

    Gauss-Legendre in z over [0, L] and in omega over [-window, window],
    with both grids doubled until the value changes by less than ``tol``
    (NonConvergedIntegral otherwise).  Exactly zero for the default
    weak-probe diffusion matrix.
    """
    return _adaptive_noise_integral(
        params, diffusion, "P", window, n_omega, n_z, tol, max_doublings
    )


def eta1(
    params: SystemParams,
    diffusion: DiffusionMatrix | None = None,
    window: float | None = None,
    n_omega: int = 513,
    n_z: int = 64,
    tol: float = INTEGRAL_TOL,
    max_doublings: int = 4,
) -> float:
    """Signal-side Langevin variance term (Q kernels); zero for default diffusion."""
    return _adaptive_noise_integral(
        params, diffusion, "Q", window, n_omega, n_z, tol, max_doublings
    )


def eta2(params: SystemParams, diffusion: DiffusionMatrix | None = None) -> float:
    """Vacuum-commutator noise term of the converted signal quadratures.

    Obtained from [a_s(0,t), a_s^+(0,t)] = 1 as
    eta2 = 1 - |C_0|^2 - |D_0|^2 + eta1, never by direct
    anti-normally-ordered integration.  With the default (zero)
    diffusion matrix eta1 vanishes identically, so the integral is
    skipped; a user-supplied diffusion matrix is integrated honestly.
    """
    validate(params)
    _, _, c0, d0 = resolved_coefficients(params, 0.0)
    if diffusion is None or diffusion.is_zero:
        eta1_value = 0.0
    else:
        eta1_value = eta1(params, diffusion)
    return 1.0 - abs(c0) ** 2 - abs(d0) ** 2 + eta1_value
