"""Quantum states through the frequency-conversion channel.

At omega = 0 the medium acts on the probe as a pure-loss channel of
transmissivity |C_0|^2: the converted signal keeps the input wave
function up to the amplitude factor conj(C_0).  This module builds the
output density matrices in a truncated Fock basis (via the
normally-ordered projector series), provides an independent two-mode
beam-splitter oracle for the same channel, and computes fidelities and
quadrature variances.

Quadrature convention: X = (a + a^+)/2, Y = (a - a^+)/2i, so the vacuum
variance is 1/4.  Callers that want the doubled-variance convention
scale the outputs by 2 (see the CLI's --convention-scale flag).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np
import scipy.linalg

from .errors import DimensionTooSmall, TruncationOverflow
from .params import SystemParams
from .transfer import resolved_coefficients

#: Default Fock-space truncation; supports |beta| <= 2 and n <= 5 inputs
#: with wide margin.
DEFAULT_DIM = 20

#: Maximum truncated-away probability mass allowed when constructing a
#: state, and maximum top-two-level occupancy allowed when pushing one
#: through the loss channel.
TRACE_LOSS_TOL = 1e-10
TOP_LEVEL_TOL = 1e-8

#: A Fock level counts as "occupied" for the beam-splitter dimension
#: guard when it holds more than this fraction of the trace.
SIGNIFICANT_POPULATION = 1e-3


@dataclass(frozen=True)
class Fock:
    """Photon-number eigenstate |n>."""

    n: int


@dataclass(frozen=True)
class Coherent:
    """Coherent state |beta>."""

    beta: complex


@dataclass(frozen=True)
class Squeezed:
    """Squeezed vacuum with magnitude r and squeezing angle theta.

    theta = 0 puts the anti-squeezed quadrature on X:
    var_x = e^{2r}/4, var_y = e^{-2r}/4.
    """

    r: float
    theta: float = 0.0


InputState = Union[Fock, Coherent, Squeezed]


class QuadratureStats(NamedTuple):
    var_x: float
    var_y: float


def destroy(dim: int) -> np.ndarray:
    """Annihilation operator on the truncated basis, a|n> = sqrt(n)|n-1>."""
    return np.diag(np.sqrt(np.arange(1.0, dim)), 1)


def _factorials(n: int) -> np.ndarray:
    return np.cumprod(np.concatenate(([1.0], np.arange(1.0, n + 1))))


def fock_dm(n: int, dim: int = DEFAULT_DIM) -> np.ndarray:
    """Density matrix of |n><n| in a dim-dimensional basis."""
    if n >= dim:
        raise DimensionTooSmall(f"Fock level {n} does not fit in dimension {dim}")
    rho = np.zeros((dim, dim), dtype=complex)
    rho[n, n] = 1.0
    return rho


def coherent_vector(beta: complex, dim: int) -> np.ndarray:
    """Truncated coherent-state amplitudes e^{-|b|^2/2} b^n / sqrt(n!)."""
    n = np.arange(dim)
    log_norm = -abs(beta) ** 2 / 2
    fact = _factorials(dim - 1)
    return np.exp(log_norm) * np.power(complex(beta), n) / np.sqrt(fact)


def coherent_dm(beta: complex, dim: int = DEFAULT_DIM) -> np.ndarray:
    """Truncated coherent-state density matrix, with trace-loss guard."""
    vec = coherent_vector(beta, dim)
    rho = np.outer(vec, np.conj(vec))
    loss = 1.0 - float(np.trace(rho).real)
    if loss > TRACE_LOSS_TOL:
        raise TruncationOverflow(
            f"coherent state |beta|={abs(beta):.3g} loses {loss:.3e} of its trace at dim={dim}"
        )
    return rho


def density_matrix_coherent(beta: complex, c0: complex, dim: int = DEFAULT_DIM) -> np.ndarray:
    """Converted-signal density matrix for a coherent input.

    The output is the coherent state of amplitude conj(c0) * beta, with
    elements e^{-|g|^2} g^m conj(g)^n / sqrt(m! n!) where g = conj(c0)*beta.
    """
    return coherent_dm(np.conj(complex(c0)) * complex(beta), dim)


def validate_density_matrix(
    rho: np.ndarray,
    hermiticity_tol: float = 1e-12,
    trace_tol: float = 1e-10,
    eigenvalue_tol: float = 1e-10,
) -> None:
    """Assert Hermiticity, unit trace and positive semidefiniteness."""
    rho = np.asarray(rho)
    herm = np.max(np.abs(rho - rho.conj().T))
    if herm > hermiticity_tol:
        raise ValueError(f"density matrix not Hermitian: max deviation {herm:.3e}")
    trace_err = abs(np.trace(rho).real - 1.0)
    if trace_err > trace_tol:
        raise ValueError(f"density matrix trace off by {trace_err:.3e}")
    smallest = float(np.min(np.linalg.eigvalsh(rho)))
    if smallest < -eigenvalue_tol:
        raise ValueError(f"density matrix has eigenvalue {smallest:.3e}")


def channel_amplitude(params: SystemParams) -> complex:
    """Signal-from-probe transfer amplitude C_0; |C_0|^2 is the CE."""
    _, _, c0, _ = resolved_coefficients(params, 0.0)
    return complex(c0)


def apply_loss_channel(rho_in: np.ndarray, c0: complex) -> np.ndarray:
    """Push a state through the conversion channel of amplitude c0.

    Elements are evaluated by the normally-ordered projector expansion:
    rho_out[m, n] = sum_l (-1)^l / (l! sqrt(m! n!))
                    * c0^{l+n} conj(c0)^{l+m} Tr[(a^+)^{l+n} a^{l+m} rho_in],
    which is exact on the truncated space (powers beyond the truncation
    vanish identically).  Equivalent to a pure-loss channel of
    transmissivity |c0|^2 with phase conj(c0) on the coherences.
    """
    rho_in = np.asarray(rho_in, dtype=complex)
    dim = rho_in.shape[0]
    c0 = complex(c0)
    if abs(c0) > 1.0 + 1e-12:
        raise ValueError(f"|c0| = {abs(c0):.6f} exceeds 1")
    top_two = float(rho_in[dim - 1, dim - 1].real + rho_in[dim - 2, dim - 2].real)
    if top_two > TOP_LEVEL_TOL:
        raise TruncationOverflow(
            f"top two Fock levels hold {top_two:.3e} of the population; enlarge the basis"
        )

    a = destroy(dim)
    # lowered[k] = a^k rho_in ; raiser[j] = a^j (real), so that
    # Tr[(a^+)^j a^k rho] = sum(a^j * (a^k rho)) elementwise.
    lowered = [rho_in]
    raiser = [np.eye(dim)]
    for _ in range(dim):
        lowered.append(a @ lowered[-1])
        raiser.append(a @ raiser[-1])
    moments = np.empty((dim + 1, dim + 1), dtype=complex)
    for j in range(dim + 1):
        for k in range(dim + 1):
            moments[j, k] = np.sum(raiser[j] * lowered[k])

    fact = _factorials(dim)
    rho_out = np.zeros((dim, dim), dtype=complex)
    for m in range(dim):
        for n in range(dim):
            acc = 0.0 + 0.0j
            sign = 1.0
            for l in range(0, dim - max(m, n)):
                acc += (
                    sign
                    / fact[l]
                    * c0 ** (l + n)
                    * np.conj(c0) ** (l + m)
                    * moments[l + n, l + m]
                )
                sign = -sign
            rho_out[m, n] = acc / math.sqrt(fact[m] * fact[n])
    return rho_out


def _top_occupied_level(rho: np.ndarray) -> int:
    """Highest Fock level holding a significant share of the population."""
    pops = np.real(np.diag(rho))
    trace = max(float(np.sum(pops)), 1e-300)
    occupied = np.nonzero(pops > SIGNIFICANT_POPULATION * trace)[0]
    return int(occupied[-1]) if occupied.size else 0


@functools.lru_cache(maxsize=16)
def _beam_splitter_unitary(transmissivity: float, dim: int) -> np.ndarray:
    """exp[theta (a^+ b - a b^+)] with theta = arccos(sqrt(transmissivity))."""
    theta = math.acos(math.sqrt(transmissivity))
    a = destroy(dim)
    generator = theta * (np.kron(a.conj().T, a) - np.kron(a, a.conj().T))
    return scipy.linalg.expm(generator)


def beam_splitter_oracle(rho_in: np.ndarray, transmissivity: float, dim: int) -> np.ndarray:
    """Independent loss-channel construction via a two-mode beam splitter.

    Builds the unitary exp[theta (a^+ b - a b^+)] with
    theta = arccos(sqrt(transmissivity)) on a dim x dim two-mode Fock
    space from the ladder operators, couples the input to vacuum,
    applies the unitary and traces out the ancilla.
    """
    if not 0.0 <= transmissivity <= 1.0:
        raise ValueError(f"transmissivity must lie in [0, 1], got {transmissivity}")
    rho_in = np.asarray(rho_in, dtype=complex)
    if rho_in.shape[0] > dim:
        raise DimensionTooSmall(
            f"input dimension {rho_in.shape[0]} exceeds requested dimension {dim}"
        )
    top = _top_occupied_level(rho_in)
    if dim < 2 * top + 2:
        raise DimensionTooSmall(
            f"dim={dim} too small for input occupying level {top}; need >= {2 * top + 2}"
        )
    rho = np.zeros((dim, dim), dtype=complex)
    rho[: rho_in.shape[0], : rho_in.shape[0]] = rho_in

    unitary = _beam_splitter_unitary(float(transmissivity), dim)
    # rho (x) |0><0| is supported on the ancilla-vacuum columns |m, 0>,
    # which sit at joint index m*dim; applying U to that block suffices.
    columns = unitary[:, ::dim]
    joint = columns @ rho @ columns.conj().T
    return np.einsum("ajbj->ab", joint.reshape(dim, dim, dim, dim))


def trace_distance(rho_a: np.ndarray, rho_b: np.ndarray) -> float:
    """(1/2) * trace norm of the difference of two Hermitian matrices."""
    eigs = np.linalg.eigvalsh(np.asarray(rho_a) - np.asarray(rho_b))
    return 0.5 * float(np.sum(np.abs(eigs)))


def fidelity(state: InputState, rho_out: np.ndarray) -> float:
    """Fidelity sqrt(<psi|rho_out|psi>) of the output against a pure input.

    Defined for Fock and Coherent inputs; for a coherent input this
    reproduces the overlap |<beta|conj(C_0) beta>| of the ideal
    converted state.
    """
    rho_out = np.asarray(rho_out, dtype=complex)
    dim = rho_out.shape[0]
    if isinstance(state, Fock):
        if state.n >= dim:
            raise DimensionTooSmall(f"Fock level {state.n} outside dimension {dim}")
        return math.sqrt(max(float(rho_out[state.n, state.n].real), 0.0))
    if isinstance(state, Coherent):
        vec = coherent_vector(state.beta, dim)
        overlap = np.conj(vec) @ rho_out @ vec
        return math.sqrt(max(float(overlap.real), 0.0))
    raise TypeError(f"fidelity is not defined for {type(state).__name__} inputs")


def coherent_fidelity(nbar: float, ce: float) -> float:
    """Closed-form conversion fidelity for a coherent input of mean photon
    number nbar at conversion efficiency ce: exp(-nbar (1 - sqrt(ce))^2 / 2)."""
    if nbar < 0 or not 0.0 <= ce <= 1.0:
        raise ValueError(f"need nbar >= 0 and ce in [0, 1], got {nbar}, {ce}")
    return math.exp(-nbar * (1.0 - math.sqrt(ce)) ** 2 / 2.0)


def input_variances(state: InputState) -> QuadratureStats:
    """Squared quadrature variances of the input state (vacuum = 1/4)."""
    if isinstance(state, Coherent):
        return QuadratureStats(0.25, 0.25)
    if isinstance(state, Fock):
        v = (2 * state.n + 1) / 4.0
        return QuadratureStats(v, v)
    if isinstance(state, Squeezed):
        ch, sh = math.cosh(2 * state.r), math.sinh(2 * state.r)
        return QuadratureStats(
            (ch + sh * math.cos(state.theta)) / 4.0,
            (ch - sh * math.cos(state.theta)) / 4.0,
        )
    raise TypeError(f"unknown input state {type(state).__name__}")


def output_variance(var_in: float, power_coeff: float) -> float:
    """Output quadrature variance: power_coeff * var_in + (1 - power_coeff)/4.

    power_coeff is |C_0|^2 for the converted signal and |A_0|^2 for the
    transmitted probe; the second term is the vacuum-reservoir share.
    """
    if var_in < 0:
        raise ValueError(f"variance must be >= 0, got {var_in}")
    if not 0.0 <= power_coeff <= 1.0:
        raise ValueError(f"power coefficient must lie in [0, 1], got {power_coeff}")
    return power_coeff * var_in + (1.0 - power_coeff) / 4.0


def output_variances(state: InputState, power_coeff: float) -> QuadratureStats:
    """Both output quadrature variances for a given input state."""
    vin = input_variances(state)
    return QuadratureStats(
        output_variance(vin.var_x, power_coeff),
        output_variance(vin.var_y, power_coeff),
    )
