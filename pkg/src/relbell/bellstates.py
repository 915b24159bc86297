"""Two-particle spin states with momentum labels and their Lorentz action.

Amplitudes are ordered over the product basis {uu, ud, du, dd} with particle
A's spin in the left slot, quantized along z.  The four Bell states over a
back-to-back momentum pair (p for A, -p for B) are

    phi+ = (uu + dd)/sqrt(2)   index "00"
    phi- = (uu - dd)/sqrt(2)   index "01"
    psi+ = (ud + du)/sqrt(2)   index "10"
    psi- = (ud - du)/sqrt(2)   index "11"

A boost acts on the amplitudes through the spin-1/2 Wigner rotations of the
two momenta and multiplies the tracked `scale` by sqrt(E'/E) per transformed
particle; the amplitudes themselves stay unit-normalized at all times.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .littlegroup import little_group_element, rotation_angle_about_y, spin_half_rep, wigner_angle
from .minkowski import FourVector, LorentzTransform, boost_x, momentum_z

__all__ = [
    "BELL_INDICES",
    "TwoParticleState",
    "BellCoefficients",
    "bell_state",
    "boost_one_sided",
    "boost_two_sided",
    "boost_one_sided_matrix",
    "massless_boost",
    "bell_decompose",
    "concurrence",
    "state_to_dict",
]

BELL_INDICES = ("00", "01", "10", "11")

_SQ2 = 1.0 / math.sqrt(2.0)
_BELL_AMPLITUDES = {
    "00": np.array([_SQ2, 0.0, 0.0, _SQ2], dtype=complex),
    "01": np.array([_SQ2, 0.0, 0.0, -_SQ2], dtype=complex),
    "10": np.array([0.0, _SQ2, _SQ2, 0.0], dtype=complex),
    "11": np.array([0.0, _SQ2, -_SQ2, 0.0], dtype=complex),
}

_GEOMETRY_TOL = 1e-9


@dataclass(frozen=True)
class TwoParticleState:
    """Four complex amplitudes over {uu, ud, du, dd}, per-particle momentum
    labels, and the accumulated positive energy-ratio prefactor `scale`."""

    amplitudes: np.ndarray
    momentum_a: FourVector
    momentum_b: FourVector
    scale: float = 1.0

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.shape != (4,):
            raise ValueError("amplitudes must be a length-4 complex vector")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > 1e-9:
            raise ValueError(f"amplitudes must be normalized, got |psi| = {norm!r}")
        if not (self.scale > 0.0 and math.isfinite(self.scale)):
            raise ValueError(f"scale must be a positive real, got {self.scale!r}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)


@dataclass(frozen=True)
class BellCoefficients:
    """Coefficients of a state over the Bell basis, indexed 00, 01, 10, 11."""

    c00: complex
    c01: complex
    c10: complex
    c11: complex

    def as_array(self) -> np.ndarray:
        return np.array([self.c00, self.c01, self.c10, self.c11])


def bell_state(index: str, momentum: FourVector) -> TwoParticleState:
    """Bell state `index` over the momentum pair (momentum, parity-inverted).

    `momentum` must be timelike and future-pointing (it is particle A's
    label); particle B is labeled with the spatially inverted momentum.
    """
    if index not in BELL_INDICES:
        raise ValueError(f"Bell index must be one of {BELL_INDICES}, got {index!r}")
    momentum.mass()  # raises unless timelike and future-pointing
    return TwoParticleState(
        amplitudes=_BELL_AMPLITUDES[index],
        momentum_a=momentum,
        momentum_b=momentum.spatial_inverse(),
        scale=1.0,
    )


def _require_z_geometry(state: TwoParticleState, eta: float) -> float:
    """Check A at rapidity eta along z and B at its parity image; return the mass."""
    mass = state.momentum_a.mass()
    expected_a = momentum_z(eta, mass)
    if not np.allclose(state.momentum_a.as_array(), expected_a.as_array(), rtol=0.0, atol=_GEOMETRY_TOL):
        raise ValueError(
            f"momentum_a {state.momentum_a} is not z-aligned with rapidity {eta!r} (mass {mass!r})"
        )
    expected_b = state.momentum_a.spatial_inverse()
    if not np.allclose(state.momentum_b.as_array(), expected_b.as_array(), rtol=0.0, atol=_GEOMETRY_TOL):
        raise ValueError(f"momentum_b {state.momentum_b} is not the parity image of momentum_a")
    return mass


def _apply_spin_map(state, unitary, momentum_a, momentum_b, energy_factor):
    amps = unitary @ state.amplitudes
    norm = float(np.linalg.norm(amps))
    # the map is unitary; fold the residual roundoff into scale anyway
    return TwoParticleState(
        amplitudes=amps / norm,
        momentum_a=momentum_a,
        momentum_b=momentum_b,
        scale=state.scale * energy_factor * norm,
    )


def boost_two_sided(state: TwoParticleState, eta: float, omega: float) -> TwoParticleState:
    """Boost both particles by rapidity omega along x.

    The state's momenta must be +/-z-aligned with rapidity eta (A along +z
    when eta > 0).  Both spin slots pick up their Wigner rotation -- A the
    forward representation, B the transposed one -- and both momentum labels
    and sqrt(E'/E) factors are updated.
    """
    _require_z_geometry(state, eta)
    angle = wigner_angle(eta, omega)
    unitary = np.kron(spin_half_rep(angle), spin_half_rep(angle, parity=True))
    lam = boost_x(omega)
    new_a = lam.apply(state.momentum_a)
    new_b = lam.apply(state.momentum_b)
    factor = math.sqrt(new_a.t / state.momentum_a.t) * math.sqrt(new_b.t / state.momentum_b.t)
    return _apply_spin_map(state, unitary, new_a, new_b, factor)


def boost_one_sided(state: TwoParticleState, eta: float, omega: float) -> TwoParticleState:
    """Boost particle A only by rapidity omega along x; B is untouched.

    Geometry as in ``boost_two_sided``.  Only A's spin slot rotates, only
    A's momentum label and energy factor are updated.
    """
    _require_z_geometry(state, eta)
    angle = wigner_angle(eta, omega)
    unitary = np.kron(spin_half_rep(angle), np.eye(2))
    new_a = boost_x(omega).apply(state.momentum_a)
    factor = math.sqrt(new_a.t / state.momentum_a.t)
    return _apply_spin_map(state, unitary, new_a, state.momentum_b, factor)


def boost_one_sided_matrix(state: TwoParticleState, transform: LorentzTransform) -> TwoParticleState:
    """One-sided boost of A under an arbitrary transform, via the matrix route.

    The little-group element for A's momentum is computed by composing
    standard boosts and must come out a rotation about y (true whenever the
    momentum and the boost stay in the x-z plane).  Useful for checking that
    successive boosts compose correctly on geometries the closed-form entry
    points do not cover.
    """
    mass = state.momentum_a.mass()
    w = little_group_element(transform, state.momentum_a, mass)
    angle = rotation_angle_about_y(w)
    unitary = np.kron(spin_half_rep(angle), np.eye(2))
    new_a = transform.apply(state.momentum_a)
    factor = math.sqrt(new_a.t / state.momentum_a.t)
    return _apply_spin_map(state, unitary, new_a, state.momentum_b, factor)


def massless_boost(state: TwoParticleState, theta_a: float, theta_b: float) -> TwoParticleState:
    """Boost action on a two-photon state in the helicity basis {++, +-, -+, --}.

    Each helicity pair (sa, sb) acquires the phase exp(i(theta_a sa + theta_b sb))
    with sa, sb in {+1, -1}; amplitude magnitudes are exactly unchanged, so any
    entanglement structure is left invariant.  Momentum labels are kept as-is.
    """
    if not (math.isfinite(theta_a) and math.isfinite(theta_b)):
        raise ValueError("phase angles must be finite")
    signs = ((1, 1), (1, -1), (-1, 1), (-1, -1))
    phases = np.array([np.exp(1j * (theta_a * sa + theta_b * sb)) for sa, sb in signs])
    return TwoParticleState(
        amplitudes=state.amplitudes * phases,
        momentum_a=state.momentum_a,
        momentum_b=state.momentum_b,
        scale=state.scale,
    )


def bell_decompose(state: TwoParticleState) -> BellCoefficients:
    """Coefficients of the state's amplitudes over the Bell basis."""
    coeffs = [complex(np.vdot(_BELL_AMPLITUDES[k], state.amplitudes)) for k in BELL_INDICES]
    return BellCoefficients(*coeffs)


def concurrence(state: TwoParticleState) -> float:
    """Pure-state concurrence |<psi| sigma_y x sigma_y |psi*>| = 2|a0 a3 - a1 a2|.

    Equals 1 for every Bell state and 0 for product states, and is invariant
    under all the (local unitary) boost operations in this module.
    """
    a = state.amplitudes
    return 2.0 * abs(a[0] * a[3] - a[1] * a[2])


def state_to_dict(state: TwoParticleState) -> dict:
    """JSON-ready form: amplitudes as [re, im] pairs, momenta as 4-arrays."""
    return {
        "amplitudes": [[float(a.real), float(a.imag)] for a in state.amplitudes],
        "momentum_a": [float(v) for v in state.momentum_a.as_array()],
        "momentum_b": [float(v) for v in state.momentum_b.as_array()],
        "scale": float(state.scale),
    }
