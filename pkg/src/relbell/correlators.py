"""Relativistic spin observables, correlation expectations, and CHSH.

The boosted observer measures spin along a direction a with the
boost-corrected observable

    a_hat = (sqrt(1 - beta^2) a_perp + a_par) . sigma / N,
    N     = sqrt(1 + beta^2 ((n . a)^2 - 1)),

where n is the boost direction and a_perp / a_par split a relative to n.
N is exactly the numerator's length, so a_hat squares to the identity for
every beta < 1 (and for beta = 1 whenever a is not perpendicular to n).
The partner observer uses the ordinary b . sigma.

Expectations are taken in a ``TwoParticleState`` by direct 4x4 contraction;
closed forms for the one-sided boosted phi+ state are provided alongside and
agree with the contraction to machine precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bellstates import TwoParticleState

__all__ = [
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "PAULI",
    "ChshSetting",
    "ChshResult",
    "spin_observable",
    "relativistic_observable",
    "correlation",
    "correlation_tensor",
    "correlation_closed_form",
    "chsh",
    "chsh_closed_form",
    "ultra_relativistic_limit",
]

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULI = np.stack([SIGMA_X, SIGMA_Y, SIGMA_Z])
for _m in (SIGMA_X, SIGMA_Y, SIGMA_Z, PAULI):
    _m.setflags(write=False)

X_AXIS = np.array([1.0, 0.0, 0.0])
X_AXIS.setflags(write=False)


def _unit(v, name: str = "direction") -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"{name} must be a 3-vector, got shape {v.shape}")
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"{name} must be a unit vector, got |v| = {norm!r}")
    return v / norm


def spin_observable(direction) -> np.ndarray:
    """Ordinary spin observable along a unit direction: direction . sigma."""
    d = _unit(direction)
    return d[0] * SIGMA_X + d[1] * SIGMA_Y + d[2] * SIGMA_Z


def relativistic_observable(direction, beta: float, axis=X_AXIS) -> np.ndarray:
    """Boost-corrected spin observable along `direction` for boost speed beta.

    The component of the direction perpendicular to the boost axis is
    contracted by sqrt(1 - beta^2) and the result renormalized, so the
    returned 2x2 Hermitian matrix always has eigenvalues +/-1.

    beta = 1 is accepted only when the direction is not perpendicular to the
    axis; at the perpendicular degeneracy the numerator vanishes and a
    ValueError is raised.
    """
    a = _unit(direction)
    n = _unit(axis, "boost axis")
    if not (0.0 <= beta <= 1.0):
        raise ValueError(f"beta must lie in [0, 1], got {beta!r}")
    parallel = float(np.dot(a, n)) * n
    perp = a - parallel
    v = math.sqrt(1.0 - beta * beta) * perp + parallel
    norm = float(np.linalg.norm(v))
    if norm < 1e-12:
        raise ValueError("degenerate observable: beta = 1 with direction perpendicular to the boost axis")
    v /= norm
    return v[0] * SIGMA_X + v[1] * SIGMA_Y + v[2] * SIGMA_Z


def correlation(state: TwoParticleState, obs_a: np.ndarray, obs_b: np.ndarray) -> float:
    """Joint expectation <psi| obs_a x obs_b |psi> by direct 4x4 contraction."""
    amps = state.amplitudes
    return float(np.real(np.vdot(amps, np.kron(obs_a, obs_b) @ amps)))


def correlation_tensor(state: TwoParticleState) -> np.ndarray:
    """The 3x3 tensor T_ij = <sigma_i x sigma_j> in the given state."""
    return np.array([[correlation(state, PAULI[i], PAULI[j]) for j in range(3)] for i in range(3)])


def correlation_closed_form(a, b, beta: float, omega_p: float, zx_sign: int = -1) -> float:
    """Closed form of <a_hat x b_hat> in the one-sided boosted phi+ state.

    Geometry: momenta along +/-z, boost along x, Wigner angle omega_p.
    With c = cos(omega_p), s = sin(omega_p) and r = sqrt(1 - beta^2):

        [ a_x (b_x c + b_z s) - r a_y b_y
          + r a_z (b_z c + zx_sign * b_x s) ] / sqrt(1 + beta^2 (a_x^2 - 1))

    The default zx_sign = -1 matches the direct contraction (the state's
    correlation tensor has T_zx = -s); zx_sign = +1 is the opposite sign
    convention for the a_z b_x cross term, kept selectable for comparison.
    It differs exactly when a_z * b_x * s is non-zero and beta < 1.
    """
    if zx_sign not in (-1, 1):
        raise ValueError(f"zx_sign must be -1 or +1, got {zx_sign!r}")
    a = _unit(a, "a")
    b = _unit(b, "b")
    if not (0.0 <= beta <= 1.0):
        raise ValueError(f"beta must lie in [0, 1], got {beta!r}")
    c, s = math.cos(omega_p), math.sin(omega_p)
    r = math.sqrt(1.0 - beta * beta)
    denom_sq = 1.0 + beta * beta * (a[0] * a[0] - 1.0)
    if denom_sq < 1e-24:
        raise ValueError("degenerate observable: beta = 1 with direction perpendicular to the boost axis")
    numer = a[0] * (b[0] * c + b[2] * s) - r * a[1] * b[1] + r * a[2] * (b[2] * c + zx_sign * b[0] * s)
    return numer / math.sqrt(denom_sq)


@dataclass(frozen=True)
class ChshSetting:
    """Measurement direction quadruple (a, a', b, b'), each a unit 3-vector."""

    a: np.ndarray
    a_prime: np.ndarray
    b: np.ndarray
    b_prime: np.ndarray

    def __post_init__(self):
        for name in ("a", "a_prime", "b", "b_prime"):
            v = _unit(getattr(self, name), name)
            v.setflags(write=False)
            object.__setattr__(self, name, v)

    @classmethod
    def standard(cls) -> "ChshSetting":
        """The vectors giving the maximal violation 2*sqrt(2) at beta = 0:
        a, a' diagonal in the x-y plane, b along y, b' along x."""
        inv = 1.0 / math.sqrt(2.0)
        return cls(
            a=np.array([inv, -inv, 0.0]),
            a_prime=np.array([-inv, -inv, 0.0]),
            b=np.array([0.0, 1.0, 0.0]),
            b_prime=np.array([1.0, 0.0, 0.0]),
        )


@dataclass(frozen=True)
class ChshResult:
    """CHSH combination E(a,b) + E(a,b') + E(a',b) - E(a',b') with its terms."""

    e_ab: float
    e_abp: float
    e_apb: float
    e_apbp: float
    value: float


def chsh(state: TwoParticleState, setting: ChshSetting, beta: float, axis=X_AXIS) -> ChshResult:
    """CHSH expectation with boost-corrected observables on the A side.

    A's two observables are built from (setting.a, setting.a_prime) at the
    given beta; B's are the ordinary b . sigma.  Returns the signed sum and
    the four individual correlators.
    """
    obs_a = relativistic_observable(setting.a, beta, axis)
    obs_ap = relativistic_observable(setting.a_prime, beta, axis)
    obs_b = spin_observable(setting.b)
    obs_bp = spin_observable(setting.b_prime)
    e_ab = correlation(state, obs_a, obs_b)
    e_abp = correlation(state, obs_a, obs_bp)
    e_apb = correlation(state, obs_ap, obs_b)
    e_apbp = correlation(state, obs_ap, obs_bp)
    return ChshResult(e_ab, e_abp, e_apb, e_apbp, e_ab + e_abp + e_apb - e_apbp)


def chsh_closed_form(beta: float, omega_p: float) -> float:
    """CHSH value at the standard setting for the one-sided boosted phi+ state:

        2 (sqrt(1 - beta^2) + cos(omega_p)) / sqrt(2 - beta^2)

    Equals 2*sqrt(2) at beta = 0, omega_p = 0 and tends to 2 cos(omega_p) < 2
    as beta -> 1 with omega_p != 0.
    """
    if not (0.0 <= beta <= 1.0):
        raise ValueError(f"beta must lie in [0, 1], got {beta!r}")
    return 2.0 * (math.sqrt(1.0 - beta * beta) + math.cos(omega_p)) / math.sqrt(2.0 - beta * beta)


def ultra_relativistic_limit(a, b, omega_p: float) -> float:
    """beta -> 1 limit of <a_hat x b_hat>: sign(a_x) (b_x cos + b_z sin)(omega_p).

    Independent of a's y and z components, i.e. the two sides are no longer
    correlated through them.  Requires a_x != 0 (the a_x = 0 case is the
    degenerate observable).
    """
    a = _unit(a, "a")
    b = _unit(b, "b")
    if a[0] == 0.0:
        raise ValueError("degenerate limit: a_x must be non-zero")
    return math.copysign(1.0, a[0]) * (b[0] * math.cos(omega_p) + b[2] * math.sin(omega_p))
