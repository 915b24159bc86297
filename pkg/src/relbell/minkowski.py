"""Four-vector algebra and Lorentz boosts in natural units (c = 1).

Components are ordered (x, y, z, t) and the metric is diag(+1, +1, +1, -1),
so an on-shell momentum of mass m has invariant norm -m^2.  All matrices in
this package act on column vectors in this ordering.

Rapidities are additive boost parameters; the corresponding speed is
beta = tanh(rapidity).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "METRIC",
    "FourVector",
    "LorentzTransform",
    "standard_boost_z",
    "standard_boost_neg_z",
    "boost_x",
    "standard_boost",
    "momentum_z",
    "beta_of",
    "rapidity_of",
]

METRIC = np.diag([1.0, 1.0, 1.0, -1.0])
METRIC.setflags(write=False)


def _require_finite(**values):
    for name, value in values.items():
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class FourVector:
    """A momentum (or event) four-vector with components (x, y, z, t)."""

    x: float
    y: float
    z: float
    t: float

    @classmethod
    def from_array(cls, values) -> "FourVector":
        x, y, z, t = np.asarray(values, dtype=float)
        return cls(float(x), float(y), float(z), float(t))

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z, self.t])

    def minkowski_norm(self) -> float:
        """x^2 + y^2 + z^2 - t^2; equals -m^2 on the mass shell."""
        return self.x * self.x + self.y * self.y + self.z * self.z - self.t * self.t

    def mass(self) -> float:
        """Invariant mass of a timelike, future-pointing vector."""
        m2 = -self.minkowski_norm()
        if m2 <= 0.0 or self.t <= 0.0:
            raise ValueError(f"not a timelike future-pointing vector: {self}")
        return math.sqrt(m2)

    def spatial_inverse(self) -> "FourVector":
        """Parity image: spatial components flipped, time component kept."""
        return FourVector(-self.x, -self.y, -self.z, self.t)

    def is_on_shell(self, mass: float, tol: float = 1e-9) -> bool:
        return abs(self.minkowski_norm() + mass * mass) <= tol and self.t > 0.0


@dataclass(frozen=True)
class LorentzTransform:
    """A 4x4 real matrix acting on (x, y, z, t) column vectors.

    Instances produced by the constructors below are proper orthochronous:
    m^T eta m = eta, det m = +1, and m[3, 3] >= 1.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        if m.shape != (4, 4):
            raise ValueError("Lorentz transform must be a 4x4 real matrix")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def identity(cls) -> "LorentzTransform":
        return cls(np.eye(4))

    def apply(self, p: FourVector) -> FourVector:
        return FourVector.from_array(self.matrix @ p.as_array())

    def compose(self, other: "LorentzTransform") -> "LorentzTransform":
        """Matrix product self . other (other acts first)."""
        return LorentzTransform(self.matrix @ other.matrix)

    def __matmul__(self, other: "LorentzTransform") -> "LorentzTransform":
        return self.compose(other)

    def inverse(self) -> "LorentzTransform":
        # eta m^T eta is the exact inverse of any pseudo-orthogonal matrix;
        # unlike a numerical inverse it introduces no roundoff of its own.
        return LorentzTransform(METRIC @ self.matrix.T @ METRIC)

    def pseudo_orthogonality_defect(self) -> float:
        """Max elementwise deviation of m^T eta m from eta."""
        m = self.matrix
        return float(np.abs(m.T @ METRIC @ m - METRIC).max())

    def is_proper_orthochronous(self, tol: float = 1e-9) -> bool:
        return (
            self.pseudo_orthogonality_defect() <= tol
            and abs(np.linalg.det(self.matrix) - 1.0) <= tol
            and self.matrix[3, 3] >= 1.0 - tol
        )


def momentum_z(eta: float, mass: float = 1.0) -> FourVector:
    """On-shell momentum of rapidity eta along +z: (0, 0, m sinh eta, m cosh eta)."""
    _require_finite(eta=eta, mass=mass)
    if mass <= 0.0:
        raise ValueError(f"mass must be positive, got {mass!r}")
    return FourVector(0.0, 0.0, mass * math.sinh(eta), mass * math.cosh(eta))


def standard_boost_z(eta: float, mass: float = 1.0) -> LorentzTransform:
    """Pure boost along +z carrying the rest momentum (0, 0, 0, m) to rapidity eta.

    Only the z-t block is non-trivial:

        [[1, 0, 0,        0       ],
         [0, 1, 0,        0       ],
         [0, 0, cosh eta, sinh eta],
         [0, 0, sinh eta, cosh eta]]
    """
    _require_finite(eta=eta, mass=mass)
    if mass <= 0.0:
        raise ValueError(f"mass must be positive, got {mass!r}")
    m = np.eye(4)
    m[2, 2] = m[3, 3] = math.cosh(eta)
    m[2, 3] = m[3, 2] = math.sinh(eta)
    return LorentzTransform(m)


def standard_boost_neg_z(eta: float, mass: float = 1.0) -> LorentzTransform:
    """Pure boost along -z: the parity image of standard_boost_z, i.e. eta -> -eta."""
    return standard_boost_z(-eta, mass)


def boost_x(omega: float) -> LorentzTransform:
    """Boost of rapidity omega along x (frame speed beta = tanh omega).

    The x-t block is symmetric with both off-diagonal entries sinh(omega);
    pseudo-orthogonality admits no other choice.
    """
    _require_finite(omega=omega)
    m = np.eye(4)
    m[0, 0] = m[3, 3] = math.cosh(omega)
    m[0, 3] = m[3, 0] = math.sinh(omega)
    return LorentzTransform(m)


def standard_boost(p: FourVector, mass: float, tol: float = 1e-9) -> LorentzTransform:
    """Pure boost carrying the rest momentum (0, 0, 0, mass) to p.

    p must be on-shell for the given mass (checked to `tol` on the invariant
    norm).  For p along an axis this reduces to the axis-aligned constructors.
    """
    _require_finite(mass=mass)
    if mass <= 0.0:
        raise ValueError(f"mass must be positive, got {mass!r}")
    if not p.is_on_shell(mass, tol):
        raise ValueError(f"momentum {p} is not on-shell for mass {mass!r}")
    spatial = p.as_array()[:3]
    radius = float(np.linalg.norm(spatial))
    m = np.eye(4)
    if radius == 0.0:
        return LorentzTransform(m)
    n = spatial / radius
    gamma = p.t / mass
    m[:3, :3] += (gamma - 1.0) * np.outer(n, n)
    m[:3, 3] = m[3, :3] = (radius / mass) * n
    m[3, 3] = gamma
    return LorentzTransform(m)


def beta_of(omega: float) -> float:
    """Speed of a boost of rapidity omega: beta = tanh(omega)."""
    _require_finite(omega=omega)
    return math.tanh(omega)


def rapidity_of(beta: float) -> float:
    """Rapidity of a boost of speed beta; requires |beta| < 1."""
    _require_finite(beta=beta)
    if abs(beta) >= 1.0:
        raise ValueError(f"|beta| must be < 1, got {beta!r}")
    return math.atanh(beta)
