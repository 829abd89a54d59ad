"""Directions on the unit sphere and Majorana star pairs."""

import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

TWO_PI = 2 * math.pi


class Direction(BaseModel):
    """Unit vector k = (sinθ cosφ, sinθ sinφ, cosθ)."""

    model_config = ConfigDict(frozen=True)

    theta: float = Field(ge=0.0, le=math.pi)
    phi: float = 0.0

    @field_validator("phi")
    @classmethod
    def _wrap_phi(cls, value: float) -> float:
        wrapped = math.fmod(value, TWO_PI)
        if wrapped < 0:
            wrapped += TWO_PI
        return 0.0 if wrapped >= TWO_PI else wrapped

    @classmethod
    def from_vector(cls, vector, pole_cutoff: float = 1e-12) -> "Direction":
        v = np.asarray(vector, dtype=float)
        v = v / np.linalg.norm(v)
        theta = math.acos(float(np.clip(v[2], -1.0, 1.0)))
        if math.hypot(v[0], v[1]) < pole_cutoff:
            return cls(theta=theta, phi=0.0)
        return cls(theta=theta, phi=math.atan2(v[1], v[0]))

    @classmethod
    def from_angles(cls, theta: float, phi: float) -> "Direction":
        """Accept any real angles, folding θ back into [0, π]."""
        st, ct = math.sin(theta), math.cos(theta)
        return cls.from_vector([st * math.cos(phi), st * math.sin(phi), ct])

    @property
    def vector(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])

    def angle_to(self, other: "Direction") -> float:
        return math.acos(float(np.clip(self.vector @ other.vector, -1.0, 1.0)))

    def key(self) -> tuple[float, float]:
        return (self.theta, self.phi)


class StarPair(BaseModel):
    """Unordered pair of Majorana stars; equality ignores order."""

    model_config = ConfigDict(frozen=True)

    m: Direction
    n: Direction

    def canonical(self) -> "StarPair":
        """Same pair with m ≤ n lexicographically in (θ, φ)."""
        if self.n.key() < self.m.key():
            return StarPair(m=self.n, n=self.m)
        return self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StarPair):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return a.m.key() == b.m.key() and a.n.key() == b.n.key()

    def __hash__(self) -> int:
        c = self.canonical()
        return hash((c.m.key(), c.n.key()))

    @property
    def is_antipodal(self) -> bool:
        return bool(np.allclose(self.m.vector, -self.n.vector, atol=1e-12))

    @classmethod
    def from_angles(cls, theta_m: float, phi_m: float, theta_n: float, phi_n: float) -> "StarPair":
        return cls(m=Direction.from_angles(theta_m, phi_m), n=Direction.from_angles(theta_n, phi_n))

    def angles(self) -> tuple[float, float, float, float]:
        return (self.m.theta, self.m.phi, self.n.theta, self.n.phi)


class TriadRecord(BaseModel):
    """Serialized triad coefficients; complex values as [re, im]."""

    model_config = ConfigDict(frozen=True)

    K: tuple[float, float]
    K1: tuple[float, float]
    K2: tuple[float, float]
    k: Direction
    k1: Direction
    k2: Direction
    norm: float
    closed_form_discrepancy: float | None = None
