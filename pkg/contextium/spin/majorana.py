"""Majorana stellar representation of spin-1 states.

A pure spin-1 state is the symmetrized product of two spin-1/2 states |+m⟩ and
|+n⟩. In the basis (m = +1, 0, −1):

    χ ∝ (2·u0·v0, √2·(u0·v1 + u1·v0), 2·u1·v1),   ‖·‖² = 3 + m·n

with u = |+m⟩ and v = |+n⟩.
"""

import logging
import math
from dataclasses import dataclass
from typing import Literal, Union

import numpy as np

from contextium.errors import DataValidationError, NumericalError
from contextium.linalg import fix_global_phase, normalize
from contextium.spin.kcbs import zero_eigenstate
from contextium.spin.schema import Direction, StarPair, TriadRecord

logger = logging.getLogger(__name__)

Normalization = Literal["symmetric", "axial"]
StateLike = Union[StarPair, np.ndarray]

_SQRT2 = math.sqrt(2.0)
_NORM_FLOOR = 1e-12


def spin_half_state(k: Direction, sign: int = 1) -> np.ndarray:
    """|±k⟩ = (cos θ/2, e^{iφ} sin θ/2) or (sin θ/2, −e^{iφ} cos θ/2)."""
    c, s = math.cos(k.theta / 2), math.sin(k.theta / 2)
    e = complex(math.cos(k.phi), math.sin(k.phi))
    if sign > 0:
        return np.array([c, e * s], dtype=complex)
    return np.array([s, -e * c], dtype=complex)


def states_from_angles(theta_m, phi_m, theta_n, phi_n) -> np.ndarray:
    """Normalized spin-1 states for broadcast arrays of star angles, shape (..., 3)."""
    theta_m, phi_m, theta_n, phi_n = np.broadcast_arrays(
        *(np.asarray(x, dtype=float) for x in (theta_m, phi_m, theta_n, phi_n))
    )
    u0, u1 = np.cos(theta_m / 2), np.exp(1j * phi_m) * np.sin(theta_m / 2)
    v0, v1 = np.cos(theta_n / 2), np.exp(1j * phi_n) * np.sin(theta_n / 2)
    chi = np.stack([2 * u0 * v0, _SQRT2 * (u0 * v1 + u1 * v0), 2 * u1 * v1], axis=-1)
    return chi / np.linalg.norm(chi, axis=-1, keepdims=True)


def state_from_stars(p: StarPair) -> np.ndarray:
    return fix_global_phase(states_from_angles(*p.angles()))


def _direction_from_root(zeta: complex) -> Direction:
    return Direction(theta=2 * math.atan(abs(zeta)), phi=math.atan2(zeta.imag, zeta.real))


def stars_from_state(psi) -> StarPair:
    """Invert the Majorana map via the roots of c₊z² − √2·c₀z + c₋."""
    psi = normalize(psi)
    if psi.shape != (3,):
        raise DataValidationError(f"expected a spin-1 state of length 3, got {psi.shape}")
    c_plus, c_zero, c_minus = psi
    south = Direction(theta=math.pi, phi=0.0)
    # A tiny but nonzero c₊ is kept: its large root still maps to a star near the south pole
    if c_plus == 0:
        if c_zero == 0:
            return StarPair(m=south, n=south)
        other = _direction_from_root(c_minus / (_SQRT2 * c_zero))
        return StarPair(m=other, n=south).canonical()
    b = -_SQRT2 * c_zero
    root = np.sqrt(b * b - 4 * c_plus * c_minus)
    if (b.conjugate() * root).real < 0:
        root = -root
    # Large root from q, small root from c₋/q, so neither loses precision
    q = -(b + root) / 2
    if q == 0:
        return StarPair(m=Direction(theta=0.0, phi=0.0), n=Direction(theta=0.0, phi=0.0))
    return StarPair(m=_direction_from_root(complex(q / c_plus)), n=_direction_from_root(complex(c_minus / q))).canonical()


def as_state(state: StateLike) -> np.ndarray:
    if isinstance(state, StarPair):
        return state_from_stars(state)
    return normalize(state)


def triad_vectors(k: Direction) -> np.ndarray:
    """Rows k, k1 = ∂k/∂θ and k2 = (−sinφ, cosφ, 0); poles use φ = 0."""
    st, ct = math.sin(k.theta), math.cos(k.theta)
    sp, cp = math.sin(k.phi), math.cos(k.phi)
    return np.array(
        [
            [st * cp, st * sp, ct],
            [ct * cp, ct * sp, -st],
            [-sp, cp, 0.0],
        ]
    )


def triad(k: Direction) -> tuple[Direction, Direction, Direction]:
    _, k1, k2 = triad_vectors(k)
    return k, Direction.from_vector(k1), Direction.from_vector(k2)


@dataclass(frozen=True)
class TriadCoefficients:
    """Amplitudes of a state on |0_k⟩, |0_k1⟩, |0_k2⟩."""

    K: complex
    K1: complex
    K2: complex
    triad: tuple[Direction, Direction, Direction]

    @property
    def norm(self) -> float:
        return abs(self.K) ** 2 + abs(self.K1) ** 2 + abs(self.K2) ** 2

    def moduli(self) -> np.ndarray:
        return np.abs(np.array([self.K, self.K1, self.K2]))

    def to_record(self, discrepancy: float | None = None) -> TriadRecord:
        k, k1, k2 = self.triad
        return TriadRecord(
            K=(self.K.real, self.K.imag),
            K1=(self.K1.real, self.K1.imag),
            K2=(self.K2.real, self.K2.imag),
            k=k,
            k1=k1,
            k2=k2,
            norm=self.norm,
            closed_form_discrepancy=discrepancy,
        )


def triad_coefficients(p: StateLike, k: Direction) -> TriadCoefficients:
    """Coefficients as inner products with the phase-fixed m = 0 states of the triad."""
    chi = as_state(p)
    directions = triad(k)
    amplitudes = [complex(np.vdot(zero_eigenstate(vec), chi)) for vec in triad_vectors(k)]
    return TriadCoefficients(*amplitudes, triad=directions)


def closed_form_triad_coefficients(
    p: StarPair, k: Direction, normalization: Normalization = "symmetric"
) -> TriadCoefficients:
    """Lab-frame closed forms for (K, K1, K2) in terms of the star and axis angles.

    ``"symmetric"`` divides by √((3 + m·n)/2), which keeps the coefficients
    unit-norm; ``"axial"`` divides by √(1 + m·n − cosθ_m·cosθ_n) with the polar
    angles taken from k, i.e. √(1 + m·n − (k·m)(k·n)). Antipodal pairs skip the
    closed form and use the inner products directly.
    """
    if p.is_antipodal:
        return triad_coefficients(p, k)
    tm, pm, tn, pn = p.angles()
    cm, sm = math.cos(tm / 2), math.sin(tm / 2)
    cn, sn = math.cos(tn / 2), math.sin(tn / 2)
    e_mn = np.exp(1j * (pm + pn - 2 * k.phi))
    e_m = np.exp(1j * (pm - k.phi))
    e_n = np.exp(1j * (pn - k.phi))
    x = cm * cn - sm * sn * e_mn
    y = sm * cn * e_m + cm * sn * e_n
    z = cm * cn + sm * sn * e_mn

    m_dot_n = float(p.m.vector @ p.n.vector)
    if normalization == "symmetric":
        norm_sq = (3 + m_dot_n) / 2
    elif normalization == "axial":
        norm_sq = 1 + m_dot_n - float(k.vector @ p.m.vector) * float(k.vector @ p.n.vector)
    else:
        raise DataValidationError(f"unknown normalization {normalization!r}")
    if norm_sq <= _NORM_FLOOR:
        raise NumericalError(f"{normalization} normalization vanishes for this star pair")
    norm = math.sqrt(norm_sq)

    st, ct = math.sin(k.theta), math.cos(k.theta)
    return TriadCoefficients(
        K=complex((st * x - ct * y) / norm),
        K1=complex(-(ct * x + st * y) / norm),
        K2=complex(z / norm),
        triad=triad(k),
    )


def coefficient_discrepancy(p: StarPair, k: Direction, normalization: Normalization = "symmetric") -> float:
    """Largest modulus difference between the closed forms and the inner products."""
    closed = closed_form_triad_coefficients(p, k, normalization)
    exact = triad_coefficients(p, k)
    gap = float(np.max(np.abs(closed.moduli() - exact.moduli())))
    if gap > 1e-9:
        logger.debug("closed-form %s coefficients differ by %.3e", normalization, gap)
    return gap


def bargmann(a, b, c, d) -> complex:
    """⟨a|b⟩⟨b|c⟩⟨c|d⟩⟨d|a⟩."""
    return complex(np.vdot(a, b) * np.vdot(b, c) * np.vdot(c, d) * np.vdot(d, a))


def overlap_via_bargmann(p: StarPair, k: Direction) -> float:
    """|⟨0_k|χ⟩|² from pairwise angles and the Bargmann invariant B(+k, +m, −k, +n)."""
    kv, mv, nv = k.vector, p.m.vector, p.n.vector
    km, kn, mn = float(kv @ mv), float(kv @ nv), float(mv @ nv)
    geometric = bargmann(spin_half_state(k, 1), spin_half_state(p.m, 1), spin_half_state(k, -1), spin_half_state(p.n, 1))
    angular = (1 + km) * (1 - kn) / 4 + (1 + kn) * (1 - km) / 4
    return 2 / (3 + mn) * (angular + 2 * geometric.real)


def zero_probability(state: StateLike, k: Direction) -> float:
    """p_k = |⟨0_k|χ⟩|²."""
    return float(abs(np.vdot(zero_eigenstate(k), as_state(state))) ** 2)


def zero_probabilities(states: np.ndarray, directions: np.ndarray) -> np.ndarray:
    """p_k for a batch of states (..., 3) against directions (n, 3), shape (..., n)."""
    zeros = np.array([zero_eigenstate(k) for k in np.atleast_2d(directions)])
    return np.abs(states @ zeros.conj().T) ** 2


def variance_A(state: StateLike, k: Direction) -> float:
    """(ΔA_k)² = 4·p_k·(1 − p_k)."""
    p = zero_probability(state, k)
    return 4 * p * (1 - p)


def max_uncertainty_residual(state: StateLike, k: Direction) -> float:
    """|K|² − 1/2; zero on the maximum-uncertainty surface of A_k."""
    return zero_probability(state, k) - 0.5
