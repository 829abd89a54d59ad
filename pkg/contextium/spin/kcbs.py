"""Spin-1 observables and the KCBS pentagon.

Basis ordering is (m = +1, 0, −1). The dichotomic observable along k is
A_k = 2S_k² − I = I − 2|0_k⟩⟨0_k|, with spectrum {+1, +1, −1}.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from contextium.errors import DataValidationError
from contextium.linalg import (
    DensityMatrix,
    HermitianOperator,
    density_from_vector,
    fix_global_phase,
    maximally_mixed,
)
from contextium.measures import Context, ContextFamily
from contextium.spin.schema import Direction

logger = logging.getLogger(__name__)

# Polar angle of the pentagon cone: cos²θ = 1/√5
KCBS_THETA = math.asin(1.0 / (math.sqrt(2.0) * math.cos(math.pi / 10)))
# k_α·k_{α+2}
KCBS_COS_GAMMA = (math.sqrt(5.0) - 1.0) / 2.0
PENTAGON_SIZE = 5

_SQRT2 = math.sqrt(2.0)


def spin_operators() -> tuple[HermitianOperator, HermitianOperator, HermitianOperator]:
    """(Sx, Sy, Sz) for spin 1."""
    sx = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex) / _SQRT2
    sy = np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]], dtype=complex) / _SQRT2
    sz = np.diag([1.0, 0.0, -1.0]).astype(complex)
    return HermitianOperator.from_matrix(sx), HermitianOperator.from_matrix(sy), HermitianOperator.from_matrix(sz)


def _as_vector(k: Direction | np.ndarray) -> np.ndarray:
    if isinstance(k, Direction):
        return k.vector
    v = np.asarray(k, dtype=float)
    norm = np.linalg.norm(v)
    if v.shape != (3,) or norm == 0:
        raise DataValidationError(f"expected a nonzero 3-vector, got {v!r}")
    return v / norm


def spin_component(k: Direction | np.ndarray) -> HermitianOperator:
    """S_k = kx·Sx + ky·Sy + kz·Sz."""
    kx, ky, kz = _as_vector(k)
    sx, sy, sz = spin_operators()
    return HermitianOperator.from_matrix(kx * sx.matrix + ky * sy.matrix + kz * sz.matrix)


def spin_squared() -> HermitianOperator:
    """S² = 2I for spin 1."""
    return HermitianOperator.from_matrix(sum(s.matrix @ s.matrix for s in spin_operators()))


def dichotomic_observable(k: Direction | np.ndarray) -> HermitianOperator:
    s = spin_component(k).matrix
    return HermitianOperator.from_matrix(2 * s @ s - np.eye(3))


def zero_eigenstate(k: Direction | np.ndarray) -> np.ndarray:
    """|0_k⟩, the kernel of S_k, with the first nonzero amplitude real positive."""
    kx, ky, kz = _as_vector(k)
    psi = np.array([-(kx - 1j * ky) / _SQRT2, kz, (kx + 1j * ky) / _SQRT2], dtype=complex)
    return fix_global_phase(psi)


def spin_eigenstate(k: Direction | np.ndarray, m: int) -> np.ndarray:
    """Eigenstate of S_k with eigenvalue m ∈ {+1, 0, −1}."""
    if m == 0:
        return zero_eigenstate(k)
    if m not in (1, -1):
        raise DataValidationError(f"spin-1 projection must be +1, 0 or -1, got {m}")
    direction = k if isinstance(k, Direction) else Direction.from_vector(_as_vector(k))
    c, s = math.cos(direction.theta / 2), math.sin(direction.theta / 2)
    e = np.exp(1j * direction.phi)
    if m == 1:
        psi = np.array([c * c, _SQRT2 * c * s * e, s * s * e * e])
    else:
        psi = np.array([s * s, -_SQRT2 * c * s * e, c * c * e * e])
    return fix_global_phase(psi)


def zero_state_overlap(k: Direction | np.ndarray, k_prime: Direction | np.ndarray) -> float:
    """|⟨0_k|0_k'⟩|², equal to (k·k')²."""
    return float(abs(np.vdot(zero_eigenstate(k), zero_eigenstate(k_prime))) ** 2)


@dataclass(frozen=True, eq=False)
class KcbsPentagon:
    directions: tuple[Direction, ...]
    observables: tuple[HermitianOperator, ...]
    family: ContextFamily

    def direction(self, index: int) -> Direction:
        """k_α for a 1-based, cyclic index."""
        return self.directions[(index - 1) % PENTAGON_SIZE]

    def observable(self, index: int) -> HermitianOperator:
        return self.observables[(index - 1) % PENTAGON_SIZE]

    def context(self, index: int) -> Context:
        return self.family[(index - 1) % PENTAGON_SIZE]


def pentagon_directions() -> tuple[Direction, ...]:
    return tuple(Direction(theta=KCBS_THETA, phi=(alpha * 6 * math.pi / 5) % (2 * math.pi)) for alpha in range(PENTAGON_SIZE))


def kcbs_pentagon() -> KcbsPentagon:
    """Five directions on the KCBS cone and the contexts G_α = {A_{α−1}, A_α, A_{α+1}}."""
    directions = pentagon_directions()
    observables = tuple(dichotomic_observable(k) for k in directions)
    contexts = []
    for alpha in range(1, PENTAGON_SIZE + 1):
        before = observables[(alpha - 2) % PENTAGON_SIZE]
        central = observables[alpha - 1]
        after = observables[alpha % PENTAGON_SIZE]
        contexts.append(Context.from_operators(before, central, after, name=f"G{alpha}"))
    logger.debug("built KCBS pentagon at θ=%.12f", KCBS_THETA)
    return KcbsPentagon(directions=directions, observables=observables, family=ContextFamily.of(contexts))


def kcbs_scenario_states() -> dict[str, DensityMatrix]:
    z = Direction(theta=0.0, phi=0.0)
    return {
        "zero_z": density_from_vector(zero_eigenstate(z)),
        "plus_z": density_from_vector(spin_eigenstate(z, 1)),
        "minus_z": density_from_vector(spin_eigenstate(z, -1)),
        "mixed": maximally_mixed(3),
    }


def mie_closed_form_S(gamma: float) -> float:
    """E of {S_k1, S², S_v} for directions at angle γ."""
    c2 = math.cos(gamma) ** 2
    return (5 - 2 * c2 + 9 * c2 * c2) / 12


def mie_closed_form_A(gamma: float) -> float:
    """E of {A_k1, A_k2, A_v} with k2 orthogonal to both k1 and v."""
    c2 = math.cos(gamma) ** 2
    return (3 - 4 * c2 + 4 * c2 * c2) / 3


def illustrative_contexts(gamma: float) -> tuple[Context, Context]:
    """Degenerate (S) and nondegenerate (A) contexts for outer directions at angle γ.

    k1 = x̂, v = (cosγ, sinγ, 0) and k2 = ẑ, perpendicular to the k1–v plane.
    """
    k1 = np.array([1.0, 0.0, 0.0])
    k2 = np.array([0.0, 0.0, 1.0])
    v = np.array([math.cos(gamma), math.sin(gamma), 0.0])
    ctx_s = Context.from_operators(spin_component(k1), spin_squared(), spin_component(v), name="S")
    ctx_a = Context.from_operators(dichotomic_observable(k1), dichotomic_observable(k2), dichotomic_observable(v), name="A")
    return ctx_s, ctx_a
