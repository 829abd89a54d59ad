"""Density matrices and expectation values."""

import logging
from dataclasses import dataclass

import numpy as np

from contextium.errors import DimensionMismatchError, InvalidStateError, NumericalError
from contextium.linalg.operators import OperatorLike, as_matrix, max_norm
from contextium.settings import get_settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Positive, unit-trace state ρ."""

    matrix: np.ndarray

    @classmethod
    def from_matrix(cls, matrix, tol: float | None = None) -> "DensityMatrix":
        m = np.array(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
            raise DimensionMismatchError(f"density matrix must be square, got shape {m.shape}")
        tol = get_settings().projector_tol if tol is None else tol
        if max_norm(m - m.conj().T) > tol:
            raise InvalidStateError("density matrix is not Hermitian")
        m = (m + m.conj().T) / 2
        trace = np.trace(m).real
        if abs(trace - 1.0) > tol:
            raise InvalidStateError(f"density matrix trace is {trace!r}, expected 1")
        smallest = float(np.linalg.eigvalsh(m)[0])
        if smallest < -tol:
            raise InvalidStateError(f"density matrix has negative eigenvalue {smallest:.3e}")
        m.setflags(write=False)
        return cls(m)

    @classmethod
    def from_vector(cls, psi) -> "DensityMatrix":
        return density_from_vector(psi)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def normalize(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    norm = np.linalg.norm(psi)
    if norm == 0:
        raise InvalidStateError("state vector has zero norm")
    return psi / norm


def density_from_vector(psi) -> DensityMatrix:
    """|ψ⟩⟨ψ| for a (re-normalized) state vector."""
    psi = normalize(psi)
    return DensityMatrix.from_matrix(np.outer(psi, psi.conj()))


def maximally_mixed(d: int) -> DensityMatrix:
    return DensityMatrix.from_matrix(np.eye(d, dtype=complex) / d)


def purity(rho: DensityMatrix) -> float:
    """β = Tr(ρ²)."""
    m = rho.matrix
    return float(np.real(np.vdot(m, m)))


def expectation(x: OperatorLike, rho: DensityMatrix) -> complex:
    """Tr(Xρ)."""
    m = as_matrix(x)
    if m.shape != rho.matrix.shape:
        raise DimensionMismatchError(f"operator shape {m.shape} does not match state {rho.matrix.shape}")
    return complex(np.trace(m @ rho.matrix))


def variance(x: OperatorLike, rho: DensityMatrix, tol: float | None = None) -> float:
    """ΔX² = Tr(X²ρ) − Tr(Xρ)², clamped at zero within ``tol``."""
    m = as_matrix(x)
    value = expectation(m @ m, rho).real - expectation(m, rho).real ** 2
    tol = get_settings().clamp_tol if tol is None else tol
    if value < -tol * max(1.0, max_norm(m) ** 2):
        raise NumericalError(f"negative variance {value:.3e}")
    return max(value, 0.0)


def fidelity(psi, phi) -> float:
    """|⟨ψ|φ⟩|² for normalized vectors."""
    return float(abs(np.vdot(normalize(psi), normalize(phi))) ** 2)


def random_pure(d: int, seed: int | np.random.Generator) -> DensityMatrix:
    rng = np.random.default_rng(seed)
    psi = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return density_from_vector(psi)


def random_mixed(d: int, seed: int | np.random.Generator) -> DensityMatrix:
    """Hilbert-Schmidt random state G·G†/Tr(G·G†) from a complex Ginibre matrix."""
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    m = g @ g.conj().T
    return DensityMatrix.from_matrix(m / np.trace(m).real)
