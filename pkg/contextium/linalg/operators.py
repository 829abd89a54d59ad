"""Dense Hermitian operators, spectral and joint-eigenspace decompositions, norms."""

import logging
from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.stats import unitary_group

from contextium.errors import (
    DimensionMismatchError,
    NonCommutingError,
    NonHermitianError,
    NumericalError,
)
from contextium.settings import get_settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    """A validated d×d complex Hermitian matrix."""

    matrix: np.ndarray

    @classmethod
    def from_matrix(cls, matrix, tol: float | None = None) -> "HermitianOperator":
        m = np.array(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
            raise DimensionMismatchError(f"expected a non-empty square matrix, got shape {m.shape}")
        tol = get_settings().hermiticity_tol if tol is None else tol
        deviation = max_norm(m - m.conj().T)
        if deviation > tol * max(1.0, max_norm(m)):
            raise NonHermitianError(f"matrix is not Hermitian: ‖M − M†‖_max = {deviation:.3e}")
        # Symmetrize away round-off so eigh sees an exactly Hermitian input
        m = (m + m.conj().T) / 2
        m.setflags(write=False)
        return cls(m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


OperatorLike = Union[HermitianOperator, np.ndarray]


def as_matrix(x: OperatorLike) -> np.ndarray:
    if isinstance(x, HermitianOperator):
        return x.matrix
    return np.asarray(x, dtype=complex)


def as_hermitian(x: OperatorLike) -> HermitianOperator:
    if isinstance(x, HermitianOperator):
        return x
    return HermitianOperator.from_matrix(x)


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Eigenvalues grouped by degeneracy, one projector per group (ascending order)."""

    eigenvalues: tuple[float, ...]
    projectors: tuple[np.ndarray, ...]
    dims: tuple[int, ...]
    # Orthonormal columns spanning each group, d × dims[i]
    bases: tuple[np.ndarray, ...]

    def reconstruct(self) -> np.ndarray:
        return sum(lam * p for lam, p in zip(self.eigenvalues, self.projectors))


@dataclass(frozen=True, eq=False)
class JointEigenspaceFamily:
    """Projectors onto simultaneous eigenspaces of a commuting pair (A, B)."""

    pairs: tuple[tuple[float, float], ...]
    projectors: tuple[np.ndarray, ...]
    dims: tuple[int, ...]
    bases: tuple[np.ndarray, ...]

    @property
    def a_values(self) -> tuple[float, ...]:
        return tuple(a for a, _ in self.pairs)

    @property
    def is_rank_one(self) -> bool:
        return all(k == 1 for k in self.dims)


def commutator(a: OperatorLike, c: OperatorLike) -> np.ndarray:
    a, c = as_matrix(a), as_matrix(c)
    _check_conformable(a, c)
    return a @ c - c @ a


def hs_norm(x: OperatorLike) -> float:
    return float(np.linalg.norm(as_matrix(x), "fro"))


def op_norm(x: OperatorLike) -> float:
    return float(np.linalg.norm(as_matrix(x), 2))


def trace_norm(x: OperatorLike) -> float:
    return float(np.linalg.norm(as_matrix(x), "nuc"))


def max_norm(x: OperatorLike) -> float:
    m = as_matrix(x)
    return float(np.max(np.abs(m))) if m.size else 0.0


def _check_conformable(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionMismatchError(f"operator shapes differ: {a.shape} vs {b.shape}")


def _eigh(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    try:
        return np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver did not converge: {exc}") from exc


def _grouped_eigh(
    m: np.ndarray, group_tol: float, scale: float | None = None
) -> list[tuple[float, np.ndarray]]:
    """Diagonalize ``m`` and merge eigenvalues pairwise within ``group_tol·max(1, scale)``.

    ``scale`` defaults to ‖m‖_op.
    """
    w, v = _eigh(m)
    if scale is None:
        scale = float(np.max(np.abs(w)))
    threshold = group_tol * max(1.0, scale)
    groups: list[list[int]] = [[0]]
    for i in range(1, len(w)):
        if w[i] - w[groups[-1][0]] <= threshold:
            groups[-1].append(i)
        else:
            groups.append([i])
    return [(float(np.mean(w[idx])), v[:, idx]) for idx in groups]


def _projector(basis: np.ndarray) -> np.ndarray:
    p = basis @ basis.conj().T
    return (p + p.conj().T) / 2


def eigendecompose(h: OperatorLike, group_tol: float | None = None) -> SpectralDecomposition:
    """Spectral decomposition of a Hermitian operator with degeneracy grouping."""
    h = as_hermitian(h)
    group_tol = get_settings().group_tol if group_tol is None else group_tol
    groups = _grouped_eigh(h.matrix, group_tol)
    logger.debug("eigendecompose: d=%d, %d degeneracy groups", h.dim, len(groups))
    return SpectralDecomposition(
        eigenvalues=tuple(lam for lam, _ in groups),
        projectors=tuple(_projector(b) for _, b in groups),
        dims=tuple(b.shape[1] for _, b in groups),
        bases=tuple(b for _, b in groups),
    )


def check_commute(a: OperatorLike, b: OperatorLike, commute_tol: float | None = None) -> float:
    """Return ‖[A,B]‖_op, raising ``NonCommutingError`` above the relative tolerance."""
    a, b = as_matrix(a), as_matrix(b)
    commute_tol = get_settings().commute_tol if commute_tol is None else commute_tol
    norm = op_norm(commutator(a, b))
    tolerance = commute_tol * op_norm(a) * op_norm(b)
    if norm > tolerance:
        raise NonCommutingError("operators do not commute", norm, tolerance)
    return norm


def joint_eigenprojectors(
    a: OperatorLike,
    b: OperatorLike,
    tol: float | None = None,
    group_tol: float | None = None,
) -> JointEigenspaceFamily:
    """Joint eigenspaces of a commuting pair.

    B is diagonalized first; A is then diagonalized on each compressed
    B-eigenspace, so exact degeneracies of either operator survive.
    """
    a, b = as_hermitian(a), as_hermitian(b)
    _check_conformable(a.matrix, b.matrix)
    check_commute(a, b, tol)
    group_tol = get_settings().group_tol if group_tol is None else group_tol

    pairs: list[tuple[float, float]] = []
    bases: list[np.ndarray] = []
    for b_value, b_basis in _grouped_eigh(b.matrix, group_tol):
        compressed = b_basis.conj().T @ a.matrix @ b_basis
        compressed = (compressed + compressed.conj().T) / 2
        for a_value, sub in _grouped_eigh(compressed, group_tol, scale=op_norm(a)):
            pairs.append((a_value, b_value))
            bases.append(b_basis @ sub)

    logger.debug("joint_eigenprojectors: %d blocks, dims %s", len(bases), [x.shape[1] for x in bases])
    return JointEigenspaceFamily(
        pairs=tuple(pairs),
        projectors=tuple(_projector(x) for x in bases),
        dims=tuple(x.shape[1] for x in bases),
        bases=tuple(bases),
    )


def fix_global_phase(psi: np.ndarray, cutoff: float = 1e-12) -> np.ndarray:
    """Rotate the global phase so the first non-negligible component is real positive."""
    psi = np.asarray(psi, dtype=complex)
    for amplitude in psi:
        if abs(amplitude) > cutoff:
            return psi * (abs(amplitude) / amplitude)
    return psi


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random d×d unitary."""
    if d < 1:
        raise DimensionMismatchError(f"unitary dimension must be positive, got {d}")
    if d == 1:
        return np.exp(2j * np.pi * rng.random((1, 1)))
    return unitary_group.rvs(d, random_state=rng)


def random_hermitian(d: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return (z + z.conj().T) / 2


def random_projector(d: int, rank: int, rng: np.random.Generator) -> np.ndarray:
    if not 0 <= rank <= d:
        raise DimensionMismatchError(f"rank {rank} outside [0, {d}]")
    return _projector(random_unitary(d, rng)[:, :rank])
