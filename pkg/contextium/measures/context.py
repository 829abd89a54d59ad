"""Contexts {A, B, C} with [A,B] = [B,C] = 0 and the operational measure D."""

import logging
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from contextium.errors import DimensionMismatchError
from contextium.linalg import (
    DensityMatrix,
    HermitianOperator,
    JointEigenspaceFamily,
    as_hermitian,
    commutator,
    expectation,
    fix_global_phase,
    joint_eigenprojectors,
    random_hermitian,
    random_unitary,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Context:
    """Ordered triple with B commuting with both A and C.

    Joint families for (A, B) and (C, B) are computed once at construction.
    """

    a: HermitianOperator
    b: HermitianOperator
    c: HermitianOperator
    ab: JointEigenspaceFamily
    cb: JointEigenspaceFamily
    name: str = ""

    @classmethod
    def from_operators(
        cls,
        a,
        b,
        c,
        name: str = "",
        commute_tol: float | None = None,
        group_tol: float | None = None,
    ) -> "Context":
        a, b, c = as_hermitian(a), as_hermitian(b), as_hermitian(c)
        if not a.dim == b.dim == c.dim:
            raise DimensionMismatchError(f"context {name!r} mixes dimensions {a.dim}, {b.dim}, {c.dim}")
        if a.dim < 3:
            raise DimensionMismatchError(f"context {name!r} needs d ≥ 3, got {a.dim}")
        ab = joint_eigenprojectors(a, b, commute_tol, group_tol)
        cb = joint_eigenprojectors(c, b, commute_tol, group_tol)
        return cls(a=a, b=b, c=c, ab=ab, cb=cb, name=name)

    @property
    def dim(self) -> int:
        return self.a.dim

    @property
    def outer_commutator(self) -> np.ndarray:
        """[A, C]."""
        return commutator(self.a, self.c)


@dataclass(frozen=True, eq=False)
class ContextFamily:
    contexts: tuple[Context, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if not self.contexts:
            raise DimensionMismatchError("a context family needs at least one context")
        dims = {ctx.dim for ctx in self.contexts}
        if len(dims) != 1:
            raise DimensionMismatchError(f"context family mixes dimensions {sorted(dims)}")

    @classmethod
    def of(cls, contexts: Sequence[Context]) -> "ContextFamily":
        return cls(tuple(contexts))

    @property
    def dim(self) -> int:
        return self.contexts[0].dim

    def __iter__(self) -> Iterator[Context]:
        return iter(self.contexts)

    def __len__(self) -> int:
        return len(self.contexts)

    def __getitem__(self, index: int) -> Context:
        return self.contexts[index]


def d_single(ctx: Context, rho: DensityMatrix) -> float:
    """|Tr([A,C]ρ)| for one context."""
    return abs(expectation(ctx.outer_commutator, rho))


def d_total(family: ContextFamily, rho: DensityMatrix) -> float:
    """D(G, ρ), the sum of ``d_single`` over the family."""
    return float(sum(d_single(ctx, rho) for ctx in family))


def saturating_state(ctx: Context) -> np.ndarray:
    """Pure state at which ``d_single`` reaches ‖[A,C]‖_op.

    i[A,C] is Hermitian; its eigenvector with the largest |eigenvalue| does it.
    """
    generator = 1j * ctx.outer_commutator
    w, v = np.linalg.eigh((generator + generator.conj().T) / 2)
    return fix_global_phase(v[:, int(np.argmax(np.abs(w)))])


def _random_block_sizes(d: int, rng: np.random.Generator) -> list[int]:
    n_blocks = int(rng.integers(1, d + 1))
    cuts = sorted(rng.choice(np.arange(1, d), size=n_blocks - 1, replace=False).tolist()) if n_blocks > 1 else []
    edges = [0, *cuts, d]
    return [hi - lo for lo, hi in zip(edges, edges[1:])]


def _block_diagonal(blocks: list[np.ndarray]) -> np.ndarray:
    d = sum(b.shape[0] for b in blocks)
    out = np.zeros((d, d), dtype=complex)
    start = 0
    for block in blocks:
        k = block.shape[0]
        out[start : start + k, start : start + k] = block
        start += k
    return out


def random_context(
    d: int,
    rng: np.random.Generator,
    block_sizes: Sequence[int] | None = None,
    name: str = "",
) -> Context:
    """Random context: B with the given eigenvalue multiplicities, A and C block-diagonal in B's eigenbasis."""
    sizes = list(block_sizes) if block_sizes is not None else _random_block_sizes(d, rng)
    if sum(sizes) != d or min(sizes) < 1:
        raise DimensionMismatchError(f"block sizes {sizes} do not partition d={d}")
    v = random_unitary(d, rng)
    b_diag = np.repeat(np.arange(1, len(sizes) + 1, dtype=float), sizes)
    a_blocks = _block_diagonal([random_hermitian(k, rng) for k in sizes])
    c_blocks = _block_diagonal([random_hermitian(k, rng) for k in sizes])

    def rotate(m: np.ndarray) -> np.ndarray:
        out = v @ m @ v.conj().T
        return (out + out.conj().T) / 2

    return Context.from_operators(rotate(a_blocks), rotate(np.diag(b_diag)), rotate(c_blocks), name=name)


def fourier_basis(d: int) -> np.ndarray:
    """Columns are the discrete-Fourier basis, unbiased with respect to the computational basis."""
    j, k = np.meshgrid(np.arange(d), np.arange(d), indexing="ij")
    return np.exp(2j * np.pi * j * k / d) / np.sqrt(d)


def mub_context(d: int = 3, name: str = "MUB") -> Context:
    """B = I with A and C nondegenerate in a mutually unbiased pair of bases."""
    spectrum = np.diag(np.arange(1, d + 1, dtype=complex))
    f = fourier_basis(d)
    return Context.from_operators(spectrum, np.eye(d), f @ spectrum @ f.conj().T, name=name)
