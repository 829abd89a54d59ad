"""Mutual information energy of a context.

E = (1/d)·Σ_ij Tr[(P_i Q_j)²] over joint-eigenspace projectors P_i of (A, B)
and Q_j of (C, B). E = 1 for a noncontextual triple and reaches 1/d when the
eigenbases are mutually unbiased.
"""

import logging
from typing import Sequence

import numpy as np

from contextium.errors import DataValidationError, NumericalError
from contextium.linalg import commutator, hs_norm
from contextium.measures.context import Context
from contextium.measures.schema import MieDiagnostics
from contextium.settings import get_settings

logger = logging.getLogger(__name__)


def overlap_terms(p: np.ndarray, q: np.ndarray) -> tuple[float, float]:
    """(Tr(PQ), Tr[(PQ)²]) for two projectors."""
    pq = p @ q
    return float(np.trace(pq).real), float(np.trace(pq @ pq).real)


def projector_commutator_identity_gap(p: np.ndarray, q: np.ndarray) -> float:
    """|‖[P,Q]‖²_HS − (2Tr(PQ) − 2Tr[(PQ)²])|, zero for any pair of projectors."""
    tr_pq, tr_pqpq = overlap_terms(p, q)
    return abs(hs_norm(commutator(p, q)) ** 2 - (2 * tr_pq - 2 * tr_pqpq))


def mie_raw(ctx: Context) -> float:
    total = sum(overlap_terms(p, q)[1] for p in ctx.ab.projectors for q in ctx.cb.projectors)
    return total / ctx.dim


def mie_via_commutators_raw(ctx: Context) -> float:
    total = sum(hs_norm(commutator(p, q)) ** 2 for p in ctx.ab.projectors for q in ctx.cb.projectors)
    return 1.0 - total / (2 * ctx.dim)


def clamp_mie(raw: float, d: int, tol: float | None = None) -> float:
    """Clamp E into [1/d, 1], refusing values outside it by more than ``tol``."""
    tol = get_settings().clamp_tol if tol is None else tol
    lower = 1.0 / d
    if raw < lower - tol or raw > 1.0 + tol:
        raise NumericalError(f"mutual information energy {raw!r} outside [{lower}, 1]")
    if raw < lower or raw > 1.0:
        logger.debug("clamping E=%r into [%r, 1]", raw, lower)
    return min(max(raw, lower), 1.0)


def mie(ctx: Context) -> float:
    return clamp_mie(mie_raw(ctx), ctx.dim)


def mie_via_commutators(ctx: Context) -> float:
    """E through the Hilbert-Schmidt norms of projector commutators."""
    return clamp_mie(mie_via_commutators_raw(ctx), ctx.dim)


def mie_with_diagnostics(ctx: Context) -> MieDiagnostics:
    raw = mie_raw(ctx)
    value = clamp_mie(raw, ctx.dim)
    dual = clamp_mie(mie_via_commutators_raw(ctx), ctx.dim)
    return MieDiagnostics(
        name=ctx.name,
        dim=ctx.dim,
        raw=raw,
        value=value,
        one_minus_E=max(1.0 - value, 0.0),
        dual_value=dual,
        dual_delta=abs(value - dual),
    )


def _orthonormal_rows(basis: Sequence, tol: float) -> np.ndarray:
    rows = np.array([np.asarray(v, dtype=complex).reshape(-1) for v in basis])
    if rows.ndim != 2 or rows.shape[0] != rows.shape[1]:
        raise DataValidationError(f"expected d vectors of length d, got shape {rows.shape}")
    gram = rows.conj() @ rows.T
    if np.max(np.abs(gram - np.eye(rows.shape[0]))) > tol:
        raise DataValidationError("basis is not orthonormal")
    return rows


def mie_rank1(ab_basis: Sequence, cb_basis: Sequence, tol: float = 1e-9) -> float:
    """(1/d)·Σ_ij |⟨a_i|c_j⟩|⁴ for two orthonormal bases."""
    a = _orthonormal_rows(ab_basis, tol)
    c = _orthonormal_rows(cb_basis, tol)
    if a.shape != c.shape:
        raise DataValidationError(f"bases live in different dimensions: {a.shape[1]} vs {c.shape[1]}")
    overlaps = np.abs(a.conj() @ c.T) ** 2
    return float(np.sum(overlaps**2) / a.shape[0])
