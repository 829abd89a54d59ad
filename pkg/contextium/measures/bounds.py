"""Upper bounds on the operational measure and the Robertson hierarchy.

Per context, with ρ any state of purity β:

    |Tr([A,C]ρ)| ≤ min(‖[A,C]‖_op, √β·κ·√(1−E)) ≤ κ·√(1−E)

and, through Robertson, |Tr([A,C]ρ)|/2 ≤ ΔA·ΔC.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor

from contextium.linalg import DensityMatrix, op_norm, purity, variance
from contextium.measures.context import Context, ContextFamily, d_single
from contextium.measures.mie import mie
from contextium.measures.schema import (
    BoundsReport,
    BoundsTotals,
    ContextBounds,
    HierarchyFlags,
    RobertsonRecord,
)
from contextium.settings import get_settings, resolve_threads

logger = logging.getLogger(__name__)


def kappa(ctx: Context) -> float:
    """√(2d)·(Σa²)^½·(Σc²)^½, each joint block contributing its eigenvalue once."""
    sum_a = sum(a * a for a, _ in ctx.ab.pairs)
    sum_c = sum(c * c for c, _ in ctx.cb.pairs)
    return math.sqrt(2 * ctx.dim) * math.sqrt(sum_a) * math.sqrt(sum_c)


def spectral_bound(ctx: Context, energy: float | None = None) -> float:
    energy = mie(ctx) if energy is None else energy
    return kappa(ctx) * math.sqrt(max(1.0 - energy, 0.0))


def purity_bound(ctx: Context, rho: DensityMatrix, energy: float | None = None) -> float:
    return math.sqrt(purity(rho)) * spectral_bound(ctx, energy)


def opnorm_bound(ctx: Context) -> float:
    return op_norm(ctx.outer_commutator)


def hybrid_bound(ctx: Context, rho: DensityMatrix, energy: float | None = None) -> float:
    return min(opnorm_bound(ctx), purity_bound(ctx, rho, energy))


def robertson_check(ctx: Context, rho: DensityMatrix, tol: float | None = None) -> RobertsonRecord:
    tol = get_settings().clamp_tol if tol is None else tol
    lhs = d_single(ctx, rho) / 2
    rhs = math.sqrt(variance(ctx.a, rho) * variance(ctx.c, rho))
    return RobertsonRecord(lhs=lhs, rhs=rhs, gap=rhs - lhs, satisfied=lhs <= rhs + tol)


def context_bounds(ctx: Context, rho: DensityMatrix) -> ContextBounds:
    energy = mie(ctx)
    k = kappa(ctx)
    spectral = k * math.sqrt(max(1.0 - energy, 0.0))
    purity_corrected = math.sqrt(purity(rho)) * spectral
    opnorm = opnorm_bound(ctx)
    robertson = robertson_check(ctx, rho)
    return ContextBounds(
        name=ctx.name,
        E=energy,
        one_minus_E=max(1.0 - energy, 0.0),
        kappa=k,
        d_value=2 * robertson.lhs,
        spectral_bound=spectral,
        purity_bound=purity_corrected,
        opnorm_bound=opnorm,
        hybrid_bound=min(opnorm, purity_corrected),
        variance_product=robertson.rhs,
        robertson_lhs=robertson.lhs,
    )


def hierarchy_check(totals: BoundsTotals, tol: float | None = None) -> HierarchyFlags:
    tol = get_settings().clamp_tol if tol is None else tol
    d = totals.d_value
    return HierarchyFlags(
        robertson=totals.robertson_lhs <= totals.variance_product + tol,
        spectral=d <= totals.spectral_bound + tol,
        purity=d <= totals.purity_bound + tol,
        hybrid=d <= totals.hybrid_bound + tol,
        opnorm=d <= totals.opnorm_bound + tol,
    )


def global_bounds(family: ContextFamily, rho: DensityMatrix, threads: int | None = 1) -> BoundsReport:
    """Per-context bounds and their sums over the family, in context order."""
    workers = resolve_threads(threads)
    if workers > 1 and len(family) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda ctx: context_bounds(ctx, rho), family))
    else:
        rows = [context_bounds(ctx, rho) for ctx in family]

    totals = BoundsTotals(**{key: float(sum(getattr(row, key) for row in rows)) for key in BoundsTotals.model_fields})
    hierarchy = hierarchy_check(totals)
    if not hierarchy.all_hold:
        logger.warning("bound hierarchy violated: %s", hierarchy.model_dump())
    return BoundsReport(
        beta=purity(rho),
        contexts=rows,
        totals=totals,
        hierarchy=hierarchy,
        hybrid_fraction=totals.d_value / totals.hybrid_bound if totals.hybrid_bound > 0 else 0.0,
    )
