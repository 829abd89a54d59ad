"""Contextuality measures: mutual information energy, D(G, ρ) and their bounds."""

from .bounds import (
    context_bounds,
    global_bounds,
    hierarchy_check,
    hybrid_bound,
    kappa,
    opnorm_bound,
    purity_bound,
    robertson_check,
    spectral_bound,
)
from .context import (
    Context,
    ContextFamily,
    d_single,
    d_total,
    fourier_basis,
    mub_context,
    random_context,
    saturating_state,
)
from .mie import (
    clamp_mie,
    mie,
    mie_rank1,
    mie_raw,
    mie_via_commutators,
    mie_with_diagnostics,
    overlap_terms,
    projector_commutator_identity_gap,
)
from .schema import BoundsReport, BoundsTotals, ContextBounds, HierarchyFlags, MieDiagnostics, RobertsonRecord

__all__ = [
    "BoundsReport",
    "BoundsTotals",
    "Context",
    "ContextBounds",
    "ContextFamily",
    "HierarchyFlags",
    "MieDiagnostics",
    "RobertsonRecord",
    "clamp_mie",
    "context_bounds",
    "d_single",
    "d_total",
    "fourier_basis",
    "global_bounds",
    "hierarchy_check",
    "hybrid_bound",
    "kappa",
    "mie",
    "mie_rank1",
    "mie_raw",
    "mie_via_commutators",
    "mie_with_diagnostics",
    "mub_context",
    "opnorm_bound",
    "overlap_terms",
    "projector_commutator_identity_gap",
    "purity_bound",
    "random_context",
    "robertson_check",
    "saturating_state",
    "spectral_bound",
]
