"""Report models for contextuality measures."""

from pydantic import BaseModel, ConfigDict


class MieDiagnostics(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    dim: int
    raw: float
    value: float
    one_minus_E: float
    dual_value: float
    dual_delta: float


class RobertsonRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    lhs: float
    rhs: float
    gap: float
    satisfied: bool


class ContextBounds(BaseModel):
    """Per-context row of a bounds report."""

    model_config = ConfigDict(frozen=True)

    name: str
    E: float
    one_minus_E: float
    kappa: float
    d_value: float
    spectral_bound: float
    purity_bound: float
    opnorm_bound: float
    hybrid_bound: float
    variance_product: float
    robertson_lhs: float


class BoundsTotals(BaseModel):
    model_config = ConfigDict(frozen=True)

    E: float
    one_minus_E: float
    kappa: float
    d_value: float
    spectral_bound: float
    purity_bound: float
    opnorm_bound: float
    hybrid_bound: float
    variance_product: float
    robertson_lhs: float


class HierarchyFlags(BaseModel):
    """Whether each global chain D ≤ bound (and D/2 ≤ Σ ΔA·ΔC) holds."""

    model_config = ConfigDict(frozen=True)

    robertson: bool
    spectral: bool
    purity: bool
    hybrid: bool
    opnorm: bool

    @property
    def all_hold(self) -> bool:
        return self.robertson and self.spectral and self.purity and self.hybrid and self.opnorm


class BoundsReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    beta: float
    contexts: list[ContextBounds]
    totals: BoundsTotals
    hierarchy: HierarchyFlags
    hybrid_fraction: float
