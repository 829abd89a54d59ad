"""Configuration and result models for the uncertainty optimization."""

from pydantic import BaseModel, ConfigDict, Field

from contextium.spin.schema import Direction, StarPair


class OptimizationConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    starts: int = Field(default=64, ge=1)
    max_iters: int = Field(default=500, ge=1)
    tol: float = Field(default=1e-6, gt=0)
    seed: int = 42


class OptimizationResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    method: str
    best_value: float
    best_stars: StarPair
    best_state: list[tuple[float, float]]
    per_context_products: list[float]
    residuals: list[float]
    starts_used: int
    iterations: int
    converged: bool
    axis: Direction | None = None
    axis_fidelity: float | None = None
    reference_value: float | None = None
    reference_axis: Direction | None = None
    axis_disagreement: float | None = None
    axis_flagged: bool = False


class ExtremalStateRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    d_total: float
    products_sum: float
    per_context_products: list[float]
    robertson_lhs: float
    robertson_rhs: float
    robertson_gap: float


class ExtremalReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    states: list[ExtremalStateRecord]
    random_axes: int
    random_axes_max_d: float
