"""Models for CLI reports that combine several library results."""

from pydantic import BaseModel, ConfigDict

from contextium.optimize import ExtremalReport
from contextium.spin import StarPair, TriadRecord


class KcbsReport(BaseModel):
    """Every headline number of the KCBS spin-1 scenario in one document."""

    model_config = ConfigDict(frozen=True)

    theta_kcbs: float
    theta_kcbs_deg: float
    cos_gamma: float
    E: float
    E_closed_form: float
    E_spread: float
    kappa: float
    spectral_bound: float
    opnorm_bound: float
    opnorm_closed_form: float
    global_opnorm_bound: float
    global_hybrid_bound_pure: float
    global_purity_bound_mixed: float
    global_hybrid_bound_mixed: float
    d_plus_z: float
    d_minus_z: float
    d_zero_z: float
    hybrid_fraction_plus_z: float
    product_per_context_zero_z: float
    products_zero_z: float
    products_plus_z: float
    products_minus_z: float
    robertson_gap_plus_z: float
    robertson_gap_minus_z: float
    extremal: ExtremalReport


class MajoranaReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    stars: StarPair
    state: list[tuple[float, float]]
    round_trip_fidelity: float
    triad: TriadRecord | None = None
    axial_discrepancy: float | None = None
    bargmann_overlap: float | None = None
    variance: float | None = None
    residual: float | None = None


class ContextCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    observables: tuple[str, str, str]
    E: float
    ab_blocks: list[int]
    cb_blocks: list[int]
    outer_commutator_norm: float


class ValidationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    source: str
    dim: int
    observables: list[str]
    states: list[str]
    contexts: list[ContextCheck]
