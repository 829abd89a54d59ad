"""Maximum-uncertainty search over pure spin-1 states for the first n KCBS contexts.

States are parameterized by their two Majorana stars (θ_m, φ_m, θ_n, φ_n),
which removes normalization and global phase from the search. The objective
is Σ_α ΔA_{α−1}·ΔA_{α+1}; the surface residual of context α is
|⟨0_{k_α}|χ⟩|² − 1/2, taken on its central direction.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np
from scipy.optimize import minimize

from contextium.errors import UsageError
from contextium.linalg import (
    DensityMatrix,
    complex_pairs,
    density_from_vector,
    variance,
)
from contextium.measures import ContextFamily, d_total
from contextium.optimize.schema import (
    ExtremalReport,
    ExtremalStateRecord,
    OptimizationConfig,
    OptimizationResult,
)
from contextium.settings import get_settings, resolve_threads
from contextium.spin import (
    Direction,
    KcbsPentagon,
    StarPair,
    kcbs_pentagon,
    spin_eigenstate,
    state_from_stars,
    states_from_angles,
    stars_from_state,
    zero_eigenstate,
    zero_probabilities,
)

logger = logging.getLogger(__name__)

# Reference optima of Σ ΔA·ΔC over the first n contexts
TABLE_OPTIMA = {1: 1.0, 2: 1.9811, 3: 2.9681, 4: 3.9592, 5: 4 * (math.sqrt(5) - 1)}
# Reference m = 0 axes (θ, φ) of the optimal states
REFERENCE_AXES = {2: (0.0326, 1.8853), 3: (0.0148, 2.5133), 4: (0.0221, 5.0266), 5: (0.0, 0.0)}
AXIS_TOLERANCE = 0.05
# Double roots come back split by about √eps; closer stars mean a coherent state
COHERENT_SEPARATION = 1e-6

_LOWER = np.zeros(4)
_UPPER = np.array([math.pi, 2 * math.pi, math.pi, 2 * math.pi])


@dataclass(frozen=True, eq=False)
class OptimizationProblem:
    """The first ``n`` KCBS contexts and the directions the objective needs."""

    family: ContextFamily
    before: np.ndarray
    after: np.ndarray
    central: np.ndarray

    @classmethod
    def kcbs(cls, n: int, pentagon: KcbsPentagon | None = None) -> "OptimizationProblem":
        if not 1 <= n <= 5:
            raise UsageError(f"number of contexts must be between 1 and 5, got {n}")
        pentagon = pentagon or kcbs_pentagon()
        alphas = range(1, n + 1)
        return cls(
            family=ContextFamily.of([pentagon.context(a) for a in alphas]),
            before=np.array([pentagon.direction(a - 1).vector for a in alphas]),
            after=np.array([pentagon.direction(a + 1).vector for a in alphas]),
            central=np.array([pentagon.direction(a).vector for a in alphas]),
        )

    @property
    def n(self) -> int:
        return len(self.family)

    def products(self, states: np.ndarray) -> np.ndarray:
        """ΔA_{α−1}·ΔA_{α+1} per context for states of shape (..., 3)."""
        p_before = zero_probabilities(states, self.before)
        p_after = zero_probabilities(states, self.after)
        v_before = np.clip(4 * p_before * (1 - p_before), 0.0, None)
        v_after = np.clip(4 * p_after * (1 - p_after), 0.0, None)
        return np.sqrt(v_before * v_after)

    def residuals(self, states: np.ndarray) -> np.ndarray:
        return zero_probabilities(states, self.central) - 0.5

    def objective(self, angles) -> np.ndarray:
        angles = np.asarray(angles, dtype=float)
        states = states_from_angles(angles[..., 0], angles[..., 1], angles[..., 2], angles[..., 3])
        return self.products(states).sum(axis=-1)

    def negative_objective(self, angles: np.ndarray) -> float:
        return -float(self.objective(angles))


def sum_uncertainty_products(family: ContextFamily, state) -> float:
    """Σ_α ΔA·ΔC over the outer pair of each context, via operator variances."""
    rho = state if isinstance(state, DensityMatrix) else density_from_vector(state)
    return float(sum(math.sqrt(variance(ctx.a, rho) * variance(ctx.c, rho)) for ctx in family))


@dataclass(frozen=True)
class _LocalRun:
    angles: np.ndarray
    value: float
    iterations: int
    success: bool


def _nelder_mead(problem: OptimizationProblem, x0: np.ndarray, config: OptimizationConfig) -> _LocalRun:
    res = minimize(
        problem.negative_objective,
        x0,
        method="Nelder-Mead",
        options={"maxiter": config.max_iters, "xatol": config.tol, "fatol": config.tol},
    )
    if not res.success:
        logger.debug("start %s stopped without converging: %s", np.round(x0, 4).tolist(), res.message)
    return _LocalRun(angles=np.asarray(res.x), value=-float(res.fun), iterations=int(res.nit), success=bool(res.success))


def _run_starts(
    problem: OptimizationProblem,
    starts: np.ndarray,
    config: OptimizationConfig,
    threads: int | None,
) -> list[_LocalRun]:
    workers = resolve_threads(threads)
    if workers > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda x0: _nelder_mead(problem, x0, config), starts))
    return [_nelder_mead(problem, x0, config) for x0 in starts]


def axis_of(state) -> tuple[Direction, float] | None:
    """Closest m = 0 axis u and the fidelity |⟨0_u|χ⟩|², or None for a coherent state."""
    stars = stars_from_state(state)
    u = stars.m.vector - stars.n.vector
    if np.linalg.norm(u) < COHERENT_SEPARATION:
        return None
    u = u / np.linalg.norm(u)
    if u[2] < 0:
        u = -u
    fidelity = float(abs(np.vdot(zero_eigenstate(u), state)) ** 2)
    return Direction.from_vector(u), fidelity


def _select(runs: Sequence[_LocalRun], tol: float) -> _LocalRun:
    """Largest value; within ``tol`` of it the smallest θ_m, then φ_m, wins."""
    best_value = max(run.value for run in runs)

    def order(run: _LocalRun) -> tuple[float, float]:
        return StarPair.from_angles(*run.angles).canonical().m.key()

    return min((run for run in runs if run.value >= best_value - tol), key=order)


def _build_result(
    problem: OptimizationProblem,
    chosen: _LocalRun,
    method: str,
    runs: Sequence[_LocalRun],
) -> OptimizationResult:
    stars = StarPair.from_angles(*chosen.angles).canonical()
    state = state_from_stars(stars)
    products = problem.products(state)
    residuals = problem.residuals(state)

    axis, axis_fidelity = axis_of(state) or (None, None)
    reference_axis = None
    disagreement = None
    if problem.n in REFERENCE_AXES:
        reference_axis = Direction(theta=REFERENCE_AXES[problem.n][0], phi=REFERENCE_AXES[problem.n][1])
        if axis is not None:
            disagreement = math.acos(min(1.0, abs(float(axis.vector @ reference_axis.vector))))
    flagged = disagreement is not None and disagreement > AXIS_TOLERANCE
    if flagged:
        logger.warning("n=%d optimum axis differs from the reference by %.4f rad", problem.n, disagreement)

    return OptimizationResult(
        n=problem.n,
        method=method,
        best_value=float(products.sum()),
        best_stars=stars,
        best_state=complex_pairs(state),
        per_context_products=[float(x) for x in products],
        residuals=[float(x) for x in residuals],
        starts_used=len(runs),
        iterations=sum(run.iterations for run in runs),
        converged=any(run.success for run in runs),
        axis=axis,
        axis_fidelity=axis_fidelity,
        reference_value=TABLE_OPTIMA[problem.n],
        reference_axis=reference_axis,
        axis_disagreement=disagreement,
        axis_flagged=flagged,
    )


def optimize_sum(
    problem: OptimizationProblem,
    config: OptimizationConfig | None = None,
    threads: int | None = None,
) -> OptimizationResult:
    """Multi-start Nelder–Mead ascent of the uncertainty-product sum."""
    config = config or OptimizationConfig(seed=get_settings().seed)
    rng = np.random.default_rng(config.seed)
    starts = rng.uniform(_LOWER, _UPPER, size=(config.starts, 4))
    runs = _run_starts(problem, starts, config, threads)
    if not any(run.success for run in runs):
        logger.warning("no Nelder–Mead start converged for n=%d; reporting best so far", problem.n)
    result = _build_result(problem, _select(runs, config.tol), "nelder-mead", runs)
    logger.info("n=%d optimum %.6f after %d starts", problem.n, result.best_value, result.starts_used)
    return result


def _angle_grid(resolution: int) -> tuple[np.ndarray, np.ndarray]:
    return np.linspace(0.0, math.pi, resolution), np.linspace(0.0, 2 * math.pi, resolution, endpoint=False)


def certify(
    problem: OptimizationProblem,
    resolution: int = 64,
    refine: int = 8,
    config: OptimizationConfig | None = None,
    threads: int | None = None,
) -> OptimizationResult:
    """Grid search over all four star angles, then Nelder–Mead from the best cells.

    Independent of the random starts used by ``optimize_sum``.
    """
    if resolution < 2:
        raise UsageError(f"grid resolution must be at least 2, got {resolution}")
    config = config or OptimizationConfig(seed=get_settings().seed)
    thetas, phis = _angle_grid(resolution)
    phi_m, theta_n, phi_n = np.meshgrid(phis, thetas, phis, indexing="ij")

    candidates: list[tuple[float, tuple[float, ...]]] = []
    for theta_m in thetas:
        values = problem.objective(np.stack([np.full_like(phi_m, theta_m), phi_m, theta_n, phi_n], axis=-1)).ravel()
        top = np.argpartition(-values, min(refine, values.size - 1))[:refine]
        for i in top:
            candidates.append((float(values[i]), (theta_m, phi_m.flat[i], theta_n.flat[i], phi_n.flat[i])))
    candidates.sort(key=lambda item: (-item[0], item[1]))
    seeds = np.array([angles for _, angles in candidates[:refine]])
    logger.debug("grid %d^4: best cell %.6f", resolution, candidates[0][0])

    runs = _run_starts(problem, seeds, config, threads)
    return _build_result(problem, _select(runs, config.tol), "grid", runs)


@dataclass(frozen=True, eq=False)
class SurfaceSample:
    """Grid points near the intersection of maximum-uncertainty surfaces."""

    contexts: tuple[int, ...]
    angles: np.ndarray
    residuals: np.ndarray

    def __len__(self) -> int:
        return len(self.angles)

    def pairs(self) -> Iterator[tuple[StarPair, tuple[float, ...]]]:
        for angles, residuals in zip(self.angles, self.residuals):
            yield StarPair.from_angles(*angles), tuple(float(r) for r in residuals)


def smax_surface_sample(
    context_index: int,
    resolution: int,
    tol: float = 1e-3,
    with_contexts: Sequence[int] = (),
    pentagon: KcbsPentagon | None = None,
) -> SurfaceSample:
    """Star-angle grid filtered to |residual| ≤ ``tol`` for every listed context (1-based)."""
    if resolution < 2:
        raise UsageError(f"grid resolution must be at least 2, got {resolution}")
    indices = (context_index, *with_contexts)
    if any(not 1 <= i <= 5 for i in indices):
        raise UsageError(f"context indices must lie in 1..5, got {list(indices)}")
    pentagon = pentagon or kcbs_pentagon()
    central = np.array([pentagon.direction(i).vector for i in indices])

    thetas, phis = _angle_grid(resolution)
    phi_m, theta_n, phi_n = np.meshgrid(phis, thetas, phis, indexing="ij")
    kept_angles, kept_residuals = [], []
    for theta_m in thetas:
        states = states_from_angles(theta_m, phi_m, theta_n, phi_n)
        residuals = (zero_probabilities(states, central) - 0.5).reshape(-1, len(indices))
        mask = np.all(np.abs(residuals) <= tol, axis=-1)
        if mask.any():
            angles = np.stack([np.full(mask.sum(), theta_m), phi_m.ravel()[mask], theta_n.ravel()[mask], phi_n.ravel()[mask]], axis=-1)
            kept_angles.append(angles)
            kept_residuals.append(residuals[mask])

    if not kept_angles:
        logger.info("surface sample for contexts %s is empty at resolution %d", list(indices), resolution)
        return SurfaceSample(indices, np.empty((0, 4)), np.empty((0, len(indices))))
    return SurfaceSample(indices, np.concatenate(kept_angles), np.concatenate(kept_residuals))


def _extremal_record(name: str, psi: np.ndarray, family: ContextFamily) -> ExtremalStateRecord:
    rho = density_from_vector(psi)
    products = [math.sqrt(variance(ctx.a, rho) * variance(ctx.c, rho)) for ctx in family]
    d = d_total(family, rho)
    return ExtremalStateRecord(
        name=name,
        d_total=d,
        products_sum=float(sum(products)),
        per_context_products=products,
        robertson_lhs=d / 2,
        robertson_rhs=float(sum(products)),
        robertson_gap=float(sum(products)) - d / 2,
    )


def extremal_state_report(random_axes: int = 20, seed: int | None = None) -> ExtremalReport:
    """D and uncertainty products at |0_z⟩ and |±1_z⟩, plus D at random |0_u⟩."""
    pentagon = kcbs_pentagon()
    family = pentagon.family
    z = Direction(theta=0.0, phi=0.0)
    records = [
        _extremal_record("zero_z", zero_eigenstate(z), family),
        _extremal_record("plus_z", spin_eigenstate(z, 1), family),
        _extremal_record("minus_z", spin_eigenstate(z, -1), family),
    ]
    rng = np.random.default_rng(get_settings().seed if seed is None else seed)
    axes = rng.standard_normal((random_axes, 3))
    worst = max((d_total(family, density_from_vector(zero_eigenstate(u))) for u in axes), default=0.0)
    return ExtremalReport(states=records, random_axes=random_axes, random_axes_max_d=worst)
