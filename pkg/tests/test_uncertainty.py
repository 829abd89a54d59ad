import math

import numpy as np
import pytest

from contextium.errors import UsageError
from contextium.linalg import fidelity
from contextium.optimize import (
    TABLE_OPTIMA,
    OptimizationConfig,
    OptimizationProblem,
    axis_of,
    certify,
    extremal_state_report,
    optimize_sum,
    smax_surface_sample,
    sum_uncertainty_products,
)
from contextium.spin import Direction, StarPair, max_uncertainty_residual, spin_eigenstate, state_from_stars, zero_eigenstate

Z = Direction(theta=0.0, phi=0.0)
FAST = OptimizationConfig(starts=24, max_iters=800, tol=1e-8, seed=42)


def test_problem_size_is_checked():
    with pytest.raises(UsageError):
        OptimizationProblem.kcbs(0)
    with pytest.raises(UsageError):
        OptimizationProblem.kcbs(6)


def test_vectorized_products_match_operator_variances(rng):
    problem = OptimizationProblem.kcbs(5)
    for _ in range(5):
        stars = StarPair.from_angles(*rng.uniform([0, 0, 0, 0], [math.pi, 2 * math.pi, math.pi, 2 * math.pi]))
        state = state_from_stars(stars)
        assert problem.products(state).sum() == pytest.approx(sum_uncertainty_products(problem.family, state))
        assert problem.objective(stars.angles()) == pytest.approx(sum_uncertainty_products(problem.family, state))


def test_products_at_plus_z():
    problem = OptimizationProblem.kcbs(5)
    assert problem.products(spin_eigenstate(Z, 1)) == pytest.approx([0.8] * 5)


def test_single_context_optimum():
    result = optimize_sum(OptimizationProblem.kcbs(1), FAST, threads=1)
    assert result.best_value == pytest.approx(TABLE_OPTIMA[1], abs=1e-5)
    assert result.converged


@pytest.mark.parametrize("n", [2, 3, 4])
def test_partial_pentagon_optima(n):
    result = optimize_sum(OptimizationProblem.kcbs(n), FAST, threads=2)
    assert result.best_value == pytest.approx(TABLE_OPTIMA[n], abs=1e-3)
    assert result.reference_value == TABLE_OPTIMA[n]
    assert len(result.per_context_products) == n


def test_full_pentagon_optimum_is_zero_z():
    result = optimize_sum(OptimizationProblem.kcbs(5), FAST, threads=2)
    assert result.best_value == pytest.approx(4 * (math.sqrt(5) - 1), abs=1e-5)
    assert fidelity(state_from_stars(result.best_stars), zero_eigenstate(Z)) == pytest.approx(1.0, abs=1e-4)
    assert not result.axis_flagged
    # The optimum sits off every maximum-uncertainty surface
    assert result.residuals == pytest.approx([1 / math.sqrt(5) - 0.5] * 5, abs=1e-3)


def test_optimization_is_reproducible():
    problem = OptimizationProblem.kcbs(2)
    config = OptimizationConfig(starts=6, seed=7)
    assert optimize_sum(problem, config, threads=1) == optimize_sum(problem, config, threads=3)


def test_grid_certificate_agrees_with_random_starts():
    problem = OptimizationProblem.kcbs(2)
    grid = certify(problem, resolution=16, refine=6, config=FAST, threads=1)
    assert grid.method == "grid"
    assert grid.best_value == pytest.approx(TABLE_OPTIMA[2], abs=1e-3)


@pytest.fixture(scope="module")
def optima():
    return {n: optimize_sum(OptimizationProblem.kcbs(n), FAST, threads=2) for n in range(1, 6)}


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_grid_certificate_agrees_for_every_n(optima, n):
    grid = certify(OptimizationProblem.kcbs(n), resolution=16, refine=6, config=FAST, threads=2)
    assert grid.best_value == pytest.approx(optima[n].best_value, abs=2e-3)
    assert grid.best_value == pytest.approx(TABLE_OPTIMA[n], abs=2e-3)


def test_optima_grow_with_n_and_stay_below_n(optima):
    values = [optima[n].best_value for n in range(1, 6)]
    assert values == pytest.approx([TABLE_OPTIMA[n] for n in range(1, 6)], abs=2e-3)
    assert all(a < b for a, b in zip(values, values[1:]))
    assert all(value <= n + 1e-9 for n, value in zip(range(1, 6), values))


def test_certify_rejects_tiny_grid():
    with pytest.raises(UsageError):
        certify(OptimizationProblem.kcbs(1), resolution=1)


def test_axis_of_zero_state():
    u = Direction(theta=0.6, phi=1.3)
    axis, axis_fidelity = axis_of(zero_eigenstate(u))
    assert axis_fidelity == pytest.approx(1.0)
    assert abs(float(axis.vector @ u.vector)) == pytest.approx(1.0)
    assert axis_of(spin_eigenstate(u, 1)) is None


@pytest.mark.parametrize(
    "theta, phi, m",
    [(0.6, 1.3, 1), (0.6, 1.3, -1), (0.0, 0.0, 1), (math.pi, 0.0, 1), (1.9, 4.4, -1), (2.3, 0.7, 1)],
)
def test_axis_of_coherent_state_is_none(theta, phi, m):
    assert axis_of(spin_eigenstate(Direction(theta=theta, phi=phi), m)) is None
    k = Direction(theta=theta, phi=phi)
    assert axis_of(state_from_stars(StarPair(m=k, n=k))) is None


def test_surface_sample_points_lie_on_the_surface(pentagon):
    sample = smax_surface_sample(1, resolution=50, tol=1e-3)
    assert len(sample) > 0
    assert np.all(np.abs(sample.residuals) <= 1e-3)
    k = pentagon.direction(1)
    for stars, (residual,) in list(sample.pairs())[:25]:
        assert max_uncertainty_residual(stars, k) == pytest.approx(residual, abs=1e-9)


def test_surface_intersection(pentagon):
    sample = smax_surface_sample(1, resolution=40, tol=1e-2, with_contexts=(2,))
    assert sample.contexts == (1, 2)
    assert sample.residuals.shape == (len(sample), 2)
    assert len(sample) > 0
    assert np.all(np.abs(sample.residuals) <= 1e-2)


def test_surface_rejects_bad_context():
    with pytest.raises(UsageError):
        smax_surface_sample(7, resolution=10)


def test_extremal_states():
    report = extremal_state_report(random_axes=10, seed=3)
    by_name = {record.name: record for record in report.states}
    assert by_name["plus_z"].products_sum == pytest.approx(4.0)
    assert by_name["plus_z"].robertson_gap == pytest.approx(0.75, abs=5e-3)
    assert by_name["zero_z"].per_context_products == pytest.approx([0.988854] * 5, abs=1e-6)
    assert by_name["zero_z"].products_sum == pytest.approx(4 * (math.sqrt(5) - 1))
    assert all(record.robertson_gap >= -1e-9 for record in report.states)
    assert report.random_axes == 10
    assert report.random_axes_max_d < 1e-9
    assert by_name["plus_z"].d_total == pytest.approx(6.50, abs=2e-2)
