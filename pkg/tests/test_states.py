import numpy as np
import pytest

from contextium.errors import DimensionMismatchError, InvalidStateError
from contextium.linalg import (
    DensityMatrix,
    density_from_vector,
    expectation,
    fidelity,
    maximally_mixed,
    normalize,
    purity,
    random_mixed,
    random_pure,
    variance,
)


def test_purity_of_pure_and_mixed():
    assert purity(density_from_vector([1, 1j, 0])) == pytest.approx(1.0)
    assert purity(maximally_mixed(3)) == pytest.approx(1 / 3)


@pytest.mark.parametrize(
    "matrix",
    [
        np.diag([0.5, 0.6, 0.0]),
        np.diag([1.5, -0.5, 0.0]),
        np.array([[0.5, 0.5, 0], [0, 0.5, 0], [0, 0, 0]]),
    ],
)
def test_invalid_density_matrices(matrix):
    with pytest.raises(InvalidStateError):
        DensityMatrix.from_matrix(matrix)


def test_zero_vector_is_rejected():
    with pytest.raises(InvalidStateError):
        normalize([0, 0, 0])


def test_expectation_checks_dimensions():
    with pytest.raises(DimensionMismatchError):
        expectation(np.eye(2), maximally_mixed(3))


def test_variance_of_eigenstate_is_zero():
    rho = density_from_vector([0, 1, 0])
    assert variance(np.diag([1.0, 2.0, 3.0]), rho) == 0.0
    assert variance(np.diag([1.0, 2.0, 3.0]), maximally_mixed(3)) == pytest.approx(2 / 3)


def test_fidelity_ignores_global_phase():
    psi = normalize([1, 2j, -1])
    assert fidelity(psi, 1j * psi) == pytest.approx(1.0)


def test_random_states_are_valid_and_reproducible():
    a = random_mixed(4, 7)
    b = random_mixed(4, 7)
    assert np.array_equal(a.matrix, b.matrix)
    assert np.linalg.eigvalsh(a.matrix).min() > -1e-12
    assert purity(random_pure(4, 3)) == pytest.approx(1.0)
    assert purity(a) < 1.0
