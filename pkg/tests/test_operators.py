import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st
from scipy.stats import unitary_group

from contextium.errors import DimensionMismatchError, NonCommutingError, NonHermitianError
from contextium.linalg import (
    ComplexMatrix,
    HermitianOperator,
    check_commute,
    commutator,
    eigendecompose,
    fix_global_phase,
    hs_norm,
    joint_eigenprojectors,
    op_norm,
    random_hermitian,
    random_projector,
    random_unitary,
    trace_norm,
)

DIMS = st.integers(min_value=3, max_value=6)
SEEDS = st.integers(min_value=0, max_value=2**32 - 1)


def test_rejects_non_hermitian():
    with pytest.raises(NonHermitianError):
        HermitianOperator.from_matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]])


def test_rejects_non_square():
    with pytest.raises(DimensionMismatchError):
        HermitianOperator.from_matrix(np.zeros((2, 3)))


def test_symmetrizes_round_off():
    m = np.diag([1.0, 2.0, 3.0]).astype(complex)
    m[0, 1] = 1e-12
    op = HermitianOperator.from_matrix(m)
    assert np.array_equal(op.matrix, op.matrix.conj().T)
    assert not op.matrix.flags.writeable


def test_norms_of_diagonal_matrix():
    m = np.diag([3.0, -4.0, 0.0])
    assert hs_norm(m) == pytest.approx(5.0)
    assert op_norm(m) == pytest.approx(4.0)
    assert trace_norm(m) == pytest.approx(7.0)


@seed(13)
@settings(max_examples=100, deadline=None)
@given(d=DIMS, s=SEEDS)
def test_norm_ordering(d, s):
    rng = np.random.default_rng(s)
    ginibre = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    bracket = commutator(random_hermitian(d, rng), random_hermitian(d, rng))
    for x in (ginibre, bracket):
        assert op_norm(x) <= hs_norm(x) * (1 + 1e-12)
        assert hs_norm(x) <= trace_norm(x) * (1 + 1e-12)
        assert trace_norm(x) <= np.sqrt(d) * hs_norm(x) * (1 + 1e-12)


def test_eigendecompose_groups_degeneracies():
    decomposition = eigendecompose(np.diag([5.0, 5.0, 7.0]))
    assert decomposition.eigenvalues == pytest.approx((5.0, 7.0))
    assert decomposition.dims == (2, 1)
    assert np.allclose(decomposition.reconstruct(), np.diag([5.0, 5.0, 7.0]))


def test_grouping_is_pairwise_not_chained():
    h = np.diag([0.0, 0.6e-9, 1.2e-9, 1.0])
    decomposition = eigendecompose(h, group_tol=1e-9)
    assert decomposition.dims == (2, 1, 1)
    assert decomposition.eigenvalues[0] == pytest.approx(0.3e-9, abs=1e-18)
    assert eigendecompose(h, group_tol=2e-9).dims == (3, 1)


@seed(11)
@settings(max_examples=25, deadline=None)
@given(d=DIMS, s=SEEDS)
def test_spectral_projectors_resolve_identity(d, s):
    rng = np.random.default_rng(s)
    h = random_hermitian(d, rng)
    decomposition = eigendecompose(h)
    total = sum(decomposition.projectors)
    assert np.allclose(total, np.eye(d), atol=1e-10)
    assert np.allclose(decomposition.reconstruct(), h, atol=1e-9)
    for p in decomposition.projectors:
        assert np.allclose(p @ p, p, atol=1e-10)


def test_joint_eigenprojectors_split_degenerate_block():
    a = np.diag([1.0, 2.0, 3.0])
    b = np.diag([5.0, 5.0, 7.0])
    family = joint_eigenprojectors(a, b)
    assert family.is_rank_one
    assert sorted(family.pairs) == [(1.0, 5.0), (2.0, 5.0), (3.0, 7.0)]


def test_joint_eigenprojectors_keep_common_degeneracy():
    a = np.diag([1.0, 1.0, 2.0])
    b = np.diag([4.0, 4.0, 4.0])
    family = joint_eigenprojectors(a, b)
    assert sorted(family.dims) == [1, 2]
    assert not family.is_rank_one


@seed(12)
@settings(max_examples=20, deadline=None)
@given(d=DIMS, s=SEEDS)
def test_joint_projectors_commute_with_both_operators(d, s):
    rng = np.random.default_rng(s)
    v = random_unitary(d, rng)
    b = v @ np.diag(np.repeat([1.0, 2.0], [d - 1, 1])) @ v.conj().T
    inner = np.zeros((d, d), dtype=complex)
    inner[: d - 1, : d - 1] = random_hermitian(d - 1, rng)
    inner[d - 1, d - 1] = 3.0
    a = v @ inner @ v.conj().T
    family = joint_eigenprojectors((a + a.conj().T) / 2, (b + b.conj().T) / 2)
    assert np.allclose(sum(family.projectors), np.eye(d), atol=1e-9)
    for p in family.projectors:
        assert op_norm(commutator(p, a)) < 1e-8
        assert op_norm(commutator(p, b)) < 1e-8


def test_check_commute_raises_with_norm():
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sz = np.diag([1.0, -1.0]).astype(complex)
    with pytest.raises(NonCommutingError) as info:
        check_commute(sx, sz)
    assert info.value.commutator_norm == pytest.approx(2.0)


def test_fix_global_phase_makes_leading_amplitude_positive():
    psi = np.array([0.0, 1j, 1.0]) / np.sqrt(2)
    fixed = fix_global_phase(psi)
    assert fixed[1] == pytest.approx(1 / np.sqrt(2))
    assert abs(np.vdot(fixed, psi)) == pytest.approx(1.0)


def test_random_unitary_is_unitary(rng):
    u = random_unitary(5, rng)
    assert np.allclose(u @ u.conj().T, np.eye(5), atol=1e-12)


@pytest.mark.parametrize("d", [1, 2, 3, 6])
def test_random_unitary_follows_the_seed(d):
    u = random_unitary(d, np.random.default_rng(7))
    assert u.shape == (d, d)
    assert np.allclose(u @ u.conj().T, np.eye(d), atol=1e-12)
    assert np.array_equal(u, random_unitary(d, np.random.default_rng(7)))
    if d > 1:
        assert np.array_equal(u, unitary_group.rvs(d, random_state=np.random.default_rng(7)))


def test_random_unitary_rejects_empty_dimension(rng):
    with pytest.raises(DimensionMismatchError):
        random_unitary(0, rng)


def test_random_projector_rank(rng):
    p = random_projector(4, 2, rng)
    assert np.trace(p).real == pytest.approx(2.0)
    with pytest.raises(DimensionMismatchError):
        random_projector(4, 5, rng)


def test_complex_matrix_rejects_ragged_entries():
    with pytest.raises(ValueError):
        ComplexMatrix(dim=2, entries=[[(1.0, 0.0)], [(0.0, 0.0), (1.0, 0.0)]])


def test_complex_matrix_array_conversion():
    m = np.array([[1, 2j], [-2j, 3]])
    assert np.array_equal(ComplexMatrix.from_array(m).to_array(), m)
