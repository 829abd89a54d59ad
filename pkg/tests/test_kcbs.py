import math

import numpy as np
import pytest

from contextium.errors import DataValidationError
from contextium.linalg import commutator, density_from_vector, joint_eigenprojectors, maximally_mixed, op_norm, variance
from contextium.measures import d_total, global_bounds, kappa, mie, opnorm_bound, spectral_bound
from contextium.spin import (
    KCBS_COS_GAMMA,
    KCBS_THETA,
    Direction,
    dichotomic_observable,
    illustrative_contexts,
    mie_closed_form_A,
    mie_closed_form_S,
    spin_component,
    spin_eigenstate,
    spin_operators,
    spin_squared,
    zero_eigenstate,
    zero_state_overlap,
)

Z = Direction(theta=0.0, phi=0.0)
KCBS_ENERGY = (11 - 4 * math.sqrt(5)) / 3
OPNORM = 4 * math.sqrt(math.sqrt(5) - 2)


def test_spin_algebra():
    sx, sy, sz = (s.matrix for s in spin_operators())
    assert np.allclose(commutator(sx, sy), 1j * sz)
    assert np.allclose(spin_squared().matrix, 2 * np.eye(3))


@pytest.mark.parametrize("m", [1, 0, -1])
def test_spin_eigenstates(m):
    k = Direction(theta=1.1, phi=2.3)
    psi = spin_eigenstate(k, m)
    assert np.allclose(spin_component(k).matrix @ psi, m * psi)
    assert np.linalg.norm(psi) == pytest.approx(1.0)


def test_bad_projection_rejected():
    with pytest.raises(DataValidationError):
        spin_eigenstate(Z, 2)


def test_dichotomic_observable_spectrum():
    k = Direction(theta=0.4, phi=5.0)
    a = dichotomic_observable(k).matrix
    zero = zero_eigenstate(k)
    assert np.allclose(np.linalg.eigvalsh(a), [-1, 1, 1])
    assert np.allclose(a, np.eye(3) - 2 * np.outer(zero, zero.conj()))


def test_zero_state_overlap_is_squared_cosine():
    k = Direction(theta=0.7, phi=0.2)
    kp = Direction(theta=2.0, phi=4.0)
    assert zero_state_overlap(k, kp) == pytest.approx(float(k.vector @ kp.vector) ** 2)


def test_pentagon_geometry(pentagon):
    assert KCBS_THETA == pytest.approx(math.acos(5 ** -0.25), abs=1e-12)
    assert KCBS_THETA == pytest.approx(0.8382831, abs=1e-7)
    assert math.cos(KCBS_THETA) ** 2 == pytest.approx(1 / math.sqrt(5))
    for alpha in range(1, 6):
        k = pentagon.direction(alpha).vector
        assert k @ pentagon.direction(alpha + 1).vector == pytest.approx(0.0, abs=1e-12)
        assert k @ pentagon.direction(alpha + 2).vector == pytest.approx(KCBS_COS_GAMMA)
        assert op_norm(commutator(pentagon.observable(alpha), pentagon.observable(alpha + 1))) < 1e-12


def test_contexts_are_cyclic(pentagon):
    assert pentagon.context(6) is pentagon.context(1)
    assert [ctx.name for ctx in pentagon.family] == ["G1", "G2", "G3", "G4", "G5"]
    assert pentagon.context(1).a is pentagon.observable(5)
    assert pentagon.context(1).c is pentagon.observable(2)


def test_adjacent_observables_share_three_rank_one_blocks(pentagon):
    a5, a1 = pentagon.observable(5), pentagon.observable(1)
    family = joint_eigenprojectors(a5, a1)
    assert family.dims == (1, 1, 1)
    assert sorted((round(a), round(b)) for a, b in family.pairs) == [(-1, 1), (1, -1), (1, 1)]
    assert np.allclose(sum(family.projectors), np.eye(3), atol=1e-12)
    k5, k1 = pentagon.direction(5).vector, pentagon.direction(1).vector
    common = {(-1, 1): zero_eigenstate(k5), (1, -1): zero_eigenstate(k1), (1, 1): zero_eigenstate(np.cross(k5, k1))}
    for (a, b), p in zip(family.pairs, family.projectors):
        v = common[(round(a), round(b))]
        assert np.vdot(v, p @ v).real == pytest.approx(1.0, abs=1e-12)


def test_kcbs_energy(pentagon):
    energies = [mie(ctx) for ctx in pentagon.family]
    assert energies == pytest.approx([KCBS_ENERGY] * 5, abs=1e-12)
    assert KCBS_ENERGY == pytest.approx(mie_closed_form_A(math.acos(KCBS_COS_GAMMA)))
    assert KCBS_ENERGY == pytest.approx(0.6852427, abs=1e-7)


def test_kcbs_constants(pentagon):
    ctx = pentagon.context(1)
    assert kappa(ctx) == pytest.approx(3 * math.sqrt(6))
    assert opnorm_bound(ctx) == pytest.approx(OPNORM)
    assert spectral_bound(ctx) == pytest.approx(3 * math.sqrt(6) * math.sqrt(1 - KCBS_ENERGY))
    assert spectral_bound(ctx) == pytest.approx(4.12273, abs=1e-5)


def test_global_bounds_at_plus_z(pentagon):
    rho = density_from_vector(spin_eigenstate(Z, 1))
    report = global_bounds(pentagon.family, rho)
    assert report.totals.opnorm_bound == pytest.approx(5 * OPNORM)
    assert report.totals.d_value == pytest.approx(6.498, abs=5e-3)
    assert report.totals.variance_product == pytest.approx(4.0)
    assert report.hierarchy.all_hold
    assert report.hybrid_fraction == pytest.approx(report.totals.d_value / (5 * OPNORM))


def test_mixed_state_purity_bound(pentagon):
    report = global_bounds(pentagon.family, maximally_mixed(3))
    assert report.totals.purity_bound == pytest.approx(5 * spectral_bound(pentagon.context(1)) / math.sqrt(3))
    assert report.totals.purity_bound == pytest.approx(11.90, abs=1e-2)
    assert report.totals.d_value == pytest.approx(0.0, abs=1e-12)


def test_variance_at_plus_z(pentagon):
    rho = density_from_vector(spin_eigenstate(Z, 1))
    for alpha in range(1, 6):
        assert variance(pentagon.observable(alpha), rho) == pytest.approx(0.8)


def test_zero_z_uncertainty(pentagon):
    rho = density_from_vector(zero_eigenstate(Z))
    p = 1 / math.sqrt(5)
    for alpha in range(1, 6):
        assert variance(pentagon.observable(alpha), rho) == pytest.approx(4 * p * (1 - p))
    assert d_total(pentagon.family, rho) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("gamma", [0.0, 0.3, math.pi / 4, 1.2, math.pi / 2])
def test_illustrative_closed_forms(gamma):
    ctx_s, ctx_a = illustrative_contexts(gamma)
    assert mie(ctx_s) == pytest.approx(mie_closed_form_S(gamma), abs=1e-10)
    assert mie(ctx_a) == pytest.approx(mie_closed_form_A(gamma), abs=1e-10)


def test_illustrative_closed_form_sweep():
    gammas = np.linspace(0.0, math.pi, 181)
    gaps_s, gaps_a = [], []
    for gamma in gammas:
        ctx_s, ctx_a = illustrative_contexts(gamma)
        gaps_s.append(abs(mie(ctx_s) - mie_closed_form_S(gamma)))
        gaps_a.append(abs(mie(ctx_a) - mie_closed_form_A(gamma)))
    assert max(gaps_s) <= 1e-9
    assert max(gaps_a) <= 1e-9


def test_illustrative_endpoints():
    assert mie_closed_form_S(math.pi / 2) == pytest.approx(5 / 12)
    assert mie_closed_form_A(math.pi / 2) == pytest.approx(1.0)
    assert mie_closed_form_A(math.pi / 4) == pytest.approx(2 / 3)
