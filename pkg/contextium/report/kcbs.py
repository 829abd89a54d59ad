"""One-shot evaluation of the KCBS scenario."""

import logging
import math

from contextium.linalg import density_from_vector, maximally_mixed
from contextium.measures import global_bounds, kappa, mie, opnorm_bound, spectral_bound
from contextium.optimize import extremal_state_report
from contextium.report.schema import KcbsReport
from contextium.spin import (
    KCBS_COS_GAMMA,
    KCBS_THETA,
    Direction,
    kcbs_pentagon,
    mie_closed_form_A,
    spin_eigenstate,
)

logger = logging.getLogger(__name__)


def kcbs_report(threads: int | None = 1, seed: int | None = None) -> KcbsReport:
    pentagon = kcbs_pentagon()
    family = pentagon.family
    energies = [mie(ctx) for ctx in family]
    first = family[0]
    gamma = math.acos(KCBS_COS_GAMMA)
    z = Direction(theta=0.0, phi=0.0)

    plus_report = global_bounds(family, density_from_vector(spin_eigenstate(z, 1)), threads)
    mixed_report = global_bounds(family, maximally_mixed(3), threads)
    extremal = extremal_state_report(seed=seed)
    by_name = {record.name: record for record in extremal.states}

    return KcbsReport(
        theta_kcbs=KCBS_THETA,
        theta_kcbs_deg=math.degrees(KCBS_THETA),
        cos_gamma=KCBS_COS_GAMMA,
        E=energies[0],
        E_closed_form=mie_closed_form_A(gamma),
        E_spread=max(energies) - min(energies),
        kappa=kappa(first),
        spectral_bound=spectral_bound(first),
        opnorm_bound=opnorm_bound(first),
        opnorm_closed_form=4 * math.sqrt(math.sqrt(5) - 2),
        global_opnorm_bound=plus_report.totals.opnorm_bound,
        global_hybrid_bound_pure=plus_report.totals.hybrid_bound,
        global_purity_bound_mixed=mixed_report.totals.purity_bound,
        global_hybrid_bound_mixed=mixed_report.totals.hybrid_bound,
        d_plus_z=by_name["plus_z"].d_total,
        d_minus_z=by_name["minus_z"].d_total,
        d_zero_z=by_name["zero_z"].d_total,
        hybrid_fraction_plus_z=plus_report.hybrid_fraction,
        product_per_context_zero_z=by_name["zero_z"].per_context_products[0],
        products_zero_z=by_name["zero_z"].products_sum,
        products_plus_z=by_name["plus_z"].products_sum,
        products_minus_z=by_name["minus_z"].products_sum,
        robertson_gap_plus_z=by_name["plus_z"].robertson_gap,
        robertson_gap_minus_z=by_name["minus_z"].robertson_gap,
        extremal=extremal,
    )
