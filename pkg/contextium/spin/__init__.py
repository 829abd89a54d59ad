"""Spin-1 observables, the KCBS pentagon and the Majorana star representation."""

from .kcbs import (
    KCBS_COS_GAMMA,
    KCBS_THETA,
    KcbsPentagon,
    dichotomic_observable,
    illustrative_contexts,
    kcbs_pentagon,
    kcbs_scenario_states,
    mie_closed_form_A,
    mie_closed_form_S,
    spin_component,
    spin_eigenstate,
    spin_operators,
    spin_squared,
    zero_eigenstate,
    zero_state_overlap,
)
from .majorana import (
    TriadCoefficients,
    as_state,
    bargmann,
    closed_form_triad_coefficients,
    coefficient_discrepancy,
    max_uncertainty_residual,
    overlap_via_bargmann,
    spin_half_state,
    state_from_stars,
    stars_from_state,
    states_from_angles,
    triad,
    triad_coefficients,
    triad_vectors,
    variance_A,
    zero_probabilities,
    zero_probability,
)
from .schema import Direction, StarPair, TriadRecord

__all__ = [
    "Direction",
    "KCBS_COS_GAMMA",
    "KCBS_THETA",
    "KcbsPentagon",
    "StarPair",
    "TriadCoefficients",
    "TriadRecord",
    "as_state",
    "bargmann",
    "closed_form_triad_coefficients",
    "coefficient_discrepancy",
    "dichotomic_observable",
    "illustrative_contexts",
    "kcbs_pentagon",
    "kcbs_scenario_states",
    "max_uncertainty_residual",
    "mie_closed_form_A",
    "mie_closed_form_S",
    "overlap_via_bargmann",
    "spin_component",
    "spin_eigenstate",
    "spin_half_state",
    "spin_operators",
    "spin_squared",
    "state_from_stars",
    "stars_from_state",
    "states_from_angles",
    "triad",
    "triad_coefficients",
    "triad_vectors",
    "variance_A",
    "zero_eigenstate",
    "zero_probabilities",
    "zero_probability",
    "zero_state_overlap",
]
