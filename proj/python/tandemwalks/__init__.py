"""Tandem walks in the quadrant and plane bipolar orientations.

Thin facade over the compiled `_core` module: exact weighted counting,
closed-form sequences, the walk/orientation bijection and its involutions,
generating-function coefficients, harmonic-function values, asymptotic
constants, and exact random samplers.
"""

from ._core import (
    baxter_b,
    count_walks,
    dangulation_sequence,
    exact_p1_endpoint,
    harmonic_v,
    kappa_bipolar,
    lgv_qnk,
    marked_qnk_tilde,
    phi,
    phi_inverse,
    q0b_x0_coeffs,
    q11_coeffs,
    rho_on_walks,
    run_acceptance,
    sample_excursion_p1,
    sample_quadrant,
    sigma_on_walks,
    tutte_a,
    validate_map,
    walk_stats,
)

__all__ = [
    "baxter_b",
    "count_walks",
    "dangulation_sequence",
    "exact_p1_endpoint",
    "harmonic_v",
    "kappa_bipolar",
    "lgv_qnk",
    "marked_qnk_tilde",
    "phi",
    "phi_inverse",
    "q0b_x0_coeffs",
    "q11_coeffs",
    "rho_on_walks",
    "run_acceptance",
    "sample_excursion_p1",
    "sample_quadrant",
    "sigma_on_walks",
    "tutte_a",
    "validate_map",
    "walk_stats",
]
