"""Bloch-type seminorms and Lipschitz-bound certification for harmonic maps on the unit disk."""

from ._core import (
    AnalyticFunction,
    CampaignReport,
    ConstantSet,
    DerivativeBundle,
    HarmonicMap,
    SupConfig,
    SupEstimate,
    __version__,
    bloch_norm,
    bloch_seminorm,
    bloch_type_seminorm,
    compose_with_mobius,
    constant_set,
    dilatation_sup,
    gen_polynomial,
    gen_quasiregular,
    harmonic_bloch_seminorm,
    harmonic_map_from_json,
    lemma23_pair,
    log_displacement_inequality,
    log_fixture,
    minimize_psi,
    mobius_apply,
    mobius_derivative,
    mobius_second_derivative,
    non_lipschitz_witness,
    one_minus_rho_sq,
    polynomial,
    pseudo_distance,
    psi,
    quasiregularity_constant,
    run_campaign,
    second_derivative_bound,
    sharpness_search,
    theorem1_quotient,
    theorem2_quotient,
)

__all__ = [
    "AnalyticFunction",
    "CampaignReport",
    "ConstantSet",
    "DerivativeBundle",
    "HarmonicMap",
    "SupConfig",
    "SupEstimate",
    "__version__",
    "bloch_norm",
    "bloch_seminorm",
    "bloch_type_seminorm",
    "compose_with_mobius",
    "constant_set",
    "dilatation_sup",
    "gen_polynomial",
    "gen_quasiregular",
    "harmonic_bloch_seminorm",
    "harmonic_map_from_json",
    "lemma23_pair",
    "log_displacement_inequality",
    "log_fixture",
    "minimize_psi",
    "mobius_apply",
    "mobius_derivative",
    "mobius_second_derivative",
    "non_lipschitz_witness",
    "one_minus_rho_sq",
    "polynomial",
    "pseudo_distance",
    "psi",
    "quasiregularity_constant",
    "run_campaign",
    "second_derivative_bound",
    "sharpness_search",
    "theorem1_quotient",
    "theorem2_quotient",
]
