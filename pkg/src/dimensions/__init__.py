"""Dimension formulas for Newton strata and Rapoport-Zink spaces."""

from .formulas import (
    BGmuReport,
    IdentityReport,
    StratumReport,
    bgmu_report,
    chain_to_mu,
    check_minimal_eo_strata,
    dim_central_leaf,
    dim_newton_stratum,
    dim_rz,
    dim_rz_floor,
    dim_rz_orbit_average,
    slope_quantity,
    stratum_report,
    verify_identities,
)
from .levi import (
    DValue,
    LeviDatum,
    ReductionReport,
    SigmaMuSets,
    I_mu_b_M,
    d_mu_muM,
    fibre_dim,
    reduction_check,
    sigma_mu_sets,
    superbasic_levi,
)

__all__ = [
    "BGmuReport",
    "IdentityReport",
    "StratumReport",
    "bgmu_report",
    "chain_to_mu",
    "check_minimal_eo_strata",
    "dim_central_leaf",
    "dim_newton_stratum",
    "dim_rz",
    "dim_rz_floor",
    "dim_rz_orbit_average",
    "slope_quantity",
    "stratum_report",
    "verify_identities",
    "DValue",
    "LeviDatum",
    "ReductionReport",
    "SigmaMuSets",
    "I_mu_b_M",
    "d_mu_muM",
    "fibre_dim",
    "reduction_check",
    "sigma_mu_sets",
    "superbasic_levi",
]
