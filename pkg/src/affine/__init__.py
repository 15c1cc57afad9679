"""Extended affine Weyl group, truncation and straight elements."""

from .affine_weyl import (
    ExtAffElt,
    TauMu,
    affine_simple_reflections,
    double_coset,
    from_weyl,
    identity,
    inverse,
    is_sigma_straight,
    kottwitz_point,
    length,
    make_element,
    multiply,
    newton_point,
    omega_elements,
    random_element,
    sigma,
    sigma_conjugate,
    sigma_power_product,
    stabilizes_base_alcove,
    tau_mu,
    translation,
)
from .truncation import TruncationResult, eo_stratum_dimension, eo_truncation, replay_certificate
from .straight import (
    Parabolic,
    fundamental_parabolic,
    fundamental_representative,
    is_fundamental,
    minimal_eo_strata,
    straight_power_identity,
)
from .oracles import OracleReport, bfs_length_ball, check_length_oracle

__all__ = [
    "ExtAffElt",
    "TauMu",
    "affine_simple_reflections",
    "double_coset",
    "from_weyl",
    "identity",
    "inverse",
    "is_sigma_straight",
    "kottwitz_point",
    "length",
    "make_element",
    "multiply",
    "newton_point",
    "omega_elements",
    "random_element",
    "sigma",
    "sigma_conjugate",
    "sigma_power_product",
    "stabilizes_base_alcove",
    "tau_mu",
    "translation",
    "TruncationResult",
    "eo_stratum_dimension",
    "eo_truncation",
    "replay_certificate",
    "Parabolic",
    "fundamental_parabolic",
    "fundamental_representative",
    "is_fundamental",
    "minimal_eo_strata",
    "straight_power_identity",
    "OracleReport",
    "bfs_length_ball",
    "check_length_oracle",
]
