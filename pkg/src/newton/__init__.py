"""Sigma-conjugacy classes, B(G, mu) and its order."""

from .sigma_class import (
    SigmaClass,
    classify,
    is_basic,
    is_superbasic,
    leq,
    levi_lift,
    levi_of,
    levi_orbits,
    make_class,
    meets_levi,
)
from .kottwitz_set import BGmuPoset, class_of_mu, enumerate_BGmu, hasse_edges
from .defect import (
    chain_length,
    orbit_ceiling_length,
    check_defect,
    defect,
    defect_oracle_resgl,
    orbit_pairings,
    rank_identity,
)

__all__ = [
    "SigmaClass",
    "classify",
    "is_basic",
    "is_superbasic",
    "leq",
    "levi_lift",
    "levi_of",
    "levi_orbits",
    "make_class",
    "meets_levi",
    "BGmuPoset",
    "class_of_mu",
    "enumerate_BGmu",
    "hasse_edges",
    "chain_length",
    "orbit_ceiling_length",
    "check_defect",
    "defect",
    "defect_oracle_resgl",
    "orbit_pairings",
    "rank_identity",
]
