"""Superbasic EL-charts and the Rapoport-Zink dimension they compute."""

from .charts import (
    ChartValidation,
    ELChart,
    ELChartParams,
    admissible_params,
    enumerate_charts,
    floor_formula_dim,
    hodge_point,
    minuscule_hodge_point,
    superbasic_element,
    superbasic_rz_dim,
    sweep,
    to_lower_convention,
    to_upper_convention,
    v_count,
    v_set,
    validate,
)

__all__ = [
    "ChartValidation",
    "ELChart",
    "ELChartParams",
    "admissible_params",
    "enumerate_charts",
    "floor_formula_dim",
    "hodge_point",
    "minuscule_hodge_point",
    "superbasic_element",
    "superbasic_rz_dim",
    "sweep",
    "to_lower_convention",
    "to_upper_convention",
    "v_count",
    "v_set",
    "validate",
]
