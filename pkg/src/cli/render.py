"""
Output Rendering
================
Turns report objects into pandas tables, JSON-ready dicts (every rational
as a "p/q" string) and Graphviz DOT text.
"""

import json
import sys
from pathlib import Path
from typing import Any, Optional

import pandas as pd
from loguru import logger

from ..groups.root_datum import GroupDatum
from ..utils.helpers import format_rational, to_json_ready
from ..dimensions.formulas import BGmuReport
from ..dimensions.levi import ReductionReport
from ..affine.truncation import TruncationResult, eo_stratum_dimension


def fmt_vector(vec) -> str:
    return "(" + ", ".join(format_rational(v) for v in vec) + ")"


def describe_group(G: GroupDatum) -> dict[str, Any]:
    """Root datum summary: simple roots and coroots, rho, orbit weights, pi_1."""
    return {
        "group": repr(G),
        "rank": G.rank,
        "simple_roots": [list(v) for v in G.simple_vectors],
        "simple_coroots": [list(v) for v in G.simple_coroots],
        "cartan": G.cartan,
        "rho": list(G.rho),
        "simple_orbits": [list(o) for o in G.simple_orbits],
        "orbit_weights": [list(w) for w in G.orbit_weights],
        "pi1": G.fundamental_group(coinvariants=False).describe(),
        "pi1_coinvariants": G.fundamental_group().describe(),
    }


def describe_text(info: dict[str, Any]) -> str:
    lines = [f"group            {info['group']} (ambient rank {info['rank']})"]
    for p, (root, coroot) in enumerate(zip(info["simple_roots"], info["simple_coroots"])):
        lines.append(f"alpha_{p}          {fmt_vector(root)}   coroot {fmt_vector(coroot)}")
    lines.append(f"rho              {fmt_vector(info['rho'])}")
    for orbit, weight in zip(info["simple_orbits"], info["orbit_weights"]):
        lines.append(f"omega{tuple(orbit)}  {fmt_vector(weight)}")
    lines.append(f"pi_1             {info['pi1']}")
    lines.append(f"pi_1 coinvariant {info['pi1_coinvariants']}")
    return "\n".join(lines)


def bgmu_frame(report: BGmuReport) -> pd.DataFrame:
    rows = []
    for i, row in enumerate(report.rows):
        rows.append({
            "index": i,
            "nu": fmt_vector(row.sigma_class.nu),
            "kappa": fmt_vector(row.sigma_class.kappa),
            "defect": row.defect,
            "dim_newton": format_rational(row.dim_newton),
            "dim_rz": format_rational(row.dim_rz),
            "dim_central_leaf": format_rational(row.dim_central_leaf),
            "chain_to_mu": row.chain_to_mu,
        })
    return pd.DataFrame(rows).set_index("index")


def bgmu_json(report: BGmuReport) -> dict[str, Any]:
    """{group, mu, classes: [...], edges: [[i, j]]}"""
    return to_json_ready({
        "group": repr(report.group),
        "mu": report.mu,
        "classes": [
            {
                "nu": row.sigma_class.nu,
                "kappa": row.sigma_class.kappa,
                "defect": row.defect,
                "dim_newton": row.dim_newton,
                "dim_rz": row.dim_rz,
                "dim_central_leaf": row.dim_central_leaf,
                "chain_to_mu": row.chain_to_mu,
            }
            for row in report.rows
        ],
        "edges": [list(e) for e in report.edges],
    })


def bgmu_dot(report: BGmuReport) -> str:
    """Hasse diagram; edges point from the smaller class to the larger one."""
    lines = [f'digraph "B({report.group}, {fmt_vector(report.mu)})" {{', "  rankdir=BT;"]
    for i, row in enumerate(report.rows):
        label = f"nu={fmt_vector(row.sigma_class.nu)}, dim={format_rational(row.dim_newton)}"
        lines.append(f'  {i} [label="{label}"];')
    for i, j in report.edges:
        lines.append(f"  {i} -> {j};")
    lines.append("}")
    return "\n".join(lines)


def truncation_json(result: TruncationResult, straight: bool, fundamental: bool) -> dict[str, Any]:
    return to_json_ready({
        "group": repr(result.group),
        "w": result.w,
        "mu": result.mu,
        "eo_dimension": eo_stratum_dimension(result),
        "iterations": result.iterations,
        "sigma_straight": straight,
        "fundamental": fundamental,
    })


def reduction_json(report: ReductionReport) -> dict[str, Any]:
    return to_json_ready({
        "J": sorted(report.J),
        "dim_rz": report.dim_rz,
        "dim_rz_floor": report.dim_rz_floor,
        "maximum": report.maximum,
        "passed": report.passed,
        "terms": [
            {"mu_M": row.mu_M, "dim_rz_M": row.dim_rz_M, "fibre_dim": row.fibre_dim, "total": row.total}
            for row in report.rows
        ],
    })


def key_value_text(payload: dict[str, Any]) -> str:
    """Plain ``key  value`` listing of a JSON-ready dict."""
    width = max((len(k) for k in payload), default=0)
    lines = []
    for key, value in payload.items():
        if isinstance(value, list):
            value = ", ".join(json.dumps(v) if isinstance(v, (dict, list)) else str(v) for v in value)
        lines.append(f"{key.ljust(width)}  {value}")
    return "\n".join(lines)


def emit(text: str, output: Optional[str] = None) -> None:
    """Write to the output file, or to stdout."""
    if output:
        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n", encoding="utf-8")
        logger.info(f"Wrote {path}")
    else:
        sys.stdout.write(text + "\n")


def dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2)
