"""
Run the Verification Sweep

Checks, for every case in config/verification.yaml:
1. Dimension identities, defect oracles and chain lengths on B(G, mu)
2. Enumeration stability under a wider lift window
3. Levi reduction for Res GL classes that are not superbasic
4. Minimal Ekedahl-Oort strata against central leaves (mu minuscule)
5. Closed-form length against BFS distance
6. Truncation termination, minimality, length bound and idempotence
7. Fundamental => sigma-straight => power length identity
8. Superbasic EL-charts against the floor formula

Usage:
    python scripts/run_verification.py
    python scripts/run_verification.py --config config/verification.yaml --skip el_sweep
"""

import argparse
import random
import sys
from datetime import datetime
from itertools import product
from pathlib import Path

import pandas as pd
import yaml
from loguru import logger
from tqdm import tqdm

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.affine.affine_weyl import is_sigma_straight, length, random_element  # noqa: E402
from src.affine.oracles import check_length_oracle  # noqa: E402
from src.affine.straight import is_fundamental, straight_power_identity  # noqa: E402
from src.affine.truncation import eo_truncation, is_in_minimal_coset, replay_certificate  # noqa: E402
from src.cli.parsing import parse_group, parse_vector  # noqa: E402
from src.config.settings import get_settings  # noqa: E402
from src.core.exceptions import NewtonStrataError  # noqa: E402
from src.dimensions.formulas import bgmu_report, check_minimal_eo_strata, verify_identities  # noqa: E402
from src.dimensions.levi import reduction_check  # noqa: E402
from src.el_charts.charts import sweep  # noqa: E402
from src.groups.root_datum import GroupKind  # noqa: E402
from src.newton.sigma_class import is_superbasic  # noqa: E402
from src.utils.helpers import save_json, to_json_ready  # noqa: E402
from src.utils.logger import setup_logger  # noqa: E402


def minuscule_gl_cases(n_max: int, d: int) -> list[tuple[str, tuple[int, ...]]]:
    """Every dominant minuscule mu of Res GL_n over degree d, for n <= n_max."""
    cases = []
    for n in range(1, n_max + 1):
        for ks in product(range(n + 1), repeat=d):
            mu = tuple(v for k in ks for v in [1] * k + [0] * (n - k))
            cases.append((f"gl(n={n},d={d})", mu))
    return cases


def check_case(group_text: str, mu: tuple[int, ...]) -> dict:
    G = parse_group(group_text)
    failures = []
    try:
        report = bgmu_report(G, mu, check_stability=True)
    except NewtonStrataError as e:
        return {"group": group_text, "mu": mu, "classes": 0, "failures": [str(e)]}
    result = verify_identities(G, mu, report)
    failures += [f"{nu}: {name}" for nu, name in result.failures]
    if G.kind is GroupKind.RES_GL:
        for row in report.rows:
            if not is_superbasic(row.sigma_class) and not reduction_check(G, mu, row.sigma_class).passed:
                failures.append(f"{row.sigma_class.nu}: Levi reduction")
    if G.is_minuscule(mu):
        failures += [f"{row.nu}: minimal EO stratum" for row in check_minimal_eo_strata(G, mu) if not row.passed]
    return {"group": group_text, "mu": mu, "classes": result.classes, "failures": failures}


def run_identities(section: dict) -> pd.DataFrame:
    cases = [(c["group"], parse_vector(c["mu"])) for c in section.get("cases", [])]
    for entry in section.get("minuscule_gl", []):
        cases += minuscule_gl_cases(entry["n_max"], entry["d"])
    rows = [check_case(g, mu) for g, mu in tqdm(cases, desc="B(G, mu) identities")]
    return pd.DataFrame(rows)


def run_length_oracle(section: dict, radius: int) -> pd.DataFrame:
    rows = []
    for text in tqdm(section["groups"], desc="Length oracle"):
        report = check_length_oracle(parse_group(text), radius)
        rows.append({"group": text, "checked": report.checked,
                     "failures": [str(m) for m in report.mismatches]})
    return pd.DataFrame(rows)


def run_truncation(section: dict, samples: int, seed: int, max_power: int) -> pd.DataFrame:
    rng = random.Random(seed)
    rows = []
    for text in section["groups"]:
        G = parse_group(text)
        failures = []
        for _ in tqdm(range(samples), desc=f"Truncation {text}", leave=False):
            b = random_element(G, rng, box=section.get("box", 2))
            result = eo_truncation(b)
            wt = result.element()
            if not is_in_minimal_coset(result):
                failures.append(f"{b}: w not minimal")
            if length(b) < length(wt):
                failures.append(f"{b}: length bound")
            if eo_truncation(wt).w != result.w:
                failures.append(f"{b}: not idempotent")
            if replay_certificate(b, result) != result.endpoint():
                failures.append(f"{b}: certificate does not reach its endpoint")
            if is_fundamental(b) and not is_sigma_straight(b):
                failures.append(f"{b}: fundamental but not straight")
            if is_sigma_straight(b) and not straight_power_identity(b, max_power):
                failures.append(f"{b}: power length identity")
        rows.append({"group": text, "checked": samples, "failures": failures})
    return pd.DataFrame(rows)


def run_el_sweep(section: dict) -> pd.DataFrame:
    frame = sweep(section["h_max"], section["d_max"], progress=True)
    frame["failures"] = [[] if ok else ["chart maximum != floor formula"] for ok in frame["agrees"]]
    return frame


def main():
    parser = argparse.ArgumentParser(description="Newton strata verification sweep")
    parser.add_argument("--config", default="config/verification.yaml", help="Sweep definition (YAML)")
    parser.add_argument("--skip", nargs="*", default=[],
                        choices=["identities", "length_oracle", "truncation", "el_sweep"],
                        help="Sections to skip")
    parser.add_argument("--log-level", default=None, help="Logging level (default: LOG_LEVEL)")
    args = parser.parse_args()

    settings = get_settings()
    setup_logger(log_level=(args.log_level or settings.log_level).upper(), log_file=settings.log_file,
                 context="verification")

    with open(args.config, encoding="utf-8") as fh:
        config = yaml.safe_load(fh)

    logger.info("=" * 60)
    logger.info("NEWTON STRATA VERIFICATION")
    logger.info("=" * 60)

    frames: dict[str, pd.DataFrame] = {}
    if "identities" not in args.skip and "identities" in config:
        frames["identities"] = run_identities(config["identities"])
    if "length_oracle" not in args.skip and "length_oracle" in config:
        frames["length_oracle"] = run_length_oracle(config["length_oracle"], settings.oracle_max_length)
    if "truncation" not in args.skip and "truncation" in config:
        frames["truncation"] = run_truncation(
            config["truncation"], settings.sample_size, settings.seed, settings.straight_max_power)
    if "el_sweep" not in args.skip and "el_sweep" in config:
        frames["el_sweep"] = run_el_sweep(config["el_sweep"])

    total_failures = 0
    summary = {}
    for name, frame in frames.items():
        failed = int(frame["failures"].map(len).sum()) if len(frame) else 0
        total_failures += failed
        summary[name] = {"rows": len(frame), "failures": failed,
                         "records": frame.astype(object).to_dict(orient="records")}
        logger.info(f"{name}: {len(frame)} rows, {failed} failures")

    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    out = settings.get_output_dir() / f"verification_{timestamp}.json"
    save_json(to_json_ready(summary), out)
    logger.info(f"Saved report to {out}")

    if total_failures:
        logger.error(f"{total_failures} verification failures")
        return 2
    logger.success("All verification checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
