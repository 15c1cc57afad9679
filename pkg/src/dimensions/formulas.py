"""
Dimension Formulas
==================
Closed formulas for Newton strata, Rapoport-Zink spaces and central leaves
attached to a class c in B(G, mu), with their cross-identities:

    dim Newton stratum = <rho, mu + nu> - defect / 2
                       = 2 <rho, mu> - (chain length from c up to [p^mu])
                       = dim RZ + dim central leaf
    dim RZ             = sum over Galois orbits of floor(<omega_O, mu - nu>)
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Optional, Sequence

from loguru import logger

from ..core.exceptions import PreconditionError, VerificationError
from ..groups.root_datum import GroupDatum, sub
from ..linalg.exact import dot
from ..affine.straight import MinimalStratumRow, minimal_eo_strata
from ..newton.defect import chain_length, check_defect, defect, orbit_ceiling_length
from ..newton.kottwitz_set import BGmuPoset, class_of_mu, enumerate_BGmu
from ..newton.sigma_class import SigmaClass


def _check_membership(G: GroupDatum, mu: Sequence[int], c: SigmaClass) -> tuple[int, ...]:
    mu = G.check_cocharacter(mu)
    if not G.is_dominant(mu):
        raise PreconditionError(f"{mu} is not dominant")
    if c.group != G:
        raise PreconditionError(f"class belongs to {c.group}, not {G}")
    if c.kappa != G.kappa_map(mu) or not G.leq_dominance(c.nu, G.orbit_average(mu)):
        raise PreconditionError(f"class with nu={c.nu} is not in B({G}, {mu})")
    return mu


def dim_newton_stratum(G: GroupDatum, mu: Sequence[int], c: SigmaClass) -> Fraction:
    """<rho, mu + nu> - defect / 2"""
    mu = _check_membership(G, mu, c)
    return dot(G.rho, mu) + dot(G.rho, c.nu) - Fraction(defect(c), 2)


def dim_rz(G: GroupDatum, mu: Sequence[int], c: SigmaClass) -> Fraction:
    """<rho, mu - nu> - defect / 2"""
    mu = _check_membership(G, mu, c)
    return dot(G.rho, sub(mu, c.nu)) - Fraction(defect(c), 2)


def dim_rz_floor(G: GroupDatum, mu: Sequence[int], c: SigmaClass) -> int:
    """Sum over Galois orbits O of floor(<omega_O, mu - nu>)."""
    mu = _check_membership(G, mu, c)
    diff = sub(mu, c.nu)
    return sum(floor(dot(w, diff)) for w in G.orbit_weights)


def dim_rz_orbit_average(G: GroupDatum, mu: Sequence[int], c: SigmaClass) -> Fraction:
    """<2 rho, mu_bar - nu> + sum over orbits of floor(-<omega_O, mu_bar - nu>), mu_bar the Galois average."""
    mu = _check_membership(G, mu, c)
    diff = sub(G.orbit_average(mu), c.nu)
    return 2 * dot(G.rho, diff) + sum(floor(-dot(w, diff)) for w in G.orbit_weights)


def dim_central_leaf(c: SigmaClass) -> Fraction:
    """<2 rho, nu>"""
    return 2 * dot(c.group.rho, c.nu)


def chain_to_mu(G: GroupDatum, mu: Sequence[int], c: SigmaClass, top: Optional[SigmaClass] = None) -> int:
    """
    Length of maximal chains from c up to the class of p^mu.

    The orbit-ceiling sum, which is exact when the upper end is p^mu.
    """
    _check_membership(G, mu, c)
    return orbit_ceiling_length(c, top if top is not None else class_of_mu(G, mu))


def slope_quantity(G: GroupDatum, nu: Sequence, roots: Sequence[int]) -> Fraction:
    """Sum of <alpha, nu> over the roots (by index) pairing negatively with nu."""
    total = Fraction(0)
    for r in roots:
        value = dot(G.roots[r].vector, nu)
        if value < 0:
            total += value
    return total


@dataclass(frozen=True)
class StratumReport:
    """Every dimension attached to one class of B(G, mu)."""
    sigma_class: SigmaClass
    defect: int
    dim_newton: Fraction
    dim_rz: Fraction
    dim_rz_floor: int
    dim_rz_orbit_average: Fraction
    dim_central_leaf: Fraction
    chain_to_mu: int

    def failures(self, top_dimension: Fraction) -> list[str]:
        """Identities that do not hold, by name."""
        out = []
        if self.dim_newton != self.dim_rz + self.dim_central_leaf:
            out.append("newton = rz + central leaf")
        if self.dim_rz != self.dim_rz_floor:
            out.append("rz = floor sum")
        if self.dim_rz != self.dim_rz_orbit_average:
            out.append("rz = orbit-average variant")
        if self.dim_newton != top_dimension - self.chain_to_mu:
            out.append("newton = 2<rho, mu> - chain length")
        for name in ("dim_newton", "dim_rz", "dim_central_leaf"):
            if Fraction(getattr(self, name)).denominator != 1:
                out.append(f"{name} integral")
        return out


def stratum_report(G: GroupDatum, mu: Sequence[int], c: SigmaClass, top: Optional[SigmaClass] = None) -> StratumReport:
    """All dimensions of c, without asserting the identities."""
    mu = _check_membership(G, mu, c)
    return StratumReport(
        sigma_class=c,
        defect=defect(c),
        dim_newton=dim_newton_stratum(G, mu, c),
        dim_rz=dim_rz(G, mu, c),
        dim_rz_floor=dim_rz_floor(G, mu, c),
        dim_rz_orbit_average=dim_rz_orbit_average(G, mu, c),
        dim_central_leaf=dim_central_leaf(c),
        chain_to_mu=chain_to_mu(G, mu, c, top),
    )


@dataclass
class BGmuReport:
    """Rows for every class of B(G, mu) plus the Hasse diagram."""
    group: GroupDatum
    mu: tuple[int, ...]
    rows: list[StratumReport]
    edges: list[tuple[int, int]]
    poset: BGmuPoset = field(repr=False)

    @property
    def top_dimension(self) -> Fraction:
        return 2 * dot(self.group.rho, self.mu)


def bgmu_report(G: GroupDatum, mu: Sequence[int], **kwargs) -> BGmuReport:
    """
    Dimensions of all Newton strata for (G, mu).

    Example:
        >>> report = bgmu_report(build_group("gsp", 4, 1), (1, 1, 0, 0))
        >>> [int(r.dim_newton) for r in report.rows]
        [3, 2, 1]
    """
    mu = G.check_cocharacter(mu)
    classes = enumerate_BGmu(G, mu, **kwargs)
    poset = BGmuPoset(classes)
    top = class_of_mu(G, mu)
    rows = [stratum_report(G, mu, c, top) for c in classes]
    return BGmuReport(group=G, mu=mu, rows=rows, edges=sorted(poset.hasse.edges()), poset=poset)


@dataclass
class IdentityReport:
    """Outcome of checking every cross-identity on B(G, mu)."""
    group: GroupDatum
    mu: tuple[int, ...]
    classes: int = 0
    failures: list[tuple[tuple, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        if self.passed:
            return f"all identities hold ({self.classes} classes)"
        return f"{len(self.failures)} identity failures over {self.classes} classes"


def verify_identities(G: GroupDatum, mu: Sequence[int], report: Optional[BGmuReport] = None) -> IdentityReport:
    """
    Check the dimension identities, the defect oracles, and the chain-length
    formula against the longest chains of the computed poset.
    """
    report = report if report is not None else bgmu_report(G, mu)
    result = IdentityReport(group=G, mu=report.mu, classes=len(report.rows))
    top = report.top_dimension
    for row in report.rows:
        for name in row.failures(top):
            result.failures.append((row.sigma_class.nu, name))
        try:
            check_defect(row.sigma_class)
        except VerificationError as e:
            result.failures.append((row.sigma_class.nu, f"defect: {e}"))

    poset = report.poset
    for i, lower in enumerate(poset.classes):
        for j, upper in enumerate(poset.classes):
            if not poset.leq(i, j):
                continue
            try:
                formula = chain_length(lower, upper)
            except VerificationError as e:
                result.failures.append((lower.nu, f"chain length to {upper.nu}: {e}"))
                continue
            if formula != poset.longest_chain_length(i, j):
                result.failures.append((lower.nu, f"chain length to {upper.nu}"))

    if result.passed:
        logger.info(f"{G}, mu={report.mu}: {result.summary()}")
    else:
        logger.warning(f"{G}, mu={report.mu}: {result.summary()}")
    return result


def check_minimal_eo_strata(G: GroupDatum, mu: Sequence[int]) -> list[MinimalStratumRow]:
    """
    The minimal Ekedahl-Oort stratum of every Newton stratum of B(G, mu)
    against the central leaf dimension (mu minuscule).
    """
    mu = G.check_cocharacter(mu)
    return minimal_eo_strata(G, mu, enumerate_BGmu(G, mu))
