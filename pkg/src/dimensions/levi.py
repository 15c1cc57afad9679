"""
Levi Reduction
==============
Quantities for reducing the dimension of a Rapoport-Zink space to a Levi
subgroup M_J in which the class is superbasic: the sets Sigma(mu) of
cocharacters with dominant representative below mu, their M-dominant and
M-maximal parts, the fibre dimension of the projection to M and the
comparison of the reduced maximum with the closed formula.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import floor
from typing import Optional, Sequence

from loguru import logger

from ..core.exceptions import PreconditionError
from ..groups.root_datum import GroupDatum, GroupKind, scale, sub
from ..groups.weyl import weyl_orbit
from ..linalg.exact import dot, rational_inverse
from ..newton.sigma_class import SigmaClass, levi_lift
from ..newton.defect import defect
from .formulas import dim_rz, dim_rz_floor


@dataclass(frozen=True)
class LeviDatum:
    """
    The standard Levi M_J.

    Attributes:
        group: Group datum
        J: Galois-stable simple positions
    """
    group: GroupDatum
    J: frozenset

    @cached_property
    def positive_roots(self) -> list[int]:
        G = self.group
        return [
            r for r in G.positive_roots
            if all(c == 0 for p, c in enumerate(G.root_coefficients(G.roots[r])) if p not in self.J)
        ]

    @cached_property
    def rho_M(self) -> tuple[Fraction, ...]:
        """Half-sum of the positive roots of M."""
        G = self.group
        return scale(Fraction(1, 2), G._vector_sum([G.roots[r].vector for r in self.positive_roots]))

    @cached_property
    def fund_weights(self) -> dict[int, tuple[Fraction, ...]]:
        """Fundamental weights of M inside the span of its simple roots."""
        G = self.group
        positions = sorted(self.J)
        if not positions:
            return {}
        sub_cartan = [[G.cartan[i][j] for j in positions] for i in positions]
        inv = rational_inverse(sub_cartan)
        return {
            p: G._vector_sum([scale(inv[a][b], G.simple_vectors[q]) for b, q in enumerate(positions)])
            for a, p in enumerate(positions)
        }

    @cached_property
    def orbit_weights(self) -> list[tuple[Fraction, ...]]:
        """Sums of fundamental weights of M over the Galois orbits inside J."""
        G = self.group
        return [
            G._vector_sum([self.fund_weights[p] for p in orbit])
            for orbit in G.simple_orbits if set(orbit) <= self.J
        ]

    def is_dominant(self, vec: Sequence) -> bool:
        return all(dot(self.group.simple_vectors[p], vec) >= 0 for p in self.J)

    def leq(self, lower: Sequence, upper: Sequence) -> bool:
        """upper - lower is a nonnegative combination of the simple coroots of M."""
        coeffs = self.group.coroot_coefficients(sub(upper, lower), sorted(self.J))
        return coeffs is not None and all(c >= 0 for c in coeffs)

    def kappa(self, vec: Sequence[int]) -> tuple[int, ...]:
        return self.group.kappa_map(vec, levi=self.J)


def dominant_below(G: GroupDatum, mu: Sequence[int]) -> list[tuple[int, ...]]:
    """Dominant cocharacters mu'' <= mu with mu - mu'' in the coroot lattice."""
    lo, hi = min(mu), max(mu)
    out = []
    for vec in product(range(lo, hi + 1), repeat=G.rank):
        if not G.satisfies_constraints(vec) or not G.is_dominant(vec):
            continue
        coeffs = G.coroot_coefficients(sub(mu, vec))
        if coeffs is not None and all(c >= 0 and c.denominator == 1 for c in coeffs):
            out.append(vec)
    return sorted(out, reverse=True)


@dataclass
class SigmaMuSets:
    """Sigma(mu) with its M-dominant and M-maximal parts."""
    all: list[tuple[int, ...]]
    m_dominant: list[tuple[int, ...]]
    m_maximal: list[tuple[int, ...]]


def sigma_mu_sets(G: GroupDatum, mu: Sequence[int], J: frozenset) -> SigmaMuSets:
    """
    Example:
        >>> sets = sigma_mu_sets(build_group("gl", 2, 1), (1, 0), frozenset())
        >>> sets.all
        [(0, 1), (1, 0)]
    """
    mu = G.check_cocharacter(mu)
    M = LeviDatum(G, frozenset(J))
    everything = set()
    for lower in dominant_below(G, mu):
        everything |= weyl_orbit(G, lower)
    everything = sorted(everything)
    m_dom = [v for v in everything if M.is_dominant(v)]
    m_max = [v for v in m_dom if not any(u != v and M.leq(v, u) for u in m_dom)]
    logger.debug(f"Sigma({mu}) for J={sorted(J)}: {len(everything)} / {len(m_dom)} / {len(m_max)}")
    return SigmaMuSets(all=everything, m_dominant=m_dom, m_maximal=m_max)


def class_kappa_M(c: SigmaClass, J: frozenset) -> tuple[int, ...]:
    """pi_1(M_J)_Gamma coordinates of c viewed as a basic class of M_J."""
    lift = levi_lift(c.group, frozenset(J), c.nu, c.kappa)
    if lift is None:
        raise PreconditionError(f"class with nu={c.nu} has no representative in M_{sorted(J)}")
    return c.group.kappa_map(lift, levi=frozenset(J))


def I_mu_b_M(G: GroupDatum, mu: Sequence[int], c: SigmaClass, J: frozenset) -> list[tuple[int, ...]]:
    """M-dominant elements of Sigma(mu) with the Kottwitz point of c in M."""
    target = class_kappa_M(c, J)
    return [v for v in sigma_mu_sets(G, mu, J).m_dominant if G.kappa_map(v, levi=frozenset(J)) == target]


@dataclass(frozen=True)
class DValue:
    """The value of d(mu, mu_M); exact only for M-maximal mu_M, otherwise an upper bound."""
    value: Fraction
    exact: bool


def d_mu_muM(G: GroupDatum, mu: Sequence[int], mu_M: Sequence[int], J: frozenset) -> DValue:
    """<rho, mu + mu_M> - 2 <rho_M, mu_M>"""
    M = LeviDatum(G, frozenset(J))
    value = dot(G.rho, mu) + dot(G.rho, mu_M) - 2 * dot(M.rho_M, mu_M)
    exact = tuple(mu_M) in sigma_mu_sets(G, mu, J).m_maximal
    if not exact:
        logger.debug(f"{tuple(mu_M)} is not M-maximal, d(mu, mu_M) is only bounded by {value}")
    return DValue(value=value, exact=exact)


def fibre_dim(G: GroupDatum, mu: Sequence[int], mu_M: Sequence[int], c: SigmaClass, J: frozenset) -> Fraction:
    """<rho, mu - nu> - <rho_M, mu_M>"""
    M = LeviDatum(G, frozenset(J))
    return dot(G.rho, sub(mu, c.nu)) - dot(M.rho_M, mu_M)


def defect_M(c: SigmaClass, J: frozenset) -> int:
    """Defect of c as a basic class of M_J."""
    M = LeviDatum(c.group, frozenset(J))
    lift = levi_lift(c.group, frozenset(J), c.nu, c.kappa)
    if lift is None:
        raise PreconditionError(f"class with nu={c.nu} has no representative in M_{sorted(J)}")
    diff = sub(lift, c.nu)
    total = Fraction(0)
    for w in M.orbit_weights:
        value = dot(w, diff)
        total += value - floor(value)
    return int(2 * total)


def dim_rz_M(G: GroupDatum, mu_M: Sequence[int], c: SigmaClass, J: frozenset) -> Fraction:
    """<rho_M, mu_M - nu> - defect_M / 2"""
    M = LeviDatum(G, frozenset(J))
    return dot(M.rho_M, sub(mu_M, c.nu)) - Fraction(defect_M(c, J), 2)


def dim_rz_M_floor(G: GroupDatum, mu_M: Sequence[int], c: SigmaClass, J: frozenset) -> int:
    M = LeviDatum(G, frozenset(J))
    diff = sub(mu_M, c.nu)
    return sum(floor(dot(w, diff)) for w in M.orbit_weights)


def superbasic_levi(c: SigmaClass) -> frozenset:
    """
    The Galois-stable Levi in which a Res GL class is superbasic.

    Each block of equal Newton slopes splits into pieces of size equal to
    the denominator of its sigma^d-slope.

    Raises:
        PreconditionError: Not a Res GL group
    """
    G = c.group
    if G.kind is not GroupKind.RES_GL:
        raise PreconditionError(f"superbasic Levi is only computed for Res GL, got {G}")
    slots = [c.nu[G.index(0, i)] for i in range(G.n)]
    cuts = set()
    start = 0
    while start < G.n:
        end = start
        while end + 1 < G.n and slots[end + 1] == slots[start]:
            end += 1
        size = Fraction(G.d * slots[start]).denominator
        for i in range(start, end):
            if (i - start + 1) % size == 0:
                cuts.add(i)
        cuts.add(end)
        start = end + 1
    J = set()
    for p, r in enumerate(G.simple_roots):
        k, _ = G.roots[r].label
        if G.position(k) not in cuts:
            J.add(p)
    return frozenset(J)


@dataclass
class ReductionRow:
    mu_M: tuple[int, ...]
    dim_rz_M: Fraction
    fibre_dim: Fraction

    @property
    def total(self) -> Fraction:
        return self.dim_rz_M + self.fibre_dim


@dataclass
class ReductionReport:
    """
    The maximum over I_{mu,b,M} of the reduced dimensions, compared with the
    orbit floor sum of the full group.

    Attributes:
        J: Levi in which the class is superbasic
        dim_rz: Closed formula <rho, mu - nu> - defect / 2 of the full group
        dim_rz_floor: Sum over Galois orbits of floor(<omega_O, mu - nu>) in G
        rows: One reduced term per mu_M in I_{mu,b,M}
        floor_mismatches: mu_M whose Levi closed formula and floor sum differ
        defect_mismatch: defect in M differs from defect in G
    """
    J: frozenset
    dim_rz: Fraction
    dim_rz_floor: int
    rows: list[ReductionRow] = field(default_factory=list)
    floor_mismatches: list[tuple[int, ...]] = field(default_factory=list)
    defect_mismatch: bool = False

    @property
    def maximum(self) -> Optional[Fraction]:
        return max((row.total for row in self.rows), default=None)

    @property
    def passed(self) -> bool:
        if self.maximum is None or self.floor_mismatches or self.defect_mismatch:
            return False
        return self.maximum == self.dim_rz_floor == self.dim_rz


def reduction_check(G: GroupDatum, mu: Sequence[int], c: SigmaClass, J: Optional[frozenset] = None) -> ReductionReport:
    """
    Compare max over mu_M of dim_rz_M(mu_M) + fibre_dim with the floor sum
    of the full group.

    Raises:
        PreconditionError: No proper Levi in which c is superbasic
    """
    mu = G.check_cocharacter(mu)
    J = superbasic_levi(c) if J is None else frozenset(J)
    if len(J) == len(G.simple_roots):
        raise PreconditionError(f"class with nu={c.nu} is superbasic in {G}")
    report = ReductionReport(J=J, dim_rz=dim_rz(G, mu, c), dim_rz_floor=dim_rz_floor(G, mu, c))
    report.defect_mismatch = defect_M(c, J) != defect(c)
    for mu_M in I_mu_b_M(G, mu, c, J):
        report.rows.append(ReductionRow(mu_M, dim_rz_M(G, mu_M, c, J), fibre_dim(G, mu, mu_M, c, J)))
        if dim_rz_M(G, mu_M, c, J) != dim_rz_M_floor(G, mu_M, c, J):
            report.floor_mismatches.append(mu_M)
    logger.debug(f"reduction for nu={c.nu}, J={sorted(J)}: max {report.maximum} vs floor sum {report.dim_rz_floor}")
    return report
