"""
Sigma-Conjugacy Classes
=======================
A class [b] is determined by its Newton point nu and Kottwitz point kappa.
This module packages those invariants, attaches the Levi M_nu with the
pi_1(M_nu)_Gamma coordinates of an integral lift, and decides basic /
superbasic.

Lifts are built orbit by orbit: the Newton point of an element of M_J
is the average of its translation over the permutation group generated
by W_J and the Galois generator, so a lift only has to have the right
integer sum on each orbit.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, gcd
from typing import Optional, Sequence

import networkx as nx
from loguru import logger

from ..core.exceptions import GroupMismatchError, VerificationError
from ..groups.root_datum import GroupDatum, GroupKind
from ..linalg.exact import integer_kernel_basis, solve_integer
from ..affine.affine_weyl import ExtAffElt, kottwitz_point, newton_point


@dataclass(frozen=True)
class SigmaClass:
    """
    Invariants of a sigma-conjugacy class.

    Attributes:
        group: Group datum
        nu: Dominant, Galois-invariant Newton point
        kappa: Coordinates in pi_1(G)_Gamma
        levi_J: Simple positions with <alpha, nu> = 0
        kappa_M: Coordinates in pi_1(M_J)_Gamma of the stored lift
        lift: Integral cocharacter in M_J, basic there, with Newton point nu
    """
    group: GroupDatum
    nu: tuple[Fraction, ...]
    kappa: tuple[int, ...]
    levi_J: frozenset
    kappa_M: tuple[int, ...]
    lift: tuple[int, ...]

    @property
    def key(self) -> tuple:
        return (self.nu, self.kappa)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SigmaClass) and self.group == other.group and self.key == other.key

    def __hash__(self) -> int:
        return hash((self.group, self.key))


def levi_of(G: GroupDatum, nu: Sequence) -> frozenset:
    """{alpha simple : <alpha, nu> = 0}"""
    return frozenset(p for p, v in enumerate(G.simple_pairings(nu)) if v == 0)


@lru_cache(maxsize=None)
def levi_orbits(G: GroupDatum, J: frozenset) -> tuple[tuple[int, ...], ...]:
    """Orbits on ambient indices of the group generated by W_J and gamma."""
    graph = nx.Graph()
    graph.add_nodes_from(range(G.rank))
    for p in J:
        s = G.simple_reflections[p]
        graph.add_edges_from((k, s[k]) for k in range(G.rank) if s[k] != k)
    graph.add_edges_from((k, G.galois[k]) for k in range(G.rank))
    return tuple(sorted(tuple(sorted(c)) for c in nx.connected_components(graph)))


@lru_cache(maxsize=None)
def orbit_partners(G: GroupDatum, J: frozenset) -> tuple[Optional[int], ...]:
    """For each orbit, the index of the orbit holding the partner indices (None for GL)."""
    orbits = levi_orbits(G, J)
    if G.partner is None:
        return tuple(None for _ in orbits)
    where = {k: i for i, orbit in enumerate(orbits) for k in orbit}
    return tuple(where[G.partner[orbit[0]]] for orbit in orbits)


def orbit_sums(G: GroupDatum, J: frozenset, nu: Sequence) -> Optional[list[int]]:
    """Integer orbit sums |O| * nu_O, or None if nu is not orbit-constant or a sum is fractional."""
    sums = []
    for orbit in levi_orbits(G, J):
        values = {Fraction(nu[k]) for k in orbit}
        if len(values) != 1:
            return None
        total = values.pop() * len(orbit)
        if total.denominator != 1:
            return None
        sums.append(int(total))
    return sums


def realize_orbit_sums(G: GroupDatum, J: frozenset, sums: Sequence[int], c: Optional[int]) -> tuple[int, ...]:
    """
    An integral lattice vector with the given orbit sums.

    Values are spread evenly inside each orbit; partner coordinates are set
    to c minus their mate.
    """
    orbits = levi_orbits(G, J)
    partners = orbit_partners(G, J)
    lam: list[Optional[int]] = [None] * G.rank
    for i, orbit in enumerate(orbits):
        mate = partners[i]
        if mate is not None and mate < i:
            continue
        if mate == i:
            for k in orbit:
                if lam[k] is None:
                    a = ceil(Fraction(c, 2))
                    lam[k], lam[G.partner[k]] = a, c - a
            continue
        q, r = divmod(sums[i], len(orbit))
        for pos, k in enumerate(orbit):
            lam[k] = q + 1 if pos < r else q
            if mate is not None:
                lam[G.partner[k]] = c - lam[k]
    return tuple(lam)


@lru_cache(maxsize=None)
def _orbit_moves(G: GroupDatum, J: frozenset) -> tuple[tuple[int, ...], ...]:
    """Z-basis of lattice vectors with zero orbit sums and zero similitude."""
    rows = []
    for orbit in levi_orbits(G, J):
        rows.append(tuple(1 if k in orbit else 0 for k in range(G.rank)))
    rows.extend(G.constraints)
    if G.partner is not None:
        row = [0] * G.rank
        row[G.index(0, 0)] += 1
        row[G.partner[G.index(0, 0)]] += 1
        rows.append(tuple(row))
    return tuple(integer_kernel_basis(rows, cols=G.rank))


def levi_lift(G: GroupDatum, J: frozenset, nu: Sequence, kappa: Sequence[int]) -> Optional[tuple[int, ...]]:
    """
    Integral lift of the class (nu, kappa) into M_J, or None.

    Finds lambda in X_*(T) whose average over <W_J, gamma> is nu and whose
    image in pi_1(G)_Gamma is kappa.

    Args:
        G: Group datum
        J: Galois-stable simple positions
        nu: Rational Newton point, constant on each orbit
        kappa: Target pi_1(G)_Gamma coordinates
    """
    sums = orbit_sums(G, J, nu)
    if sums is None:
        return None
    c = None
    if G.partner is not None:
        value = G.similitude(nu)
        if value.denominator != 1:
            return None
        c = int(value)
    lam = realize_orbit_sums(G, J, sums, c)

    presentation = G.fundamental_group()
    current = G.kappa_map(lam)
    diff = [int(a) - int(b) for a, b in zip(kappa, current)]
    if not any(diff):
        return lam

    moves = _orbit_moves(G, J)
    move_images = [G.kappa_map(m) for m in moves]
    torsion = presentation.torsion_orders
    width = len(moves) + len(torsion)
    matrix = []
    for j in range(len(diff)):
        row = [img[j] for img in move_images]
        row += [torsion[j] if t == j else 0 for t in range(len(torsion))]
        matrix.append(row)
    solution = solve_integer(matrix, diff, cols=width)
    if solution is None:
        return None
    for t, move in zip(solution[:len(moves)], moves):
        lam = tuple(a + t * m for a, m in zip(lam, move))
    if tuple(G.kappa_map(lam)) != tuple(kappa):
        raise VerificationError("kappa adjustment of a Levi lift failed", "kappa", tuple(kappa), G.kappa_map(lam))
    return lam


def make_class(G: GroupDatum, nu: Sequence, kappa: Sequence[int], lift: Optional[Sequence[int]] = None) -> Optional[SigmaClass]:
    """Build the SigmaClass with invariants (nu, kappa), or None if no lift exists."""
    nu = tuple(Fraction(v) for v in nu)
    J = levi_of(G, nu)
    if lift is None:
        lift = levi_lift(G, J, nu, kappa)
        if lift is None:
            return None
    return SigmaClass(
        group=G,
        nu=nu,
        kappa=tuple(kappa),
        levi_J=J,
        kappa_M=G.kappa_map(lift, levi=J),
        lift=tuple(lift),
    )


def classify(x: ExtAffElt) -> SigmaClass:
    """
    The sigma-conjugacy class of x.

    Example:
        >>> G = build_group("gl", 2, 1)
        >>> classify(translation(G, (1, 0))).nu
        (Fraction(1, 1), Fraction(0, 1))
    """
    G = x.group
    nu = newton_point(x)
    kappa = kottwitz_point(x)
    cls = make_class(G, nu, kappa)
    if cls is None:
        raise VerificationError(f"no Levi lift for the class of {x}", "lift", None, None)
    return cls


def leq(lower: SigmaClass, upper: SigmaClass) -> bool:
    """[b'] <= [b] iff nu' <= nu and the Kottwitz points agree."""
    if lower.group != upper.group:
        raise GroupMismatchError("classes belong to different groups")
    return lower.kappa == upper.kappa and lower.group.leq_dominance(lower.nu, upper.nu)


def is_basic(c: SigmaClass) -> bool:
    return len(c.levi_J) == len(c.group.simple_roots)


def meets_levi(c: SigmaClass, J: frozenset) -> bool:
    """True iff the basic class c has a representative in M_J."""
    return levi_lift(c.group, frozenset(J), c.nu, c.kappa) is not None


def _superbasic_by_slope(c: SigmaClass) -> bool:
    G = c.group
    m = sum(c.lift)
    return gcd(m, G.n) == 1


def is_superbasic(c: SigmaClass) -> bool:
    """
    Basic and meeting no proper Galois-stable standard Levi.

    For Res GL the answer is cross-checked against gcd(m, h) = 1 with
    m the total degree and h = n.
    """
    if not is_basic(c):
        return False
    G = c.group
    everything = frozenset(range(len(G.simple_roots)))
    result = not any(meets_levi(c, J) for J in G.galois_stable_subsets() if J != everything)
    if G.kind is GroupKind.RES_GL:
        expected = _superbasic_by_slope(c)
        if expected != result:
            raise VerificationError(
                f"superbasic test disagrees with the slope criterion for {c.nu}",
                "superbasic", expected, result,
            )
    logger.debug(f"superbasic({c.nu}) = {result}")
    return result
