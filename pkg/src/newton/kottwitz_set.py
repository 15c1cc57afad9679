"""
The Kottwitz Set B(G, mu)
=========================
Enumeration of the classes [b] <= [p^mu] and their partial order.

For each Galois-stable J the Newton points with Levi exactly M_J are
constant on the orbits of <W_J, gamma> with integral orbit sums. A depth
first search over those sums, pruned by strict dominance outside J,
produces the candidates; leq_dominance against the Galois average of mu
and the existence of a lift with kappa_G = kappa_G(mu) decide membership.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import networkx as nx
from loguru import logger

from ..config.settings import get_settings
from ..core.exceptions import EnumerationError, GroupMismatchError, PreconditionError
from ..groups.root_datum import GroupDatum
from ..linalg.exact import dot
from ..utils.helpers import log_duration
from ..affine.affine_weyl import translation
from .sigma_class import (
    SigmaClass,
    classify,
    levi_lift,
    levi_orbits,
    leq,
    make_class,
    orbit_partners,
)


def _check_mu(G: GroupDatum, mu: Sequence[int]) -> tuple[int, ...]:
    mu = G.check_cocharacter(mu)
    if not G.is_dominant(mu):
        raise PreconditionError(f"{mu} is not dominant")
    return mu


def _newton_candidates(G: GroupDatum, J: frozenset, lo: int, hi: int, c: Optional[int]) -> list[tuple[Fraction, ...]]:
    """Orbit-constant points with integral orbit sums in [lo, hi], strictly dominant off J."""
    orbits = levi_orbits(G, J)
    partners = orbit_partners(G, J)
    checks = [
        (G.roots[r].label, p) for p, r in enumerate(G.simple_roots) if p not in J
    ]
    fixed: dict[int, Fraction] = {}
    free: list[int] = []
    for i, orbit in enumerate(orbits):
        mate = partners[i]
        if mate == i:
            fixed[i] = Fraction(c, 2)
        elif mate is None or mate > i:
            free.append(i)

    nu: list[Optional[Fraction]] = [None] * G.rank
    for i, value in fixed.items():
        for k in orbits[i]:
            nu[k] = value

    out: list[tuple[Fraction, ...]] = []

    def consistent() -> bool:
        for (k, l), _ in checks:
            if nu[k] is not None and nu[l] is not None and nu[k] - nu[l] <= 0:
                return False
        return True

    def assign(i: int, value: Optional[Fraction]) -> None:
        mate = partners[i]
        for k in orbits[i]:
            nu[k] = value
            if mate is not None and mate != i:
                nu[G.partner[k]] = None if value is None else c - value

    def search(depth: int) -> None:
        if depth == len(free):
            out.append(tuple(nu))
            return
        i = free[depth]
        size = len(orbits[i])
        for total in range(size * hi, size * lo - 1, -1):
            assign(i, Fraction(total, size))
            if consistent():
                search(depth + 1)
        assign(i, None)

    if consistent():
        search(0)
    return out


@log_duration("B(G, mu) enumeration")
def _enumerate(G: GroupDatum, mu: tuple[int, ...], pad: int) -> list[SigmaClass]:
    mu_bar = G.orbit_average(mu)
    kappa = G.kappa_map(mu)
    c = None if G.partner is None else int(G.similitude(mu))
    lo, hi = min(mu) - pad, max(mu) + pad

    classes: dict[tuple, SigmaClass] = {}
    for J in G.galois_stable_subsets():
        candidates = _newton_candidates(G, J, lo, hi, c)
        kept = 0
        for nu in candidates:
            if not G.leq_dominance(nu, mu_bar):
                continue
            lift = levi_lift(G, J, nu, kappa)
            if lift is None:
                continue
            cls = make_class(G, nu, kappa, lift=lift)
            classes.setdefault(cls.key, cls)
            kept += 1
        logger.debug(f"J={sorted(J)}: {len(candidates)} candidates, {kept} classes")
    return sorted(classes.values(), key=lambda cl: (-dot(G.rho, cl.nu), cl.nu))


def enumerate_BGmu(
    G: GroupDatum,
    mu: Sequence[int],
    window_pad: Optional[int] = None,
    check_stability: Optional[bool] = None,
) -> list[SigmaClass]:
    """
    All classes of B(G, mu), the mu-ordinary class first.

    Args:
        G: Group datum
        mu: Dominant cocharacter
        window_pad: Extra room B around the coordinate range of mu
        check_stability: Re-run with B + 2 and compare the class sets

    Raises:
        PreconditionError: mu not dominant
        EnumerationError: The class set changed when the window grew

    Example:
        >>> G = build_group("gl", 2, 1)
        >>> [c.nu for c in enumerate_BGmu(G, (1, 0))]
        [(Fraction(1, 1), Fraction(0, 1)), (Fraction(1, 2), Fraction(1, 2))]
    """
    settings = get_settings()
    pad = settings.window_pad if window_pad is None else window_pad
    stable = settings.check_stability if check_stability is None else check_stability
    mu = _check_mu(G, mu)

    classes = _enumerate(G, mu, pad)
    if stable:
        wider = _enumerate(G, mu, pad + 2)
        if [cl.key for cl in wider] != [cl.key for cl in classes]:
            raise EnumerationError(
                f"B(G, mu) for mu={mu} changed from {len(classes)} to {len(wider)} classes when the window grew"
            )
    logger.info(f"B({G}, {mu}) has {len(classes)} classes")
    return classes


def class_of_mu(G: GroupDatum, mu: Sequence[int]) -> SigmaClass:
    """The class of p^mu, the maximum of B(G, mu)."""
    return classify(translation(G, _check_mu(G, mu)))


def hasse_edges(classes: Sequence[SigmaClass]) -> list[tuple[int, int]]:
    """Covering relations (lower, upper) as index pairs."""
    return sorted(BGmuPoset(list(classes)).hasse.edges())


@dataclass
class BGmuPoset:
    """
    B(G, mu) as a partially ordered set.

    Attributes:
        classes: The classes, indexed as in the graphs
        order: Edge i -> j whenever classes[i] < classes[j]
        hasse: Transitive reduction of order
    """
    classes: list[SigmaClass]
    order: nx.DiGraph = field(init=False)
    hasse: nx.DiGraph = field(init=False)

    def __post_init__(self):
        groups = {c.group for c in self.classes}
        if len(groups) > 1:
            raise GroupMismatchError("poset classes belong to different groups")
        self.order = nx.DiGraph()
        self.order.add_nodes_from(range(len(self.classes)))
        for i, lower in enumerate(self.classes):
            for j, upper in enumerate(self.classes):
                if i != j and leq(lower, upper):
                    self.order.add_edge(i, j)
        self.hasse = nx.transitive_reduction(self.order)
        self.hasse.add_nodes_from(self.order.nodes)

    @classmethod
    def from_mu(cls, G: GroupDatum, mu: Sequence[int], **kwargs) -> "BGmuPoset":
        return cls(enumerate_BGmu(G, mu, **kwargs))

    def index_of(self, c: SigmaClass) -> int:
        for i, other in enumerate(self.classes):
            if other == c:
                return i
        raise PreconditionError(f"class with nu={c.nu} is not in this poset")

    def leq(self, i: int, j: int) -> bool:
        return i == j or self.order.has_edge(i, j)

    def interval(self, i: int, j: int) -> list[int]:
        """Indices k with classes[i] <= classes[k] <= classes[j]."""
        return [k for k in range(len(self.classes)) if self.leq(i, k) and self.leq(k, j)]

    def longest_chain_length(self, i: int, j: int) -> int:
        """Length of a longest chain from classes[i] up to classes[j]."""
        if not self.leq(i, j):
            raise PreconditionError(f"class {i} is not below class {j}")
        sub = self.order.subgraph(self.interval(i, j))
        return nx.dag_longest_path_length(sub)

    def basic_index(self) -> int:
        """The unique minimal element."""
        minimal = [k for k in self.order.nodes if self.order.in_degree(k) == 0]
        if len(minimal) != 1:
            raise EnumerationError(f"B(G, mu) has {len(minimal)} minimal elements")
        return minimal[0]

    def __len__(self) -> int:
        return len(self.classes)
