"""
Length Oracle
=============
Word lengths in W~ = W_a x| Omega by breadth-first search over the simple
affine reflections, started from the elements of a box that stabilize the
base alcove.
"""

from collections import deque
from dataclasses import dataclass, field

from loguru import logger

from ..groups.root_datum import GroupDatum
from .affine_weyl import ExtAffElt, affine_simple_reflections, length, multiply, omega_elements


@dataclass
class OracleReport:
    """Outcome of comparing the closed length formula to BFS distances."""
    group: GroupDatum
    radius: int
    checked: int = 0
    mismatches: list[tuple[ExtAffElt, int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def bfs_length_ball(G: GroupDatum, radius: int, omega_box: int = 1) -> dict[ExtAffElt, int]:
    """
    Distances tau s_1 ... s_k -> k for tau in Omega, up to radius.

    Omega is read off the action on the base alcove, so the length formula
    is not used to seed the search.

    Cosets tau W_a are disjoint, so every reached element gets its
    distance from its own tau.
    """
    generators = affine_simple_reflections(G)
    sources = omega_elements(G, omega_box)
    dist = {tau: 0 for tau in sources}
    queue = deque(sources)
    while queue:
        x = queue.popleft()
        if dist[x] == radius:
            continue
        for s in generators:
            y = multiply(x, s)
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    logger.debug(f"BFS ball of radius {radius} in {G}: {len(dist)} elements")
    return dist


def check_length_oracle(G: GroupDatum, radius: int) -> OracleReport:
    """Compare length() with the BFS distance on the whole ball."""
    report = OracleReport(group=G, radius=radius)
    for x, d in bfs_length_ball(G, radius).items():
        report.checked += 1
        value = length(x)
        if value != d:
            report.mismatches.append((x, value, d))
    if report.passed:
        logger.info(f"length oracle passed on {report.checked} elements of {G}")
    else:
        logger.warning(f"length oracle: {len(report.mismatches)} mismatches in {G}")
    return report
