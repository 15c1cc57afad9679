"""
Defect and Chain Lengths
========================
The defect of a class measured through the Galois-orbit sums of
fundamental weights, an independent slope-bookkeeping oracle for Res GL,
and the lengths of maximal chains in B(G).
"""

from collections import Counter
from fractions import Fraction
from math import ceil

from loguru import logger

from ..core.exceptions import PreconditionError, VerificationError
from ..groups.root_datum import GroupKind, sub
from ..linalg.exact import dot
from .sigma_class import SigmaClass, leq


def _frac(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def orbit_pairings(c: SigmaClass) -> list[Fraction]:
    """<omega_O, lambda - nu> for each Galois orbit O of simple roots."""
    diff = sub(c.lift, c.nu)
    return [dot(w, diff) for w in c.group.orbit_weights]


def defect(c: SigmaClass) -> int:
    """
    2 * sum over orbits of the fractional part of <omega_O, lambda - nu>.

    Example:
        >>> G = build_group("gsp", 4, 1)
        >>> defect(enumerate_BGmu(G, (1, 1, 0, 0))[-1])
        1
    """
    value = 2 * sum(_frac(p) for p in orbit_pairings(c))
    if value.denominator != 1 or value < 0:
        raise VerificationError(f"defect of {c.nu} is not a nonnegative integer", "defect", None, value)
    return int(value)


def defect_oracle_resgl(c: SigmaClass) -> int:
    """
    rank G - rank J_b from the slopes of the underlying sigma^d-isocrystal.

    Each distinct slope s with multiplicity m (within one slot) contributes
    m / denominator(s) to the rank of J_b.

    Raises:
        PreconditionError: Not a Res GL group
    """
    G = c.group
    if G.kind is not GroupKind.RES_GL:
        raise PreconditionError(f"slope oracle needs a Res GL group, got {G}")
    slopes = Counter(G.d * c.nu[G.index(0, i)] for i in range(G.n))
    rank_J = sum(Fraction(m, Fraction(s).denominator) for s, m in slopes.items())
    if rank_J.denominator != 1:
        raise VerificationError(f"J_b rank {rank_J} is not integral", "rank_J", None, rank_J)
    return G.n - int(rank_J)


def rank_identity(c: SigmaClass) -> int:
    """#orbits - #{O : <omega_O, lambda - nu> integral}."""
    pairings = orbit_pairings(c)
    integral = sum(1 for p in pairings if p.denominator == 1)
    return len(pairings) - integral


def check_defect(c: SigmaClass) -> int:
    """Defect, asserted against the rank identity and (for Res GL) the slope oracle."""
    value = defect(c)
    ranks = rank_identity(c)
    if ranks != value:
        raise VerificationError(f"rank identity fails for {c.nu}", "defect", value, ranks)
    if c.group.kind is GroupKind.RES_GL:
        oracle = defect_oracle_resgl(c)
        if oracle != value:
            raise VerificationError(f"slope oracle disagrees for {c.nu}", "defect", oracle, value)
    return value


def orbit_ceiling_length(lower: SigmaClass, upper: SigmaClass) -> int:
    """
    Sum over Galois orbits of the ceiling of <omega_O, nu - nu'>.

    This counts maximal chains only when the upper class is the class of
    p^mu; for a fractional upper Newton point it overcounts.

    Raises:
        PreconditionError: lower is not below upper
    """
    if not leq(lower, upper):
        raise PreconditionError(f"{lower.nu} is not below {upper.nu}")
    diff = sub(upper.nu, lower.nu)
    return int(sum(ceil(dot(w, diff)) for w in upper.group.orbit_weights))


def chain_length(lower: SigmaClass, upper: SigmaClass) -> int:
    """
    Length of every maximal chain from lower to upper.

    <rho, nu - nu'> + (defect(lower) - defect(upper)) / 2. When upper is
    the class of p^mu this agrees with orbit_ceiling_length.

    Example:
        >>> G = build_group("gl", 3, 1)
        >>> top, mid, basic = enumerate_BGmu(G, (1, 1, 0))
        >>> chain_length(basic, mid), chain_length(basic, top)
        (1, 2)

    Raises:
        PreconditionError: lower is not below upper
        VerificationError: the value is not a nonnegative integer
    """
    if not leq(lower, upper):
        raise PreconditionError(f"{lower.nu} is not below {upper.nu}")
    value = dot(upper.group.rho, sub(upper.nu, lower.nu)) + Fraction(defect(lower) - defect(upper), 2)
    if value.denominator != 1 or value < 0:
        raise VerificationError(f"chain length {lower.nu} -> {upper.nu} is {value}", "chain_length", None, value)
    logger.debug(f"chain length {lower.nu} -> {upper.nu} = {value}")
    return int(value)
