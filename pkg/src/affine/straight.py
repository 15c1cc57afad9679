"""
Straight and Fundamental Elements
=================================
x = p^lambda w acts together with sigma on affine roots (beta, k):

    (beta, k)  ->  (gamma w beta, k + <w beta, lambda>)

The Iwahori subgroup holds (beta, k) for k >= 0 when beta > 0 and k >= 1
when beta < 0. x is P-fundamental for a semistandard parabolic P = MN when
this map preserves the Iwahori part of M, shrinks the Iwahori part of N and
enlarges the one of the opposite unipotent.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from loguru import logger

from ..core.exceptions import EnumerationError, PreconditionError
from ..groups.root_datum import GroupDatum, Perm, Root, invert
from ..groups.weyl import enumerate_group, length_finite
from ..linalg.exact import dot
from .affine_weyl import (
    ExtAffElt,
    double_coset,
    kottwitz_point,
    length,
    newton_point,
    sigma_power_product,
    two_rho_pairing,
)
from .truncation import eo_truncation


@dataclass(frozen=True)
class Parabolic:
    """
    The semistandard parabolic v P_J v^-1.

    Attributes:
        v: Conjugating Weyl element
        J: Simple positions of the standard Levi
        levi_roots: Root indices of M
        unipotent_roots: Root indices of N
        opposite_roots: Root indices of the opposite unipotent
    """
    v: Perm
    J: frozenset
    levi_roots: frozenset
    unipotent_roots: frozenset
    opposite_roots: frozenset


def _in_standard_levi(G: GroupDatum, root: Root, J: frozenset) -> bool:
    coeffs = G.root_coefficients(root)
    return all(c == 0 for p, c in enumerate(coeffs) if p not in J)


@lru_cache(maxsize=None)
def semistandard_parabolics(G: GroupDatum) -> tuple[Parabolic, ...]:
    """Distinct v P_J v^-1, larger Levis first."""
    r = len(G.simple_roots)
    subsets = sorted(
        (frozenset(p for p in range(r) if mask >> p & 1) for mask in range(1 << r)),
        key=lambda J: (-len(J), sorted(J)),
    )
    seen = set()
    out = []
    for J in subsets:
        for v in enumerate_group(G):
            v_inv = invert(v)
            levi, unip, opp = set(), set(), set()
            for root in G.roots:
                back = G.act_on_root(v_inv, root)
                if _in_standard_levi(G, back, J):
                    levi.add(root.index)
                elif back.positive:
                    unip.add(root.index)
                else:
                    opp.add(root.index)
            key = (frozenset(levi), frozenset(unip))
            if key in seen:
                continue
            seen.add(key)
            out.append(Parabolic(v, J, frozenset(levi), frozenset(unip), frozenset(opp)))
    logger.debug(f"{len(out)} semistandard parabolics for {G}")
    return tuple(out)


def _k_min(root: Root) -> int:
    return 0 if root.positive else 1


def _affine_image(x: ExtAffElt, root: Root) -> tuple[Root, int]:
    """Image root and shifted lower bound of the Iwahori range of root."""
    G = x.group
    moved = G.act_on_root(x.finite, root)
    shift = dot(moved.vector, x.translation)
    return G.act_on_root(G.galois, moved), _k_min(root) + int(shift)


def is_P_fundamental(x: ExtAffElt, P: Parabolic) -> bool:
    G = x.group
    for index in P.levi_roots:
        image, low = _affine_image(x, G.roots[index])
        if image.index not in P.levi_roots or low != _k_min(image):
            return False
    for index in P.unipotent_roots:
        image, low = _affine_image(x, G.roots[index])
        if image.index not in P.unipotent_roots or low < _k_min(image):
            return False
    for index in P.opposite_roots:
        image, low = _affine_image(x, G.roots[index])
        if image.index not in P.opposite_roots or low > _k_min(image):
            return False
    return True


def fundamental_parabolic(x: ExtAffElt) -> Optional[Parabolic]:
    """A semistandard parabolic for which x is fundamental, or None."""
    return next((P for P in semistandard_parabolics(x.group) if is_P_fundamental(x, P)), None)


def is_fundamental(x: ExtAffElt) -> bool:
    """
    True iff x is P-fundamental for some semistandard parabolic P.

    Example:
        >>> G = build_group("gl", 2, 1)
        >>> is_fundamental(identity(G))
        True
    """
    return fundamental_parabolic(x) is not None


def straight_power_identity(x: ExtAffElt, max_power: int) -> bool:
    """l(x sigma(x) ... sigma^n(x)) = (n + 1) l(x) for every n <= max_power."""
    base = length(x)
    return all(length(sigma_power_product(x, n)) == (n + 1) * base for n in range(max_power + 1))


def fundamental_representative(G: GroupDatum, mu: Sequence[int], nu: Sequence, kappa: Sequence[int]) -> ExtAffElt:
    """
    The shortest fundamental element of W p^mu W in the class (nu, kappa).

    Raises:
        EnumerationError: No such element in the double coset
    """
    nu = tuple(Fraction(v) for v in nu)
    kappa = tuple(kappa)
    for x, _ in double_coset(G, mu):
        if newton_point(x) == nu and kottwitz_point(x) == kappa and is_fundamental(x):
            return x
    raise EnumerationError(f"no fundamental element of W p^{tuple(mu)} W with Newton point {nu}")


@dataclass(frozen=True)
class MinimalStratumRow:
    """Minimal Ekedahl-Oort stratum of one Newton stratum."""
    nu: tuple[Fraction, ...]
    element: ExtAffElt
    element_length: int
    eo_length: int
    central_leaf: Fraction

    @property
    def passed(self) -> bool:
        return self.eo_length == self.element_length == self.central_leaf


def minimal_eo_strata(G: GroupDatum, mu: Sequence[int], classes: Sequence) -> list[MinimalStratumRow]:
    """
    For each class, the truncation type of its fundamental representative.

    Its length should equal l(x) = <2 rho, nu>, the dimension of a central leaf.

    Raises:
        PreconditionError: mu not minuscule
    """
    mu = G.check_cocharacter(mu)
    if not G.is_minuscule(mu):
        raise PreconditionError(f"{mu} is not minuscule")
    rows = []
    for c in classes:
        x = fundamental_representative(G, mu, c.nu, c.kappa)
        result = eo_truncation(x)
        rows.append(MinimalStratumRow(
            nu=c.nu,
            element=x,
            element_length=length(x),
            eo_length=length_finite(G, result.w),
            central_leaf=two_rho_pairing(G, c.nu),
        ))
    failures = [row for row in rows if not row.passed]
    if failures:
        logger.warning(f"{len(failures)} minimal EO strata disagree with the central leaf dimension")
    return rows
