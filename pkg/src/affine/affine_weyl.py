"""
Extended Affine Weyl Group
==========================
Elements x = p^lambda w of W~ = X_*(T) x| W with the Frobenius action,
the Iwahori-Matsumoto length for the anti-dominant base alcove, Newton and
Kottwitz points, the base-alcove stabiliser and the shortest element tau_mu
of a double coset W p^mu W.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np
from loguru import logger

from ..core.exceptions import EnumerationError, GroupMismatchError, PreconditionError
from ..groups.root_datum import GroupDatum, Perm, add, compose, invert, permute, scale
from ..groups.weyl import (
    enumerate_group,
    identity as weyl_identity,
    reflection_for_root,
    sigma_inverse_weyl,
    sigma_weyl,
    weyl_orbit,
)
from ..linalg.exact import dot


@dataclass(frozen=True)
class ExtAffElt:
    """
    The element p^translation * finite of W~.

    Attributes:
        group: Group datum
        translation: Cocharacter lambda (integer tuple)
        finite: Weyl element w (ambient permutation)
    """
    group: GroupDatum
    translation: tuple[int, ...]
    finite: Perm

    def __mul__(self, other: "ExtAffElt") -> "ExtAffElt":
        return multiply(self, other)

    def __repr__(self) -> str:
        return f"p^{self.translation}*{self.finite}"


def make_element(G: GroupDatum, translation: Sequence[int], finite: Optional[Perm] = None) -> ExtAffElt:
    """Validated constructor."""
    lam = G.check_cocharacter(translation)
    w = weyl_identity(G) if finite is None else tuple(finite)
    if sorted(w) != list(range(G.rank)):
        raise GroupMismatchError(f"{w} is not a permutation of {G.rank} coordinates")
    return ExtAffElt(G, lam, w)


def identity(G: GroupDatum) -> ExtAffElt:
    return ExtAffElt(G, (0,) * G.rank, weyl_identity(G))


def translation(G: GroupDatum, lam: Sequence[int]) -> ExtAffElt:
    """p^lambda"""
    return ExtAffElt(G, tuple(int(v) for v in lam), weyl_identity(G))


def from_weyl(G: GroupDatum, w: Perm) -> ExtAffElt:
    return ExtAffElt(G, (0,) * G.rank, w)


def _same_group(x: ExtAffElt, y: ExtAffElt) -> None:
    if x.group != y.group:
        raise GroupMismatchError(f"cannot combine elements of {x.group} and {y.group}")


def multiply(x: ExtAffElt, y: ExtAffElt) -> ExtAffElt:
    """(p^l1 w1)(p^l2 w2) = p^(l1 + w1 l2) w1 w2."""
    _same_group(x, y)
    return ExtAffElt(x.group, add(x.translation, permute(x.finite, y.translation)), compose(x.finite, y.finite))


def inverse(x: ExtAffElt) -> ExtAffElt:
    """(p^l w)^-1 = p^(-w^-1 l) w^-1."""
    w_inv = invert(x.finite)
    return ExtAffElt(x.group, tuple(-v for v in permute(w_inv, x.translation)), w_inv)


def sigma(x: ExtAffElt) -> ExtAffElt:
    """sigma(p^l w) = p^(gamma l) gamma w gamma^-1."""
    G = x.group
    return ExtAffElt(G, permute(G.galois, x.translation), sigma_weyl(G, x.finite))


def sigma_inverse(x: ExtAffElt) -> ExtAffElt:
    G = x.group
    return ExtAffElt(G, permute(invert(G.galois), x.translation), sigma_inverse_weyl(G, x.finite))


def sigma_conjugate(g: ExtAffElt, x: ExtAffElt) -> ExtAffElt:
    """g x sigma(g)^-1"""
    return multiply(multiply(g, x), inverse(sigma(g)))


def sigma_power_product(x: ExtAffElt, n: int) -> ExtAffElt:
    """x sigma(x) ... sigma^n(x)"""
    result, term = x, x
    for _ in range(n):
        term = sigma(term)
        result = multiply(result, term)
    return result


@lru_cache(maxsize=500_000)
def length(x: ExtAffElt) -> int:
    """
    Iwahori-Matsumoto length of x = p^lambda w.

    Sum over positive roots alpha of |<alpha, lambda>| when w^-1 alpha > 0
    and |<alpha, lambda> + 1| otherwise.

    Example:
        >>> G = build_group("gl", 2, 1)
        >>> length(translation(G, (1, 0)))
        1
    """
    G = x.group
    w_inv = invert(x.finite)
    total = 0
    for r in G.positive_roots:
        root = G.roots[r]
        a = dot(root.vector, x.translation)
        if G.act_on_root(w_inv, root).positive:
            total += abs(a)
        else:
            total += abs(a + 1)
    return int(total)


@lru_cache(maxsize=None)
def _inversion_table(G: GroupDatum) -> tuple[tuple[Perm, ...], np.ndarray]:
    """Elements of W and the matrix N[u, alpha] = [u^-1 alpha < 0] over positive roots."""
    elements = enumerate_group(G)
    table = np.zeros((len(elements), len(G.positive_roots)), dtype=np.int64)
    for i, u in enumerate(elements):
        u_inv = invert(u)
        for j, r in enumerate(G.positive_roots):
            if not G.act_on_root(u_inv, G.roots[r]).positive:
                table[i, j] = 1
    return elements, table


def coset_lengths(G: GroupDatum, lam: Sequence[int]) -> tuple[tuple[Perm, ...], np.ndarray]:
    """Lengths of p^lambda u for every u in W, vectorised over W."""
    elements, table = _inversion_table(G)
    pairings = np.array([int(dot(G.roots[r].vector, lam)) for r in G.positive_roots], dtype=np.int64)
    if pairings.size == 0:
        return elements, np.zeros(len(elements), dtype=np.int64)
    plus = np.abs(pairings)
    minus = np.abs(pairings + 1)
    return elements, plus.sum() + table @ (minus - plus)


def double_coset(G: GroupDatum, mu: Sequence[int]) -> list[tuple[ExtAffElt, int]]:
    """
    Every element of W p^mu W with its length, sorted by length.

    W p^mu W = {p^mu' u : mu' in W mu, u in W}.
    """
    out = []
    for lam in sorted(weyl_orbit(G, mu)):
        elements, lengths = coset_lengths(G, lam)
        out.extend((ExtAffElt(G, lam, u), int(l)) for u, l in zip(elements, lengths))
    out.sort(key=lambda pair: (pair[1], pair[0].translation, pair[0].finite))
    return out


@dataclass(frozen=True)
class TauMu:
    """tau_mu = x_mu p^mu, the shortest element of W p^mu W."""
    element: ExtAffElt
    x_mu: Perm
    length: int


@lru_cache(maxsize=None)
def _tau_mu(G: GroupDatum, mu: tuple[int, ...]) -> TauMu:
    best_length: Optional[int] = None
    winners: list[ExtAffElt] = []
    for lam in sorted(weyl_orbit(G, mu)):
        elements, lengths = coset_lengths(G, lam)
        m = int(lengths.min())
        hits = [ExtAffElt(G, lam, elements[i]) for i in np.flatnonzero(lengths == m)]
        if best_length is None or m < best_length:
            best_length, winners = m, hits
        elif m == best_length:
            winners.extend(hits)
    if len(winners) != 1:
        raise EnumerationError(f"W p^{mu} W has {len(winners)} elements of minimal length {best_length}")
    tau = winners[0]
    logger.debug(f"tau_mu for mu={mu}: {tau} (length {best_length})")
    return TauMu(element=tau, x_mu=tau.finite, length=best_length)


def tau_mu(G: GroupDatum, mu: Sequence[int]) -> TauMu:
    """
    Shortest element of W p^mu W, found by exhaustive scan.

    Raises:
        PreconditionError: mu not dominant
        EnumerationError: the minimum is not unique
    """
    mu = G.check_cocharacter(mu)
    if not G.is_dominant(mu):
        raise PreconditionError(f"{mu} is not dominant")
    return _tau_mu(G, mu)


def newton_point(x: ExtAffElt) -> tuple[Fraction, ...]:
    """
    Dominant Newton point of x.

    The translation part of (x sigma)^s is the sum of phi^k(lambda) with
    phi = w gamma, so nu is the average of lambda over each cycle of phi,
    made dominant.
    """
    G = x.group
    phi = compose(x.finite, G.galois)
    averaged = [Fraction(0)] * G.rank
    seen: set[int] = set()
    for start in range(G.rank):
        if start in seen:
            continue
        cycle, k = [], start
        while k not in seen:
            seen.add(k)
            cycle.append(k)
            k = phi[k]
        mean = Fraction(sum(x.translation[i] for i in cycle), len(cycle))
        for i in cycle:
            averaged[i] = mean
    nu, _ = G.dominantize(tuple(averaged))
    return nu


def kottwitz_point(x: ExtAffElt) -> tuple[int, ...]:
    """Image of the translation part in pi_1(G)_Gamma."""
    return x.group.kappa_map(x.translation)


def act_on_point(x: ExtAffElt, point: Sequence) -> tuple:
    """Affine action v -> lambda + w v."""
    return add(x.translation, permute(x.finite, point))


@lru_cache(maxsize=None)
def base_alcove_point(G: GroupDatum) -> tuple[Fraction, ...]:
    """
    An interior point of the base alcove -1 < <alpha, v> < 0 (alpha > 0).

    -rho^vee / (H + 1) with H the largest root height.
    """
    if not G.simple_roots:
        return tuple([Fraction(0)] * G.rank)
    rho_check = G._vector_sum(G.fund_coweights)
    top = max(G.height(G.roots[r]) for r in G.positive_roots)
    return scale(Fraction(-1, top + 1), rho_check)


def in_base_alcove(G: GroupDatum, point: Sequence) -> bool:
    return all(-1 < dot(G.roots[r].vector, point) < 0 for r in G.positive_roots)


def stabilizes_base_alcove(x: ExtAffElt) -> bool:
    """True iff x lies in Omega."""
    return in_base_alcove(x.group, act_on_point(x, base_alcove_point(x.group)))


def lattice_box(G: GroupDatum, radius: int) -> list[tuple[int, ...]]:
    """Lattice vectors with every ambient coordinate in [-radius, radius]."""
    out: list[tuple[int, ...]] = [()]
    for _ in range(G.rank):
        out = [v + (c,) for v in out for c in range(-radius, radius + 1)]
    return [v for v in out if G.satisfies_constraints(v)]


def omega_elements(G: GroupDatum, radius: int = 1) -> list[ExtAffElt]:
    """
    Elements p^lambda w, lambda in the ambient box, that map the base alcove
    to itself. Membership is decided by the action on a point of the alcove,
    not by the length function.
    """
    out = []
    for lam in lattice_box(G, radius):
        for u in enumerate_group(G):
            x = ExtAffElt(G, lam, u)
            if stabilizes_base_alcove(x):
                out.append(x)
    return out


def affine_simple_reflections(G: GroupDatum) -> list[ExtAffElt]:
    """Finite simple reflections plus p^(-theta^vee) s_theta per irreducible component."""
    gens = [from_weyl(G, s) for s in G.simple_reflections]
    for theta in G.highest_roots():
        gens.append(ExtAffElt(G, tuple(-c for c in theta.coroot), reflection_for_root(G, theta)))
    return gens


def random_element(G: GroupDatum, rng: random.Random, box: int = 2) -> ExtAffElt:
    """A random element with translation an integer combination of the lattice basis."""
    lam = [0] * G.rank
    for b in G.basis:
        c = rng.randint(-box, box)
        lam = [v + c * e for v, e in zip(lam, b)]
    elements = enumerate_group(G)
    return ExtAffElt(G, tuple(lam), elements[rng.randrange(len(elements))])


def two_rho_pairing(G: GroupDatum, vec: Sequence) -> Fraction:
    """<2 rho, vec>"""
    return 2 * dot(G.rho, vec)


def is_sigma_straight(x: ExtAffElt) -> bool:
    """l(x) = <2 rho, nu(x)>."""
    return length(x) == two_rho_pairing(x.group, newton_point(x))

