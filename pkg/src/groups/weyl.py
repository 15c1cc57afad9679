"""
Finite Weyl Group
=================
Elements of W are permutations of the ambient coordinates (tuples), acting
by (w.v)[w[k]] = v[k]. Reduced words are computed on demand by stripping
descents; lengths count inverted positive roots.
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal, Optional, Sequence

from loguru import logger

from ..core.exceptions import EnumerationError, PreconditionError
from .root_datum import GroupDatum, Perm, Root, compose, invert, permute

Side = Literal["left", "right"]


def identity(G: GroupDatum) -> Perm:
    return tuple(range(G.rank))


def multiply(u: Perm, v: Perm) -> Perm:
    """Product u v (apply v first)."""
    return compose(u, v)


def inverse(u: Perm) -> Perm:
    return invert(u)


def act(w: Perm, vec: Sequence) -> tuple:
    """w . vec"""
    return permute(w, vec)


@lru_cache(maxsize=200_000)
def length_finite(G: GroupDatum, w: Perm) -> int:
    """Number of positive roots sent to negative roots."""
    return sum(
        1 for r in G.positive_roots
        if not G.act_on_root(w, G.roots[r]).positive
    )


def is_root_negative_under(G: GroupDatum, w: Perm, root: Root) -> bool:
    return not G.act_on_root(w, root).positive


def is_left_descent(G: GroupDatum, w: Perm, p: int) -> bool:
    """l(s_p w) < l(w), i.e. w^-1(alpha_p) < 0."""
    return is_root_negative_under(G, invert(w), G.roots[G.simple_roots[p]])


def is_right_descent(G: GroupDatum, w: Perm, p: int) -> bool:
    """l(w s_p) < l(w), i.e. w(alpha_p) < 0."""
    return is_root_negative_under(G, w, G.roots[G.simple_roots[p]])


def reduced_word(G: GroupDatum, w: Perm) -> list[int]:
    """
    A reduced word [p1, p2, ...] with w = s_p1 s_p2 ...

    Example:
        >>> G = build_group("gl", 3, 1)
        >>> reduced_word(G, word_to_element(G, [0, 1]))
        [0, 1]
    """
    word = []
    current = w
    while True:
        p = next((q for q in range(len(G.simple_roots)) if is_left_descent(G, current, q)), None)
        if p is None:
            return word
        word.append(p)
        current = compose(G.simple_reflections[p], current)


def word_to_element(G: GroupDatum, word: Iterable[int]) -> Perm:
    w = identity(G)
    for p in word:
        w = compose(w, G.simple_reflections[p])
    return w


@lru_cache(maxsize=None)
def simple_reflection_index(G: GroupDatum) -> dict[Perm, int]:
    """Map from simple reflection permutations to their simple positions."""
    return {s: p for p, s in enumerate(G.simple_reflections)}


def reflection_for_root(G: GroupDatum, root: Root) -> Perm:
    """The reflection s_alpha as an ambient permutation."""
    perm = list(range(G.rank))
    for k, l in root.labels:
        perm[k], perm[l] = l, k
    return tuple(perm)


def sigma_weyl(G: GroupDatum, w: Perm) -> Perm:
    """Frobenius action gamma w gamma^-1."""
    return compose(compose(G.galois, w), invert(G.galois))


def sigma_inverse_weyl(G: GroupDatum, w: Perm) -> Perm:
    return compose(compose(invert(G.galois), w), G.galois)


@lru_cache(maxsize=None)
def parabolic_subgroup(G: GroupDatum, J: frozenset) -> tuple[Perm, ...]:
    """All elements of W_J, in breadth-first order from the identity."""
    start = identity(G)
    seen = {start}
    order = [start]
    queue = deque([start])
    generators = [G.simple_reflections[p] for p in sorted(J)]
    while queue:
        w = queue.popleft()
        for s in generators:
            nxt = compose(w, s)
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    return tuple(order)


def enumerate_group(G: GroupDatum) -> tuple[Perm, ...]:
    """Every element of W."""
    elements = parabolic_subgroup(G, frozenset(range(len(G.simple_roots))))
    logger.debug(f"|W| = {len(elements)} for {G}")
    return elements


def longest_element(G: GroupDatum, J: Optional[frozenset] = None) -> Perm:
    elements = enumerate_group(G) if J is None else parabolic_subgroup(G, J)
    return max(elements, key=lambda w: length_finite(G, w))


def weyl_orbit(G: GroupDatum, vec: Sequence) -> set[tuple]:
    """The W-orbit of a (rational) cocharacter."""
    start = tuple(vec)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for s in G.simple_reflections:
            nxt = permute(s, v)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


@dataclass(frozen=True)
class CosetDecomposition:
    """
    Factorisation of a Weyl group element along parabolic subgroups.

    left: x = left * middle, with middle the shortest element of W_J x
    right: x = middle * right, with middle the shortest element of x W_J
    double: x = left * middle * right with left in W_J, middle the shortest
        element of W_J x W_K and right in W_K shortest in W_K' right, where
        K' = {s in K : middle s middle^-1 in J}

    Lengths add up: l(x) = l(left) + l(middle) + l(right).
    """
    side: str
    left: Perm
    middle: Perm
    right: Perm
    K_prime: frozenset = frozenset()

    def product(self) -> Perm:
        return compose(compose(self.left, self.middle), self.right)


def _strip_left(G: GroupDatum, x: Perm, J: frozenset) -> tuple[Perm, Perm]:
    """Return (a, y) with x = a y, a in W_J, y without left J-descents."""
    a, y = identity(G), x
    while True:
        p = next((q for q in sorted(J) if is_left_descent(G, y, q)), None)
        if p is None:
            return a, y
        s = G.simple_reflections[p]
        a, y = compose(a, s), compose(s, y)


def _strip_right(G: GroupDatum, x: Perm, K: frozenset) -> tuple[Perm, Perm]:
    """Return (y, b) with x = y b, b in W_K, y without right K-descents."""
    y, b = x, identity(G)
    while True:
        p = next((q for q in sorted(K) if is_right_descent(G, y, q)), None)
        if p is None:
            return y, b
        s = G.simple_reflections[p]
        y, b = compose(y, s), compose(s, b)


def conjugate_simples(G: GroupDatum, u: Perm, K: Iterable[int]) -> dict[int, Optional[int]]:
    """For each simple position p in K: the simple position of u s_p u^-1, or None."""
    index = simple_reflection_index(G)
    u_inv = invert(u)
    return {p: index.get(compose(compose(u, G.simple_reflections[p]), u_inv)) for p in K}


def min_coset_rep(
    G: GroupDatum,
    w: Perm,
    J: Iterable[int],
    side: Literal["left", "right", "double"] = "left",
    K: Optional[Iterable[int]] = None,
) -> CosetDecomposition:
    """
    Minimal coset representative of w for W_J (and W_K).

    Args:
        G: Group datum
        w: Weyl element
        J: Simple positions of the left (or only) parabolic
        side: "left" for W_J w, "right" for w W_J, "double" for W_J w W_K
        K: Simple positions of the right parabolic (double only)

    Returns:
        CosetDecomposition with verified length additivity

    Example:
        >>> G = build_group("gl", 3, 1)
        >>> dec = min_coset_rep(G, word_to_element(G, [0, 1]), {0})
        >>> reduced_word(G, dec.middle)
        [1]
    """
    J = frozenset(J)
    e = identity(G)
    if side == "left":
        a, y = _strip_left(G, w, J)
        result = CosetDecomposition("left", a, y, e)
    elif side == "right":
        y, b = _strip_right(G, w, J)
        result = CosetDecomposition("right", e, y, b)
    elif side == "double":
        K = frozenset(K or ())
        a, y = identity(G), w
        b = identity(G)
        while True:
            a1, y = _strip_left(G, y, J)
            y, b1 = _strip_right(G, y, K)
            a, b = compose(a, a1), compose(b1, b)
            if a1 == e and b1 == e:
                break
        u = y
        images = conjugate_simples(G, u, K)
        K_prime = frozenset(p for p, q in images.items() if q is not None and q in J)
        b_inner, b_outer = _strip_left(G, b, K_prime)
        left = compose(compose(compose(a, u), b_inner), invert(u))
        result = CosetDecomposition("double", left, u, b_outer, K_prime)
    else:
        raise PreconditionError(f"unknown coset side {side!r}")

    if result.product() != w:
        raise EnumerationError("coset decomposition does not multiply back to the input")
    total = sum(length_finite(G, part) for part in (result.left, result.middle, result.right))
    if total != length_finite(G, w):
        raise EnumerationError(f"coset decomposition of {w} is not length-additive")
    return result


def stabilizer_simples(G: GroupDatum, mu: Sequence) -> frozenset:
    """
    S_mu = {s_alpha : <alpha, mu> = 0} for dominant mu.

    Raises:
        PreconditionError: mu not dominant
    """
    pairings = G.simple_pairings(mu)
    if any(v < 0 for v in pairings):
        raise PreconditionError(f"{tuple(mu)} is not dominant")
    return frozenset(p for p, v in enumerate(pairings) if v == 0)


def in_parabolic(G: GroupDatum, w: Perm, J: frozenset) -> bool:
    """True iff w lies in W_J."""
    return all(p in J for p in reduced_word(G, w))
