"""
Ekedahl-Oort Truncation
=======================
Computes the pair (w, mu), w in ^{J_1}W with J_1 = sigma^-1(S_mu), attached
to an element b of the extended affine Weyl group, by the descending
sequence of parabolic double-coset reductions.

Each round records the element g it sigma-conjugates by, so the output
carries a certificate: applying the recorded conjugations to b yields
u_n b_n tau_mu.
"""

from dataclasses import dataclass, field
from typing import Iterable

from loguru import logger

from ..core.exceptions import EnumerationError
from ..groups.root_datum import GroupDatum, Perm, compose, invert
from ..groups.weyl import (
    enumerate_group,
    identity as weyl_identity,
    is_left_descent,
    length_finite,
    min_coset_rep,
    sigma_inverse_weyl,
    sigma_weyl,
    simple_reflection_index,
    stabilizer_simples,
)
from .affine_weyl import (
    ExtAffElt,
    from_weyl,
    inverse,
    length,
    multiply,
    sigma_conjugate,
    sigma_inverse,
    tau_mu,
)


@dataclass(frozen=True)
class TruncationStep:
    """One round of the reduction."""
    J: frozenset
    J_prime: frozenset
    delta: Perm
    u: Perm
    b: Perm


@dataclass(frozen=True)
class TruncationResult:
    """
    Output of eo_truncation.

    Attributes:
        w: The Weyl element of the truncation pair
        mu: Dominant cocharacter of the double coset
        iterations: Number of reduction rounds
        certificate: Elements g_0, g_1, ... sigma-conjugated by, in order
        steps: Per-round data
        J_1: sigma^-1(S_mu), w is minimal in its W_{J_1} coset
    """
    group: GroupDatum
    w: Perm
    mu: tuple[int, ...]
    iterations: int
    certificate: tuple[ExtAffElt, ...]
    steps: tuple[TruncationStep, ...] = field(default=())
    J_1: frozenset = frozenset()

    def element(self) -> ExtAffElt:
        """w tau_mu"""
        return multiply(from_weyl(self.group, self.w), tau_mu(self.group, self.mu).element)

    def endpoint(self) -> ExtAffElt:
        """u_n b_n tau_mu, the target of the certificate chain."""
        last = self.steps[-1]
        return multiply(from_weyl(self.group, compose(last.u, last.b)), tau_mu(self.group, self.mu).element)


def _map_simples(G: GroupDatum, J: Iterable[int], transform) -> frozenset:
    index = simple_reflection_index(G)
    out = set()
    for p in J:
        image = transform(G.simple_reflections[p])
        if image not in index:
            raise EnumerationError(f"simple reflection {p} is not mapped to a simple reflection")
        out.add(index[image])
    return frozenset(out)


def split_double_coset(G: GroupDatum, b: ExtAffElt, tau: ExtAffElt, S_mu: frozenset) -> tuple[Perm, Perm]:
    """
    Write b = w1 tau w2 with w2 in ^{S_mu}W and lengths adding up.

    Raises:
        EnumerationError: If b is not in W tau W
    """
    tau_inv = inverse(tau)
    target = length(b) - length(tau)
    for w1 in enumerate_group(G):
        y = multiply(tau_inv, multiply(from_weyl(G, invert(w1)), b))
        if any(y.translation):
            continue
        w2 = y.finite
        if any(is_left_descent(G, w2, p) for p in S_mu):
            continue
        if length_finite(G, w1) + length_finite(G, w2) == target:
            return w1, w2
    raise EnumerationError(f"{b} has no length-additive factorisation through {tau}")


def eo_truncation(b: ExtAffElt) -> TruncationResult:
    """
    Ekedahl-Oort truncation (w, mu) of b.

    Args:
        b: Element of the extended affine Weyl group

    Returns:
        TruncationResult with w in ^{J_1}W

    Raises:
        EnumerationError: If the reduction does not stabilise within |S| + 2 rounds

    Example:
        >>> G = build_group("gl", 2, 1)
        >>> eo_truncation(translation(G, (1, 0))).w
        (1, 0)
    """
    G = b.group
    mu, _ = G.dominantize(b.translation)
    tau = tau_mu(G, mu)
    x_mu = tau.x_mu
    x_mu_inv = invert(x_mu)
    S_mu = stabilizer_simples(G, mu)

    w1, w2 = split_double_coset(G, b, tau.element, S_mu)
    certificate = [sigma_inverse(from_weyl(G, w2))]
    b_current = compose(sigma_inverse_weyl(G, w2), w1)

    def twist(v: Perm) -> Perm:
        return compose(compose(x_mu, sigma_weyl(G, v)), x_mu_inv)

    J_1 = _map_simples(G, S_mu, lambda s: sigma_inverse_weyl(G, s))
    J, J_prime = J_1, _map_simples(G, S_mu, lambda s: compose(compose(x_mu, s), x_mu_inv))
    u = weyl_identity(G)
    steps = [TruncationStep(frozenset(range(len(G.simple_roots))), frozenset(range(len(G.simple_roots))), u, u, b_current)]

    cap = len(G.simple_roots) + 2
    for i in range(1, cap + 1):
        dec = min_coset_rep(G, b_current, J, side="double", K=J_prime)
        h = compose(compose(u, dec.left), invert(u))
        u = compose(u, dec.middle)
        b_current = compose(dec.right, twist(h))
        certificate.append(from_weyl(G, invert(h)))
        steps.append(TruncationStep(J, J_prime, dec.middle, u, b_current))

        u_inv = invert(u)
        index = simple_reflection_index(G)
        J_next = frozenset(
            p for p in J_prime
            if index.get(compose(compose(u, G.simple_reflections[p]), u_inv)) in J_1
        )
        J_prime_next = _map_simples(G, J_next, lambda s: twist(compose(compose(u, s), u_inv)))
        if J_next == J and J_prime_next == J_prime:
            logger.debug(f"truncation of {b}: w={u}, mu={mu} after {i} rounds")
            return TruncationResult(
                group=G,
                w=u,
                mu=mu,
                iterations=i,
                certificate=tuple(certificate),
                steps=tuple(steps),
                J_1=J_1,
            )
        J, J_prime = J_next, J_prime_next

    raise EnumerationError(f"truncation of {b} did not stabilise within {cap} rounds")


def replay_certificate(b: ExtAffElt, result: TruncationResult) -> ExtAffElt:
    """Apply the recorded sigma-conjugations to b."""
    y = b
    for g in result.certificate:
        y = sigma_conjugate(g, y)
    return y


def eo_stratum_dimension(result: TruncationResult) -> int:
    """Dimension l(w) of the Ekedahl-Oort stratum."""
    return length_finite(result.group, result.w)


def is_in_minimal_coset(result: TruncationResult) -> bool:
    """True iff w has no left descent in J_1."""
    return not any(is_left_descent(result.group, result.w, p) for p in result.J_1)
