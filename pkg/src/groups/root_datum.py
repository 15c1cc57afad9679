"""
Root Data of the Unramified PEL Families
========================================
Explicit root data for Res GL_n, Res GSp_n and Res GU_n over an unramified
extension of degree d, realised inside the ambient lattice Z^(d x n).

Ambient coordinates are flat: slot tau, position i  ->  tau * n + i.
Cocharacters are integer tuples satisfying the group's constraint
functionals; weights are rational tuples read as functionals on them.
Permutations act on vectors by (w.v)[w[k]] = v[k].
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import networkx as nx
from loguru import logger

from ..core.exceptions import GroupDatumError, GroupMismatchError, LatticeConstraintError
from ..linalg.exact import (
    AbelianPresentation,
    apply_rows,
    dot,
    integer_kernel_basis,
    left_inverse,
    quotient_presentation,
    rational_inverse,
)

Vector = tuple
Perm = tuple[int, ...]


class GroupKind(str, Enum):
    """The three supported families."""
    RES_GL = "gl"
    RES_GSP = "gsp"
    RES_GU = "gu"


@dataclass(frozen=True)
class Root:
    """
    A root, identified with every ambient label that restricts to it.

    Attributes:
        index: Position in GroupDatum.roots
        label: Representative (smallest) ambient label (k, l), meaning e_k - e_l
        labels: All labels restricting to the same functional
        vector: Ambient functional e_k - e_l of the representative
        coroot: Coroot vector in X_*(T)
        positive: Whether the root is positive for the upper-triangular Borel
    """
    index: int
    label: tuple[int, int]
    labels: frozenset
    vector: Vector
    coroot: Vector
    positive: bool


def permute(perm: Perm, vec: Sequence) -> tuple:
    """Apply an index permutation to a vector: out[perm[k]] = vec[k]."""
    out = [None] * len(vec)
    for k, value in enumerate(vec):
        out[perm[k]] = value
    return tuple(out)


def compose(u: Perm, v: Perm) -> Perm:
    """Composition u after v."""
    return tuple(u[v[k]] for k in range(len(v)))


def invert(u: Perm) -> Perm:
    """Inverse permutation."""
    out = [0] * len(u)
    for k, image in enumerate(u):
        out[image] = k
    return tuple(out)


def add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> tuple:
    return tuple(c * a for a in v)


class GroupDatum:
    """
    A realised unramified group (kind, n, d) with its root datum.

    Build instances with build_group(), which validates and caches them.

    Attributes:
        kind: Group family
        n: Block rank
        d: Length of the Galois cycle
        rank: Ambient rank d * n
        galois: Permutation e_(tau, i) -> e_(tau + 1, i)
        partner: Index pairing from the similitude constraints (None for GL)
        constraints: Integer functionals cutting X_*(T) out of Z^rank
        basis: Z-basis of X_*(T)
        roots: All roots; positive_roots and simple_roots index into it
        cartan: Cartan matrix <alpha_i, alpha_j^vee> on simple roots
        fund_weights: Fundamental weights, inside the rational root span
        fund_coweights: Fundamental coweights, inside the rational coroot span
        rho: Half-sum of positive roots
        simple_orbits: Galois orbits of simple-root positions
        orbit_weights: Sum of fundamental weights over each orbit

    Example:
        >>> G = build_group("gl", 2, 1)
        >>> G.rho
        (Fraction(1, 2), Fraction(-1, 2))
    """

    def __init__(self, kind: GroupKind, n: int, d: int):
        self.kind = GroupKind(kind)
        self.n = n
        self.d = d
        self.rank = n * d

        self.galois: Perm = tuple(self.index((tau + 1) % d, i) for tau in range(d) for i in range(n))
        self.partner: Optional[Perm] = self._build_partner()
        self.constraints: list[Vector] = self._build_constraints()

        self.basis: list[Vector] = integer_kernel_basis(self.constraints, cols=self.rank)
        self._basis_inverse = left_inverse(self.basis)

        self.roots: list[Root] = []
        self.label_to_root: dict[tuple[int, int], int] = {}
        self._build_roots()
        self.positive_roots: list[int] = [r.index for r in self.roots if r.positive]

        self.simple_roots: list[int] = []
        for tau in range(d):
            for i in range(n - 1):
                root = self.label_to_root[(self.index(tau, i), self.index(tau, i + 1))]
                if root not in self.simple_roots:
                    self.simple_roots.append(root)
        self._simple_position = {r: p for p, r in enumerate(self.simple_roots)}

        self.simple_vectors = [self.roots[r].vector for r in self.simple_roots]
        self.simple_coroots = [self.roots[r].coroot for r in self.simple_roots]
        self.simple_reflections: list[Perm] = [self._reflection(self.roots[r]) for r in self.simple_roots]

        self.cartan = [
            [int(dot(a, c)) for c in self.simple_coroots]
            for a in self.simple_vectors
        ]
        self.fund_weights, self.fund_coweights = self._build_fundamentals()
        self.rho: Vector = scale(Fraction(1, 2), self._vector_sum(
            [self.roots[r].vector for r in self.positive_roots]))

        self.galois_simple: Perm = tuple(
            self._simple_position[self.label_to_root[(self.galois[k], self.galois[l])]]
            for k, l in (self.roots[r].label for r in self.simple_roots)
        )
        self.simple_orbits: list[tuple[int, ...]] = self._cycles(self.galois_simple)
        self.orbit_weights: list[Vector] = [
            self._vector_sum([self.fund_weights[p] for p in orbit]) for orbit in self.simple_orbits
        ]

        if self.simple_roots:
            self._coroot_solver = left_inverse(self.simple_coroots)
        else:
            self._coroot_solver = []
        self._presentations: dict[tuple, AbelianPresentation] = {}

        logger.debug(
            f"Built {self}: {len(self.roots)} roots, {len(self.simple_roots)} simple, "
            f"lattice rank {len(self.basis)}"
        )

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    def index(self, tau: int, i: int) -> int:
        """Flat index of e_(tau, i)."""
        return tau * self.n + i

    def slot(self, k: int) -> int:
        return k // self.n

    def position(self, k: int) -> int:
        return k % self.n

    def _build_partner(self) -> Optional[Perm]:
        n, d = self.n, self.d
        if self.kind is GroupKind.RES_GSP:
            return tuple(self.index(tau, n - 1 - i) for tau in range(d) for i in range(n))
        if self.kind is GroupKind.RES_GU:
            return tuple(self.index((tau + d // 2) % d, n - 1 - i) for tau in range(d) for i in range(n))
        return None

    def _build_constraints(self) -> list[Vector]:
        if self.partner is None:
            return []
        if self.kind is GroupKind.RES_GSP:
            pairs = [(self.index(tau, i), self.index(tau, self.n - 1 - i))
                     for tau in range(self.d) for i in range(self.n // 2)]
        else:
            pairs = [(self.index(tau, i), self.partner[self.index(tau, i)])
                     for tau in range(self.d // 2) for i in range(self.n)]
        base = pairs[0]
        constraints = []
        for k, l in pairs[1:]:
            row = [0] * self.rank
            for idx, sign in ((k, 1), (l, 1), (base[0], -1), (base[1], -1)):
                row[idx] += sign
            if any(row):
                constraints.append(tuple(row))
        return constraints

    def _build_roots(self) -> None:
        n = self.n
        labels = sorted(
            (self.index(tau, i), self.index(tau, j))
            for tau in range(self.d) for i in range(n) for j in range(n) if i != j
        )
        for label in labels:
            if label in self.label_to_root:
                continue
            k, l = label
            if self.partner is None:
                mate = label
            else:
                mate = (self.partner[l], self.partner[k])
            group = frozenset({label, mate})
            rep = min(group)
            vector = [0] * self.rank
            vector[rep[0]] += 1
            vector[rep[1]] -= 1
            coroot = list(vector)
            if mate != label:
                other = mate if rep == label else label
                coroot[other[0]] += 1
                coroot[other[1]] -= 1
            root = Root(
                index=len(self.roots),
                label=rep,
                labels=group,
                vector=tuple(vector),
                coroot=tuple(coroot),
                positive=self.position(rep[0]) < self.position(rep[1]),
            )
            self.roots.append(root)
            for lab in group:
                self.label_to_root[lab] = root.index

    def _reflection(self, root: Root) -> Perm:
        perm = list(range(self.rank))
        for k, l in root.labels:
            perm[k], perm[l] = l, k
        return tuple(perm)

    def _build_fundamentals(self) -> tuple[list[Vector], list[Vector]]:
        r = len(self.simple_roots)
        if r == 0:
            return [], []
        inv = rational_inverse(self.cartan)
        inv_t = rational_inverse([[self.cartan[j][i] for j in range(r)] for i in range(r)])
        weights = [
            self._vector_sum([scale(inv[i][j], self.simple_vectors[j]) for j in range(r)])
            for i in range(r)
        ]
        coweights = [
            self._vector_sum([scale(inv_t[i][j], self.simple_coroots[j]) for j in range(r)])
            for i in range(r)
        ]
        return weights, coweights

    def _vector_sum(self, vectors: Sequence[Sequence]) -> Vector:
        total = [Fraction(0)] * self.rank
        for v in vectors:
            for k, value in enumerate(v):
                total[k] += value
        return tuple(total)

    @staticmethod
    def _cycles(perm: Perm) -> list[tuple[int, ...]]:
        seen, cycles = set(), []
        for start in range(len(perm)):
            if start in seen:
                continue
            cycle, k = [], start
            while k not in seen:
                seen.add(k)
                cycle.append(k)
                k = perm[k]
            cycles.append(tuple(sorted(cycle)))
        return cycles

    # ------------------------------------------------------------------
    # lattice membership
    # ------------------------------------------------------------------

    def satisfies_constraints(self, vec: Sequence) -> bool:
        """True iff vec (integral or rational) lies in X_*(T) tensor Q."""
        return len(vec) == self.rank and all(dot(c, vec) == 0 for c in self.constraints)

    def check_cocharacter(self, vec: Sequence, rational: bool = False) -> Vector:
        """
        Validate and normalise a cocharacter.

        Args:
            vec: Ambient coordinates
            rational: Allow rational entries (Newton points)

        Returns:
            The vector as a tuple of ints (or Fractions when rational)

        Raises:
            GroupMismatchError: Wrong length
            LatticeConstraintError: Non-integral entry or violated constraint
        """
        if len(vec) != self.rank:
            raise GroupMismatchError(f"{self} expects {self.rank} coordinates, got {len(vec)}")
        if rational:
            out = tuple(Fraction(v) for v in vec)
        else:
            if any(Fraction(v).denominator != 1 for v in vec):
                raise LatticeConstraintError(f"cocharacter {tuple(vec)} has non-integral entries")
            out = tuple(int(v) for v in vec)
        if not self.satisfies_constraints(out):
            raise LatticeConstraintError(f"{tuple(vec)} violates the lattice constraints of {self}")
        return out

    def basis_coordinates(self, vec: Sequence) -> tuple[Fraction, ...]:
        """Coordinates of vec with respect to self.basis."""
        return apply_rows(self._basis_inverse, vec)

    def weights_equal(self, chi: Sequence, psi: Sequence) -> bool:
        """Two weights are equal iff they agree on a basis of X_*(T)."""
        return all(dot(chi, b) == dot(psi, b) for b in self.basis)

    def similitude(self, vec: Sequence) -> Optional[Fraction]:
        """
        The multiplier c(lambda) for PEL kinds, None for GL.

        Raises:
            LatticeConstraintError: If the index pairs disagree
        """
        if self.partner is None:
            return None
        if self.kind is GroupKind.RES_GSP:
            value = vec[self.index(0, 0)] + vec[self.index(0, self.n - 1)]
        else:
            value = vec[self.index(0, 0)] + vec[self.index(self.d // 2, self.n - 1)]
        for k in range(self.rank):
            if vec[k] + vec[self.partner[k]] != value:
                raise LatticeConstraintError(f"{tuple(vec)} has inconsistent similitude")
        return Fraction(value)

    # ------------------------------------------------------------------
    # pairings and actions
    # ------------------------------------------------------------------

    def pair(self, chi: Sequence, vec: Sequence) -> Fraction:
        """<chi, vec> for a weight chi and a (rational) cocharacter vec."""
        if len(chi) != self.rank or len(vec) != self.rank:
            raise GroupMismatchError(f"pairing arguments do not belong to {self}")
        return dot(chi, vec)

    def apply_galois(self, vec: Sequence, power: int = 1) -> tuple:
        """gamma^power applied to vec."""
        out = tuple(vec)
        step = self.galois if power >= 0 else invert(self.galois)
        for _ in range(abs(power) % self.d if self.d else 0):
            out = permute(step, out)
        return out

    def orbit_average(self, vec: Sequence) -> tuple[Fraction, ...]:
        """Galois-orbit average of vec."""
        total = [Fraction(0)] * self.rank
        for p in range(self.d):
            for k, value in enumerate(self.apply_galois(vec, p)):
                total[k] += value
        return tuple(v / self.d for v in total)

    def is_galois_invariant(self, vec: Sequence) -> bool:
        return tuple(self.apply_galois(vec)) == tuple(vec)

    def simple_pairings(self, vec: Sequence) -> list[Fraction]:
        """<alpha_i, vec> for every simple root."""
        return [dot(a, vec) for a in self.simple_vectors]

    def is_dominant(self, vec: Sequence) -> bool:
        return all(v >= 0 for v in self.simple_pairings(vec))

    def is_minuscule(self, vec: Sequence) -> bool:
        """All root pairings lie in {-1, 0, 1}."""
        return all(abs(dot(r.vector, vec)) <= 1 for r in self.roots if r.positive)

    def dominantize(self, vec: Sequence) -> tuple[tuple, Perm]:
        """
        Dominant representative of the W-orbit of vec.

        Returns:
            (vec_dom, w) with w . vec = vec_dom
        """
        current = tuple(vec)
        w: Perm = tuple(range(self.rank))
        while True:
            for p, alpha in enumerate(self.simple_vectors):
                if dot(alpha, current) < 0:
                    current = permute(self.simple_reflections[p], current)
                    w = compose(self.simple_reflections[p], w)
                    break
            else:
                return current, w

    def reflect(self, p: int, vec: Sequence) -> tuple:
        """s_p(vec) = vec - <alpha_p, vec> alpha_p^vee."""
        value = dot(self.simple_vectors[p], vec)
        return tuple(v - value * c for v, c in zip(vec, self.simple_coroots[p]))

    def root_of_label(self, k: int, l: int) -> Root:
        return self.roots[self.label_to_root[(k, l)]]

    def act_on_root(self, w: Perm, root: Root) -> Root:
        """The root w(alpha)."""
        k, l = root.label
        return self.root_of_label(w[k], w[l])

    # ------------------------------------------------------------------
    # coefficients, heights, components
    # ------------------------------------------------------------------

    def root_coefficients(self, root: Root) -> tuple[Fraction, ...]:
        """Coefficients of root in the basis of simple roots."""
        return tuple(dot(root.vector, cw) for cw in self.fund_coweights)

    def height(self, root: Root) -> int:
        return int(sum(self.root_coefficients(root)))

    def dynkin_components(self) -> list[tuple[int, ...]]:
        """Connected components of the Dynkin diagram, as simple positions."""
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self.simple_roots)))
        for i, row in enumerate(self.cartan):
            for j, value in enumerate(row):
                if i != j and value != 0:
                    graph.add_edge(i, j)
        return sorted(tuple(sorted(c)) for c in nx.connected_components(graph))

    def highest_roots(self) -> list[Root]:
        """The highest root of each irreducible component."""
        out = []
        for component in self.dynkin_components():
            inside = [
                self.roots[r] for r in self.positive_roots
                if all(c == 0 for p, c in enumerate(self.root_coefficients(self.roots[r])) if p not in component)
            ]
            out.append(max(inside, key=self.height))
        return out

    # ------------------------------------------------------------------
    # dominance order
    # ------------------------------------------------------------------

    def coroot_coefficients(self, vec: Sequence, simple_subset: Optional[Sequence[int]] = None) -> Optional[tuple[Fraction, ...]]:
        """
        Express vec as a rational combination of simple coroots.

        Args:
            vec: Rational ambient vector
            simple_subset: Restrict to these simple positions

        Returns:
            Coefficients (one per simple position, zero outside the subset),
            or None when vec is not in the span
        """
        r = len(self.simple_roots)
        subset = list(range(r)) if simple_subset is None else list(simple_subset)
        if not subset:
            return tuple([Fraction(0)] * r) if all(v == 0 for v in vec) else None
        if simple_subset is None:
            solver = self._coroot_solver
        else:
            solver = left_inverse([self.simple_coroots[p] for p in subset])
        partial = apply_rows(solver, vec)
        rebuilt = self._vector_sum([scale(c, self.simple_coroots[p]) for c, p in zip(partial, subset)])
        if tuple(rebuilt) != tuple(Fraction(v) for v in vec):
            return None
        coeffs = [Fraction(0)] * r
        for c, p in zip(partial, subset):
            coeffs[p] = c
        return tuple(coeffs)

    def leq_dominance(self, lower: Sequence, upper: Sequence) -> bool:
        """True iff upper - lower is a nonnegative rational sum of simple coroots."""
        coeffs = self.coroot_coefficients(sub(upper, lower))
        return coeffs is not None and all(c >= 0 for c in coeffs)

    # ------------------------------------------------------------------
    # fundamental groups
    # ------------------------------------------------------------------

    def integral_coordinates(self, vec: Sequence) -> tuple[int, ...]:
        coords = self.basis_coordinates(vec)
        if any(c.denominator != 1 for c in coords):
            raise LatticeConstraintError(f"{tuple(vec)} is not in X_*(T)")
        return tuple(int(c) for c in coords)

    def fundamental_group(self, levi: Optional[Sequence[int]] = None, coinvariants: bool = True) -> AbelianPresentation:
        """
        Presentation of pi_1(M_J) (optionally its Galois coinvariants).

        Args:
            levi: Simple positions J; None means all of them (M = G)
            coinvariants: Also quotient by (gamma - 1) X_*(T)
        """
        J = tuple(range(len(self.simple_roots))) if levi is None else tuple(sorted(levi))
        key = (J, coinvariants)
        if key not in self._presentations:
            relations = [self.integral_coordinates(self.simple_coroots[p]) for p in J]
            if coinvariants:
                relations += [
                    self.integral_coordinates(sub(self.apply_galois(b), b)) for b in self.basis
                ]
            self._presentations[key] = quotient_presentation(len(self.basis), relations)
        return self._presentations[key]

    def kappa_map(self, vec: Sequence, levi: Optional[Sequence[int]] = None) -> tuple[int, ...]:
        """Image of an integral cocharacter in pi_1(M_J)_Gamma."""
        return self.fundamental_group(levi).project(self.integral_coordinates(vec))

    # ------------------------------------------------------------------
    # Galois-stable subsets of simple roots
    # ------------------------------------------------------------------

    def is_galois_stable(self, J: Sequence[int]) -> bool:
        subset = set(J)
        return all(self.galois_simple[p] in subset for p in subset)

    def galois_stable_subsets(self) -> list[frozenset]:
        """Every Galois-stable subset of simple positions (unions of orbits)."""
        orbits = self.simple_orbits
        out = []
        for mask in range(1 << len(orbits)):
            out.append(frozenset(p for b, orbit in enumerate(orbits) if mask >> b & 1 for p in orbit))
        return out

    # ------------------------------------------------------------------

    @property
    def key(self) -> tuple[str, int, int]:
        return (self.kind.value, self.n, self.d)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroupDatum) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"{self.kind.value}(n={self.n},d={self.d})"


@lru_cache(maxsize=None)
def build_group(kind: str | GroupKind, n: int, d: int) -> GroupDatum:
    """
    Build (and cache) the root datum of a supported group.

    Args:
        kind: "gl", "gsp" or "gu"
        n: Block rank (even for gsp)
        d: Galois cycle length (even for gu)

    Raises:
        GroupDatumError: Invalid (kind, n, d)

    Example:
        >>> len(build_group("gsp", 4, 1).simple_roots)
        2
    """
    try:
        kind = GroupKind(kind)
    except ValueError as e:
        raise GroupDatumError(f"unknown group kind {kind!r}") from e
    if n < 1 or d < 1:
        raise GroupDatumError(f"n and d must be positive, got n={n}, d={d}")
    if kind is GroupKind.RES_GSP and n % 2:
        raise GroupDatumError(f"gsp requires n even, got n={n}")
    if kind is GroupKind.RES_GU and d % 2:
        raise GroupDatumError(f"gu requires d even, got d={d}")
    return GroupDatum(kind, n, d)


def pair(G: GroupDatum, chi: Sequence, vec: Sequence) -> Fraction:
    """Module-level form of GroupDatum.pair."""
    return G.pair(chi, vec)


def dominantize(G: GroupDatum, vec: Sequence) -> tuple[tuple, Perm]:
    """Module-level form of GroupDatum.dominantize."""
    return G.dominantize(vec)


def leq_dominance(G: GroupDatum, lower: Sequence, upper: Sequence) -> bool:
    """Module-level form of GroupDatum.leq_dominance."""
    return G.leq_dominance(lower, upper)


def pi1_coinvariants(G: GroupDatum) -> AbelianPresentation:
    """pi_1(G)_Gamma = X_*(T) / (coroot lattice + (gamma - 1) X_*(T))."""
    return G.fundamental_group()


def pi1(G: GroupDatum) -> AbelianPresentation:
    """pi_1(G) = X_*(T) / coroot lattice."""
    return G.fundamental_group(coinvariants=False)
