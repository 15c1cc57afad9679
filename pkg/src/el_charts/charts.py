"""
Superbasic EL-Charts
====================
Finite combinatorial models for the superbasic EL case of Res GL_h over
an unramified extension of degree d. A chart is a subset A of d copies of
Z stable under f: a_(tau) -> (a + m_(tau+1))_(tau+1) and under +h; it is
stored as the cycle b_0, ..., b_(dh-1) through B = A - (A + h) together
with the flags eps_i (1 when b_i lies in B^-).

The maximal number of pairs (j, i) with b_j in B^-, b_i in B^+ and
b_j < b_i in the same copy is the dimension of the Rapoport-Zink space;
it agrees with the floor formula for every superbasic datum.

Hodge points use the lower-triangular convention here (zeros first);
to_upper_convention / to_lower_convention convert.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import floor, gcd
from typing import Iterator, Optional, Sequence

import pandas as pd
from loguru import logger
from tqdm import tqdm

from ..core.exceptions import PreconditionError, VerificationError
from ..groups.root_datum import build_group, sub
from ..linalg.exact import dot
from ..affine.affine_weyl import ExtAffElt
from ..utils.helpers import log_duration


@dataclass(frozen=True)
class ELChartParams:
    """
    Superbasic EL datum.

    Attributes:
        d: Degree of the unramified extension
        h: Height
        m_seq: (m_tau) for tau in Z/d, each in [0, h]
    """
    d: int
    h: int
    m_seq: tuple[int, ...]

    def __post_init__(self):
        if self.d < 1 or self.h < 1:
            raise PreconditionError(f"d and h must be positive, got d={self.d}, h={self.h}")
        if len(self.m_seq) != self.d:
            raise PreconditionError(f"m_seq needs {self.d} entries, got {len(self.m_seq)}")
        if any(not 0 <= m <= self.h for m in self.m_seq):
            raise PreconditionError(f"m_seq entries must lie in [0, {self.h}]: {self.m_seq}")
        if gcd(self.m, self.h) != 1:
            raise PreconditionError(f"m={self.m} and h={self.h} are not coprime")

    @property
    def m(self) -> int:
        return sum(self.m_seq)

    @property
    def slope(self) -> Fraction:
        """Constant Newton slope m / (d h)."""
        return Fraction(self.m, self.d * self.h)

    @classmethod
    def single(cls, d: int, h: int, m: int) -> "ELChartParams":
        """m spread over the slots, as evenly as possible with larger entries first."""
        q, r = divmod(m, d)
        return cls(d, h, tuple(q + 1 if tau < r else q for tau in range(d)))

    def f(self, slot: int, value: int) -> tuple[int, int]:
        nxt = (slot + 1) % self.d
        return nxt, value + self.m_seq[nxt]


@dataclass(frozen=True)
class ELChart:
    """
    A small EL-chart given by its cycle.

    Attributes:
        params: EL datum
        b0: Start of the cycle, in copy 0
        eps: Flags eps_i in {0, 1}, one per cycle position
    """
    params: ELChartParams
    b0: int
    eps: tuple[int, ...]

    def sequence(self) -> list[tuple[int, int]]:
        """(slot, value) of b_0, ..., b_dh (the last entry closes the cycle)."""
        p = self.params
        current = (0, self.b0)
        out = [current]
        for e in self.eps:
            slot, value = p.f(*current)
            current = (slot, value - p.h * e)
            out.append(current)
        return out

    @property
    def B(self) -> list[tuple[int, int]]:
        return self.sequence()[:-1]

    @property
    def B_minus(self) -> set[tuple[int, int]]:
        return {b for b, e in zip(self.B, self.eps) if e}

    @property
    def B_plus(self) -> set[tuple[int, int]]:
        return {b for b, e in zip(self.B, self.eps) if not e}

    def slot_values(self, slot: int) -> list[int]:
        return sorted(v for s, v in self.B if s == slot)

    def contains(self, slot: int, value: int) -> bool:
        """Membership in A = B + h Z_{>=0}."""
        h = self.params.h
        return any(value >= b and (value - b) % h == 0 for b in self.slot_values(slot))

    def translate(self, t: int) -> "ELChart":
        return ELChart(self.params, self.b0 + t, self.eps)


@dataclass
class ChartValidation:
    valid: bool
    normalized: bool
    diagnostics: list[str] = field(default_factory=list)


def validate(chart: ELChart) -> ChartValidation:
    """
    Check every defining property of a small EL-chart.

    Example:
        >>> chart = ELChart(ELChartParams(1, 2, (1,)), 0, (0, 1))
        >>> validate(chart).normalized
        True
    """
    p = chart.params
    diagnostics = []
    seq = chart.sequence()
    if len(chart.eps) != p.d * p.h or any(e not in (0, 1) for e in chart.eps):
        diagnostics.append("eps: needs d*h flags in {0, 1}")
        return ChartValidation(False, False, diagnostics)
    if seq[-1] != seq[0]:
        diagnostics.append(f"cycle: b_dh = {seq[-1]} differs from b_0 = {seq[0]}")
    B = seq[:-1]
    if len(set(B)) != len(B):
        diagnostics.append("distinct: the cycle repeats an element")
    for slot in range(p.d):
        values = chart.slot_values(slot)
        if len(values) != p.h:
            diagnostics.append(f"slot {slot}: {len(values)} elements instead of {p.h}")
        if len({v % p.h for v in values}) != len(values):
            diagnostics.append(f"slot {slot}: residues mod h repeat")
    if B and chart.b0 != min(chart.slot_values(0)):
        diagnostics.append("start: b_0 is not the minimum of copy 0")
    for slot, value in B:
        if not chart.contains(*p.f(slot, value)):
            diagnostics.append(f"f-stable: f({value}_{slot}) not in A")
        prev = (slot - 1) % p.d
        if not chart.contains(prev, value + p.h - p.m_seq[slot]):
            diagnostics.append(f"small: {value + p.h}_{slot} not in f(A)")
    for b, e in zip(B, chart.eps):
        slot, value = p.f(*b)
        if e and (slot, value - p.h) not in set(B):
            diagnostics.append(f"B-: f({b}) - h not in B")
        if not e and (slot, value) not in set(B):
            diagnostics.append(f"B+: f({b}) not in B")
    valid = not diagnostics
    normalized = valid and sum(chart.slot_values(0)) == p.h * (p.h - 1) // 2
    return ChartValidation(valid, normalized, diagnostics)


def hodge_point(chart: ELChart) -> tuple[int, ...]:
    """
    mu'_tau = (0 repeated #B+ in copy tau - 1, then 1 repeated #B- in copy tau - 1).

    Raises:
        PreconditionError: Invalid chart
    """
    if not validate(chart).valid:
        raise PreconditionError("hodge point of an invalid chart")
    p = chart.params
    out: list[int] = []
    for tau in range(p.d):
        prev = (tau - 1) % p.d
        minus = sum(1 for s, _ in chart.B_minus if s == prev)
        out.extend([0] * (p.h - minus) + [1] * minus)
    return tuple(out)


def to_upper_convention(mu: Sequence[int], h: int) -> tuple[int, ...]:
    """Reverse each block of h coordinates."""
    return tuple(v for tau in range(len(mu) // h) for v in reversed(mu[tau * h:(tau + 1) * h]))


def to_lower_convention(mu: Sequence[int], h: int) -> tuple[int, ...]:
    return to_upper_convention(mu, h)


def minuscule_hodge_point(params: ELChartParams) -> tuple[int, ...]:
    """The minuscule mu (lower convention) with m_tau ones in slot tau."""
    return tuple(
        v for m in params.m_seq for v in [0] * (params.h - m) + [1] * m
    )


def v_set(chart: ELChart) -> set[tuple[int, int]]:
    """Index pairs (j, i) with b_j in B-, b_i in B+ and b_j < b_i in the same copy."""
    B = chart.B
    out = set()
    for j, (slot_j, value_j) in enumerate(B):
        if not chart.eps[j]:
            continue
        for i, (slot_i, value_i) in enumerate(B):
            if not chart.eps[i] and slot_i == slot_j and value_j < value_i:
                out.add((j, i))
    return out


def v_count(chart: ELChart) -> int:
    return len(v_set(chart))


def _canonical(params: ELChartParams, b0: int, eps: tuple[int, ...]) -> Optional[ELChart]:
    """Translate to the normalized position and restart the cycle at the minimum of copy 0."""
    chart = ELChart(params, b0, eps)
    seq = chart.sequence()
    if seq[-1] != seq[0]:
        return None
    B = seq[:-1]
    h = params.h
    for slot in range(params.d):
        values = [v for s, v in B if s == slot]
        if len({v % h for v in values}) != len(values):
            return None
    total = sum(v for s, v in B if s == 0)
    shift, rest = divmod(h * (h - 1) // 2 - total, h)
    if rest:
        return None
    start = min(range(0, len(B), params.d), key=lambda i: B[i][1])
    n = len(eps)
    rotated = tuple(eps[(start + k) % n] for k in range(n))
    return ELChart(params, B[start][1] + shift, rotated)


def enumerate_charts(params: ELChartParams, mu: Optional[Sequence[int]] = None) -> list[ELChart]:
    """
    All normalized small EL-charts with Hodge point mu.

    Args:
        params: EL datum
        mu: Minuscule Hodge point in the lower convention; defaults to the
            one determined by m_seq

    Raises:
        PreconditionError: mu not minuscule or not matching m_seq

    Example:
        >>> len(enumerate_charts(ELChartParams(1, 2, (1,))))
        1
    """
    expected = minuscule_hodge_point(params)
    if mu is not None:
        mu = tuple(mu)
        if any(v not in (0, 1) for v in mu) or len(mu) != params.d * params.h:
            raise PreconditionError(f"{mu} is not a minuscule Hodge point for {params}")
        if mu != expected:
            raise PreconditionError(f"{mu} does not have m_tau = {params.m_seq} ones per slot")

    d, h = params.d, params.h
    per_slot = []
    for slot in range(d):
        positions = list(range(slot, d * h, d))
        ones = params.m_seq[(slot + 1) % d]
        per_slot.append(list(combinations(positions, ones)))

    seen: dict[tuple[int, tuple[int, ...]], ELChart] = {}
    for choice in product(*per_slot):
        eps = [0] * (d * h)
        for positions in choice:
            for i in positions:
                eps[i] = 1
        chart = _canonical(params, 0, tuple(eps))
        if chart is not None:
            seen.setdefault((chart.b0, chart.eps), chart)
    charts = sorted(seen.values(), key=lambda c: c.eps)
    logger.debug(f"{params}: {len(charts)} normalized small charts")
    return charts


def floor_formula_dim(params: ELChartParams) -> int:
    """Sum over Galois orbits of floor(<omega_O, mu - nu>) in Res GL_h."""
    G = build_group("gl", params.h, params.d)
    mu = to_upper_convention(minuscule_hodge_point(params), params.h)
    nu = tuple([params.slope] * (params.d * params.h))
    diff = sub(mu, nu)
    return sum(floor(dot(w, diff)) for w in G.orbit_weights)


def superbasic_rz_dim(params: ELChartParams, mu: Optional[Sequence[int]] = None) -> int:
    """
    max #V_A over the normalized small charts, checked against the floor formula.

    Raises:
        VerificationError: The two values differ
    """
    charts = enumerate_charts(params, mu)
    best = max((v_count(c) for c in charts), default=0)
    expected = floor_formula_dim(params)
    if best != expected:
        raise VerificationError(
            f"chart maximum differs from the floor formula for {params}", "dim", expected, best
        )
    return best


def superbasic_element(params: ELChartParams) -> ExtAffElt:
    """
    b(e_(tau, i)) = e_(tau, i + m_tau) with e_(tau, i + h) = p e_(tau, i), as p^lambda w.
    """
    G = build_group("gl", params.h, params.d)
    perm = [0] * G.rank
    lam = [0] * G.rank
    for tau, m in enumerate(params.m_seq):
        for i in range(params.h):
            lift, j = divmod(i + m, params.h)
            target = G.index(tau, j)
            perm[G.index(tau, i)] = target
            lam[target] = lift
    return ExtAffElt(G, tuple(lam), tuple(perm))


def admissible_params(h_max: int, d_max: int) -> Iterator[ELChartParams]:
    """Every superbasic datum with 2 <= h <= h_max and d <= d_max."""
    for d in range(1, d_max + 1):
        for h in range(2, h_max + 1):
            for m_seq in product(range(h + 1), repeat=d):
                if gcd(sum(m_seq), h) == 1:
                    yield ELChartParams(d, h, m_seq)


@log_duration("EL sweep")
def sweep(h_max: int, d_max: int, progress: bool = False) -> pd.DataFrame:
    """Chart maximum against the floor formula on every admissible datum."""
    rows = []
    params_list = list(admissible_params(h_max, d_max))
    for params in tqdm(params_list, desc="EL charts", disable=not progress):
        charts = enumerate_charts(params)
        best = max((v_count(c) for c in charts), default=0)
        expected = floor_formula_dim(params)
        rows.append({
            "d": params.d,
            "h": params.h,
            "m_seq": params.m_seq,
            "m": params.m,
            "charts": len(charts),
            "max_v": best,
            "floor_formula": expected,
            "agrees": best == expected,
        })
    frame = pd.DataFrame(rows)
    failures = int((~frame["agrees"]).sum()) if len(frame) else 0
    logger.info(f"EL sweep h<={h_max}, d<={d_max}: {len(frame)} data, {failures} disagreements")
    return frame
