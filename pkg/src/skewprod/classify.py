"""Case classification of a skew germ by delta against the polygon intercepts.

With vertices (n_1, m_1) .. (n_s, m_s) and intercepts T_1 > ... > T_{s-1}:

  Case 1: s = 1; the unique vertex is the dominant bidegree (gamma, d).
  Case 2: s > 1 and delta <= T_{s-1}; (gamma, d) = (n_s, m_s).
  Case 3: s > 1 and T_1 <= delta; (gamma, d) = (n_1, m_1).
  Case 4: s > 2 and T_k <= delta <= T_{k-1} for some 2 <= k <= s-1;
          (gamma, d) = (n_k, m_k).

Boundary equalities delta = T_k can make several cases applicable at
once; the primary kind follows the fixed priority Case2, Case3, Case4,
and `case_variants` exposes every applicable reading so downstream
predictions can be checked against each of them.

The module also builds the weight intervals attached to each case, the
raw inequality systems that define them (kept separate so closed forms
can be property-tested against the definitions), and the induced affine
action R(l) = (gamma + l d) / delta on weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import INF, is_inf
from .germ import SkewGerm
from .growth import gamma_n
from .newton import NewtonPolygon, newton_polygon

CASE1 = "Case1"
CASE2 = "Case2"
CASE3 = "Case3"
CASE4 = "Case4"


@dataclass(frozen=True)
class Interval:
    """Exact interval with individually open/closed ends; upper may be INF."""

    lower: Fraction
    upper: object  # Fraction | INF
    lower_closed: bool = True
    upper_closed: bool = True

    def contains(self, l) -> bool:
        l = Fraction(l)
        if self.lower_closed:
            if l < self.lower:
                return False
        elif l <= self.lower:
            return False
        if is_inf(self.upper):
            return True
        if self.upper_closed:
            return l <= self.upper
        return l < self.upper

    def is_empty(self) -> bool:
        if is_inf(self.upper):
            return False
        if self.lower < self.upper:
            return False
        return not (self.lower == self.upper
                    and self.lower_closed and self.upper_closed)

    def sample_points(self):
        """Deterministic exact probes: closed endpoints plus a midpoint."""
        pts = []
        if self.lower_closed:
            pts.append(self.lower)
        if is_inf(self.upper):
            base = self.lower if self.lower_closed else self.lower + 1
            if base <= 0:
                base = Fraction(1)
            pts.extend([base, base + 1])
            for probe in (Fraction(1, 2), Fraction(1), Fraction(2)):
                if self.contains(probe):
                    pts.append(probe)
        else:
            if self.upper_closed:
                pts.append(self.upper)
            if self.lower < self.upper:
                pts.append((self.lower + self.upper) / 2)
        return sorted(set(Fraction(p) for p in pts))


@dataclass(frozen=True)
class CaseData:
    """Classification payload for one applicable case reading of a germ."""

    kind: str
    polygon: NewtonPolygon
    delta: int
    a_delta: object
    k: int  # 1-based index of the dominant vertex in the chain
    gamma: int
    d: int
    l1: Fraction
    l2: object  # Fraction | INF
    alpha: Fraction | None
    prev_vertex: tuple | None
    next_vertex: tuple | None
    t_prev: Fraction | None
    t_next: Fraction | None
    delta_eq_t_prev: bool
    delta_eq_t_next: bool
    applicable: tuple

    @property
    def s(self) -> int:
        return self.polygon.s

    @property
    def l1_plus_l2(self):
        if is_inf(self.l2):
            return INF
        return self.l1 + self.l2

    @property
    def dominant_may_vanish(self) -> bool:
        """The dominant term z^{gamma_n} can cancel: Case 2, d = 0 at the
        delta = T boundary is the only such configuration."""
        return self.kind == CASE2 and self.d == 0 and self.delta_eq_t_prev

    @property
    def next_term_may_vanish(self) -> bool:
        """The starred next-vertex term is a pure power of z and can cancel."""
        if self.next_vertex is None or not self.delta_eq_t_next:
            return False
        return self.kind in (CASE3, CASE4) and self.next_vertex[1] == 0

    @property
    def may_vanish(self) -> bool:
        return self.dominant_may_vanish or self.next_term_may_vanish


def _applicable_kinds(delta: int, polygon: NewtonPolygon) -> tuple:
    s = polygon.s
    if s == 1:
        return (CASE1,)
    kinds = []
    if delta <= polygon.intercept(s - 1):
        kinds.append(CASE2)
    if polygon.intercept(1) <= delta:
        kinds.append(CASE3)
    if s > 2 and _case4_indices(delta, polygon):
        kinds.append(CASE4)
    return tuple(kinds)


def _case4_indices(delta: int, polygon: NewtonPolygon) -> list:
    return [k for k in range(2, polygon.s)
            if polygon.intercept(k) <= delta <= polygon.intercept(k - 1)]


def _build(f: SkewGerm, polygon: NewtonPolygon, kind: str, k: int,
           applicable: tuple) -> CaseData:
    s = polygon.s
    gamma, d = polygon.vertex(k)
    prev_v = polygon.vertex(k - 1) if k >= 2 else None
    next_v = polygon.vertex(k + 1) if k <= s - 1 else None
    t_prev = polygon.intercept(k - 1) if k >= 2 else None
    t_next = polygon.intercept(k) if k <= s - 1 else None
    if kind == CASE1:
        l1, l2 = Fraction(0), INF
    elif kind == CASE2:
        l1 = Fraction(gamma - prev_v[0], prev_v[1] - d)
        l2 = INF
    elif kind == CASE3:
        l1 = Fraction(0)
        l2 = Fraction(next_v[0] - gamma, d - next_v[1])
    else:
        l1 = Fraction(gamma - prev_v[0], prev_v[1] - d)
        l2 = Fraction(next_v[0] - gamma, d - next_v[1]) - l1
    alpha = Fraction(gamma, f.delta - d) if f.delta != d else None
    return CaseData(
        kind=kind,
        polygon=polygon,
        delta=f.delta,
        a_delta=f.a_delta,
        k=k,
        gamma=gamma,
        d=d,
        l1=l1,
        l2=l2,
        alpha=alpha,
        prev_vertex=prev_v,
        next_vertex=next_v,
        t_prev=t_prev,
        t_next=t_next,
        delta_eq_t_prev=(t_prev is not None and t_prev == f.delta),
        delta_eq_t_next=(t_next is not None and t_next == f.delta),
        applicable=applicable,
    )


def classify(f: SkewGerm) -> CaseData:
    """Primary case of the germ (priority Case1, Case2, Case3, Case4)."""
    polygon = newton_polygon(f.q)
    applicable = _applicable_kinds(f.delta, polygon)
    s = polygon.s
    if s == 1:
        return _build(f, polygon, CASE1, 1, applicable)
    if CASE2 in applicable:
        return _build(f, polygon, CASE2, s, applicable)
    if CASE3 in applicable:
        return _build(f, polygon, CASE3, 1, applicable)
    k = _case4_indices(f.delta, polygon)[0]
    return _build(f, polygon, CASE4, k, applicable)


def case_variants(f: SkewGerm) -> tuple:
    """One CaseData per applicable reading, primary first.

    At a boundary delta = T_k two kinds (or two Case-4 vertex indices)
    can apply simultaneously; the attached claims all hold at once and
    are verified per variant.
    """
    polygon = newton_polygon(f.q)
    applicable = _applicable_kinds(f.delta, polygon)
    out = []
    if CASE1 in applicable:
        return (_build(f, polygon, CASE1, 1, applicable),)
    if CASE2 in applicable:
        out.append(_build(f, polygon, CASE2, polygon.s, applicable))
    if CASE3 in applicable:
        out.append(_build(f, polygon, CASE3, 1, applicable))
    if CASE4 in applicable:
        for k in _case4_indices(f.delta, polygon):
            out.append(_build(f, polygon, CASE4, k, applicable))
    return tuple(out)


# -- weight intervals ----------------------------------------------------


@dataclass(frozen=True)
class CaseFourRectangle:
    """The set of admissible pairs (l_(1), l_(1) + l_(2)) for Case 4.

    Exactly one of three closed forms, keyed by which boundary holds:
      first_fixed   (T_k < delta = T_{k-1}):  {l1} x (l1, l1+l2]
      interior      (T_k < delta < T_{k-1}):  [l1, alpha] x [alpha, l1+l2]
                                              minus the corner (alpha, alpha)
      second_fixed  (T_k = delta < T_{k-1}):  [l1, l1+l2) x {l1+l2}
    """

    shape: str
    first: Interval
    l1: Fraction
    l2: Fraction
    alpha: Fraction
    excluded_corner: tuple | None

    def second_of(self, l_first) -> Interval:
        """The interval of admissible l_(2) for a given l_(1)."""
        l_first = Fraction(l_first)
        if not self.first.contains(l_first):
            raise ValueError(f"l_(1) = {l_first} outside the first interval")
        top = self.l1 + self.l2
        if self.shape == "first_fixed":
            return Interval(Fraction(0), self.l2, lower_closed=False)
        if self.shape == "second_fixed":
            return Interval(top - l_first, top - l_first)
        if l_first < self.alpha:
            return Interval(self.alpha - l_first, top - l_first)
        return Interval(Fraction(0), top - self.alpha, lower_closed=False)

    def contains(self, l_first, l_sum) -> bool:
        """Membership of the pair (l_(1), l_(1) + l_(2))."""
        l_first, l_sum = Fraction(l_first), Fraction(l_sum)
        if not self.first.contains(l_first):
            return False
        return self.second_of(l_first).contains(l_sum - l_first)


@dataclass(frozen=True)
class WeightIntervals:
    """All weight sets attached to a case: the main set, and for Case 4
    also the staged first interval and the attraction-rate interval."""

    i_f: object  # Interval | CaseFourRectangle
    i_f1: Interval | None = None
    i_f_ar: Interval | None = None


def weight_intervals(case: CaseData) -> WeightIntervals:
    if case.kind == CASE1:
        return WeightIntervals(
            Interval(Fraction(0), INF, lower_closed=False, upper_closed=False))
    if case.kind == CASE2:
        if case.delta > case.d:
            return WeightIntervals(Interval(case.l1, case.alpha))
        return WeightIntervals(Interval(case.l1, INF, upper_closed=False))
    if case.kind == CASE3:
        if case.gamma > 0:
            return WeightIntervals(Interval(case.alpha, case.l2))
        return WeightIntervals(
            Interval(Fraction(0), case.l2, lower_closed=False))
    # Case 4
    l1, l2, alpha = case.l1, case.l2, case.alpha
    top = l1 + l2
    if case.delta_eq_t_prev:
        shape = "first_fixed"
        first = Interval(l1, l1)
        corner = (l1, l1)
    elif case.delta_eq_t_next:
        shape = "second_fixed"
        first = Interval(l1, top, upper_closed=False)
        corner = None
    else:
        shape = "interior"
        first = Interval(l1, alpha)
        corner = (alpha, alpha)
    rect = CaseFourRectangle(shape=shape, first=first, l1=l1, l2=l2,
                             alpha=alpha, excluded_corner=corner)
    return WeightIntervals(rect, i_f1=first, i_f_ar=Interval(l1, top))


def equality_interval(case: CaseData) -> Interval:
    """The weights l at which w_l(Q^n) = gamma_n + l d^n is asserted."""
    iv = weight_intervals(case)
    if case.kind == CASE4:
        return iv.i_f_ar
    return iv.i_f


# -- raw inequality systems (independent of the closed forms) ------------


def system_membership(f: SkewGerm, case: CaseData, l) -> bool:
    """Direct evaluation of the defining inequalities of the main weight
    set over the whole support, bypassing the closed forms."""
    l = Fraction(l)
    if l <= 0:
        return False
    gamma, d, delta = case.gamma, case.d, case.delta
    level = gamma + l * d
    if case.kind == CASE1:
        return True
    if case.kind == CASE2:
        if l * delta > level:
            return False
        return all(level <= i + l * j for i, j in f.q.support())
    if case.kind == CASE3:
        if level > l * delta:
            return False
        return all(level <= i + l * j for i, j in f.q.support())
    raise ValueError("Case 4 uses the staged systems")


def system_membership_case4_first(case: CaseData, l) -> bool:
    l = Fraction(l)
    if l <= 0:
        return False
    gamma, d, delta, k = case.gamma, case.d, case.delta, case.k
    level = gamma + l * d
    verts = case.polygon.vertices
    for idx, (n, m) in enumerate(verts, start=1):
        if idx <= k - 1 and level > n + l * m:
            return False
        if idx >= k + 1 and level >= n + l * m:
            return False
    return l * delta <= level


def system_membership_case4_second(f: SkewGerm, case: CaseData,
                                   l_first, l_second) -> bool:
    l_first, l_second = Fraction(l_first), Fraction(l_second)
    if l_second <= 0:
        return False
    gamma, d, delta = case.gamma, case.d, case.delta
    g_t = gamma + l_first * d - l_first * delta
    level = g_t + l_second * d
    if level > l_second * delta:
        return False
    for i, j in f.q.support():
        i_t = i + l_first * j - l_first * delta
        if level > i_t + l_second * j:
            return False
    return True


def system_membership_case4_ar(case: CaseData, l) -> bool:
    l = Fraction(l)
    if l <= 0:
        return False
    gamma, d, k = case.gamma, case.d, case.k
    level = gamma + l * d
    for idx, (n, m) in enumerate(case.polygon.vertices, start=1):
        if idx != k and level > n + l * m:
            return False
    return True


def system_membership_case4_pair(f: SkewGerm, case: CaseData,
                                 l_first, l_sum) -> bool:
    """Pair membership for the rectangle via the staged systems."""
    if not system_membership_case4_first(case, l_first):
        return False
    return system_membership_case4_second(f, case, l_first,
                                          Fraction(l_sum) - Fraction(l_first))


# -- the induced action on weights ---------------------------------------


def r_step(case: CaseData, l) -> Fraction:
    """R(l) = (gamma + l d) / delta."""
    return Fraction(Fraction(case.gamma) + Fraction(l) * case.d, case.delta)


def r_map(case: CaseData, l, n: int) -> Fraction:
    """R^n(l) by the closed form (gamma_n + l d^n) / delta^n; n = 0 is l."""
    if n < 0:
        raise ValueError("n must be non-negative")
    l = Fraction(l)
    if n == 0:
        return l
    g_n = gamma_n(case.delta, case.gamma, case.d, n)
    return Fraction(g_n + l * case.d**n, case.delta**n)
