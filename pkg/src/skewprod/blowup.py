"""Monomial coordinate changes that straighten the Newton polygon.

pi1(z, c) = (z, z^l c) conjugates f to (p, q(z, z^l c) / p^l): on the
exponent lattice this is the shear (i, j) -> (i + l j - l delta, j).
pi2(t, w) = (t w^m, w) sends the second component to
sum b_ij t^i w^{m i + j}; the first component is generally a power
series of which only the leading monomial is represented.

Both are performed exactly when p is a monomial; otherwise the division
by p^l is a truncated power-series division with an explicit recorded
truncation degree.  Rational (non-integral) weights never reach germ
conjugation; they are handled on the lattice by the affine transforms
in the newton module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classify import CASE4, CaseData, classify
from .exact import as_coeff
from .germ import InvalidGermError, SkewGerm
from .newton import NewtonPolygon, a1_transform, a2_transform, newton_polygon
from .poly import SparsePoly2


class BlowupError(ValueError):
    """Inadmissible conjugation: non-integral weight or a genuine
    negative exponent left by the division (l outside the admissible
    interval, or invalid input)."""


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    holds: bool
    witness: tuple | None = None


@dataclass(frozen=True)
class BlowupReport:
    kind: str  # "pi1" | "pi2"
    parameter: int  # l for pi1, 1/l for pi2
    transformed_q: SparsePoly2
    transformed: SkewGerm | None  # skew germ when valid (pi1 only)
    invalid_reason: str | None
    first_component: tuple | None  # pi2: (coeff, t_exp, w_exp) leading monomial
    division_valid: bool
    exact: bool
    truncation: int | None
    lemma_checks: tuple

    @property
    def all_checks_hold(self) -> bool:
        return all(c.holds for c in self.lemma_checks)


def _series_inverse_z(unit_tail: dict, trunc: int) -> dict:
    """Coefficients of 1 / (1 + u(z)) up to z^trunc, u given as
    {degree: coeff} with all degrees >= 1."""
    inv = {0: Fraction(1)}
    if not unit_tail:
        return inv
    min_deg = min(unit_tail)
    power = {0: Fraction(1)}  # (-u)^t accumulated
    t = 0
    while (t + 1) * min_deg <= trunc:
        t += 1
        nxt: dict = {}
        for e1, c1 in power.items():
            for e2, c2 in unit_tail.items():
                e = e1 + e2
                if e > trunc:
                    continue
                nxt[e] = nxt.get(e, Fraction(0)) - c1 * c2
        power = nxt
        for e, c in power.items():
            inv[e] = inv.get(e, Fraction(0)) + c
    return {e: c for e, c in inv.items() if c}


def conjugate_pi1(f: SkewGerm, l: int,
                  truncation: int | None = None) -> BlowupReport:
    """Conjugate by pi1(z, c) = (z, z^l c) for a positive integer l.

    The second component becomes q(z, z^l c) / p(z)^l.  When p is a
    monomial the division is exact; otherwise it is a power-series
    division truncated at the given z-degree (default: the largest
    shifted z-exponent of the substituted polynomial).
    """
    if not isinstance(l, int) or l < 1:
        raise BlowupError(f"pi1 requires a positive integer weight, got {l!r}")
    delta, a = f.delta, f.a_delta
    shift = l * delta
    shifted = {}
    for (i, j), c in f.q.items():
        new_i = i + l * j - shift
        if new_i < 0:
            raise BlowupError(
                f"term z^{i} w^{j} maps to negative exponent {new_i}: "
                "l is outside the admissible interval or the input is invalid")
        shifted[(new_i, j)] = c

    p_is_monomial = len(f.p) == 1
    if p_is_monomial:
        scale = Fraction(1) / Fraction(a) ** l
        q_terms = {k: as_coeff(c * scale) for k, c in shifted.items()}
        exact = True
        trunc_used = None
    else:
        # p^l = a^l z^{l delta} (1 + u(z)); divide by the unit as a series.
        from .poly import poly_pow

        p_pow = poly_pow(f.p, l)
        lead = p_pow.coeff(shift, 0)
        unit_tail = {
            i - shift: Fraction(c) / lead
            for (i, _), c in p_pow.items() if i != shift
        }
        trunc_used = truncation
        if trunc_used is None:
            trunc_used = max(i for i, _ in shifted) if shifted else 0
        inv = _series_inverse_z(unit_tail, trunc_used)
        q_terms = {}
        for (i, j), c in shifted.items():
            base = Fraction(c) / lead
            for e, ic in inv.items():
                if i + e > trunc_used:
                    continue
                key = (i + e, j)
                v = q_terms.get(key, Fraction(0)) + base * ic
                if v:
                    q_terms[key] = v
                else:
                    q_terms.pop(key, None)
        q_terms = {k: as_coeff(v) for k, v in q_terms.items()}
        exact = False

    q_new = SparsePoly2(q_terms)
    transformed = None
    invalid_reason = None
    try:
        transformed = SkewGerm(f.p, q_new)
    except InvalidGermError as exc:
        invalid_reason = str(exc)

    checks = _pi1_lemma_checks(f, l, shifted)
    return BlowupReport(
        kind="pi1",
        parameter=l,
        transformed_q=q_new,
        transformed=transformed,
        invalid_reason=invalid_reason,
        first_component=None,
        division_valid=True,
        exact=exact,
        truncation=trunc_used,
        lemma_checks=checks,
    )


def _pi1_lemma_checks(f: SkewGerm, l, shifted: dict) -> tuple:
    """Inequalities on the shifted exponents: the image of the dominant
    vertex is the coordinatewise floor of the transformed support."""
    case = classify(f)
    l = Fraction(l)
    g_t = case.gamma + l * case.d - l * case.delta
    checks = [LemmaCheck("shifted-exponents-nonnegative",
                         all(i >= 0 for i, _ in shifted), None)]
    bad = next((pt for pt in shifted if pt[0] < g_t), None)
    checks.append(LemmaCheck("dominant-shift-minimal", bad is None, bad))
    checks.append(LemmaCheck("dominant-shift-nonnegative", g_t >= 0, None))
    if case.alpha is not None:
        if l < case.alpha:
            checks.append(LemmaCheck("shift-positive-below-alpha",
                                     g_t > 0, None))
        elif l == case.alpha:
            checks.append(LemmaCheck("shift-zero-at-alpha", g_t == 0, None))
    return tuple(checks)


def conjugate_pi2(f: SkewGerm, l_inv: int) -> BlowupReport:
    """Conjugate by pi2(t, w) = (t w^{l_inv}, w) for a positive integer
    l_inv = 1/l.

    The second component t^i w^{l_inv i + j} is exact.  The first
    component p(t w^{1/l}) / q(t w^{1/l}, w)^{1/l} is a power series;
    only its leading monomial is represented, with a validity flag for
    the division.
    """
    if not isinstance(l_inv, int) or l_inv < 1:
        raise BlowupError(
            f"pi2 requires a positive integer inverse weight, got {l_inv!r}")
    case = classify(f)
    q_terms = {(i, l_inv * i + j): c for (i, j), c in f.q.items()}
    q_new = SparsePoly2(q_terms)

    gamma, d, delta = case.gamma, case.d, case.delta
    d_t = l_inv * gamma + d
    t_exp = delta - l_inv * gamma
    w_exp = l_inv * (delta - d_t)
    division_valid = t_exp >= 0 and w_exp >= 0
    lead_coeff = as_coeff(
        Fraction(f.a_delta) / Fraction(f.q.coeff(gamma, d)) ** l_inv)

    checks = [
        LemmaCheck(
            "sheared-exponents-dominate",
            all(jj >= d_t for _, jj in q_new.support()),
            next(((i, j) for (i, j) in q_new.support() if j < d_t), None),
        )
    ]
    if gamma > 0:
        checks.append(LemmaCheck("shear-strictly-raises-order", d_t > d, None))
    else:
        checks.append(LemmaCheck("shear-fixes-order-at-zero-gamma",
                                 d_t == d, None))
    checks.append(LemmaCheck("first-component-exponents-nonnegative",
                             division_valid, None))

    return BlowupReport(
        kind="pi2",
        parameter=l_inv,
        transformed_q=q_new,
        transformed=None,
        invalid_reason="pi2 output is not a skew product",
        first_component=(lead_coeff, t_exp, w_exp),
        division_valid=division_valid,
        exact=True,
        truncation=None,
        lemma_checks=checks,
    )


def transformed_polygon_matches(f: SkewGerm, l, report: BlowupReport) -> bool:
    """The polygon of the conjugated second component equals the hull of
    the A1 images of the original support."""
    images = [a1_transform(pt, l, f.delta) for pt in f.q.support()]
    return newton_polygon(report.transformed_q) == NewtonPolygon.from_points(images)


def case4_lattice_checks(f: SkewGerm, case: CaseData) -> tuple:
    """Composite transform A = A2 . A1 on the lattice for a Case-4 germ.

    Works for rational weights too, since it never divides germs.  The
    image of every support point must dominate (gamma~, d~), the points
    on the edge toward the previous vertex must land on the vertical
    line x = gamma~, and those on the next edge on the horizontal line
    y = d~.
    """
    if case.kind != CASE4:
        raise ValueError("composite lattice checks apply to Case 4 only")
    l1, l2, delta = case.l1, case.l2, case.delta
    gamma, d = case.gamma, case.d

    def a_image(pt):
        return a2_transform(a1_transform(pt, l1, delta), 1 / l2)

    g_t, d_t = a_image((gamma, d))
    checks = []
    bad = next((pt for pt in f.q.support()
                if a_image(pt)[0] < g_t or a_image(pt)[1] < d_t), None)
    checks.append(LemmaCheck("composite-image-dominates", bad is None, bad))
    checks.append(LemmaCheck("composite-corner-nonnegative",
                             g_t >= 0 and d_t >= d, None))
    lvl_prev = gamma + l1 * d
    lvl_next = gamma + case.l1_plus_l2 * d
    bad_prev = next(
        (pt for pt in f.q.support()
         if pt[0] + l1 * pt[1] == lvl_prev and a_image(pt)[0] != g_t), None)
    checks.append(LemmaCheck("prev-edge-maps-to-vertical",
                             bad_prev is None, bad_prev))
    bad_next = next(
        (pt for pt in f.q.support()
         if pt[0] + case.l1_plus_l2 * pt[1] == lvl_next
         and a_image(pt)[1] != d_t), None)
    checks.append(LemmaCheck("next-edge-maps-to-horizontal",
                             bad_next is None, bad_next))
    return tuple(checks)
