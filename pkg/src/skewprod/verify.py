"""Run the brute-force iteration oracle against every prediction.

For each n up to n_max the oracle computes f^n exactly, reads off
c(Q^n), the orders, the Newton polygon and the sampled weights, and
compares them against the case analysis: weight equalities, rate
brackets with their exact strictness, adjacent-vertex identities, order
claims, vanishing events and the asymptotic-rate constants.  Boundary
germs admit several case readings at once; every applicable reading is
verified independently.

Every comparison is exact.  A failed check names the violated claim and
carries the oracle value; unproven statements (the dominant-coefficient
closed form) are reported as findings instead of failures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .classify import (
    CASE1,
    CASE2,
    CASE3,
    CaseData,
    case_variants,
    classify,
    equality_interval,
    r_map,
    r_step,
    system_membership,
    system_membership_case4_ar,
    system_membership_case4_first,
    system_membership_case4_pair,
    weight_intervals,
)
from .exact import format_exact
from .germ import SkewGerm, iterates
from .growth import gamma_n
from .newton import newton_polygon, weight
from .poly import ResourceCapError, ResourceLimits
from .predict import asymptotic, critical_coeff_sequence, predict


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one exact comparison; passed=None is informational."""

    claim: str
    passed: bool | None
    n: int | None = None
    detail: str = ""


@dataclass(frozen=True)
class OracleRecord:
    """Exact data read off the n-th iterate."""

    n: int
    germ: SkewGerm
    polygon: object
    c_qn: int
    ord_z: int
    ord_w: int
    c_pn: int
    c_fn: int
    delta_pow: int


@dataclass
class VariantReport:
    case: CaseData
    predictions: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    vanishing_first_n: int | None = None

    @property
    def failures(self) -> int:
        return sum(1 for c in self.checks if c.passed is False)


@dataclass
class VerificationReport:
    germ: SkewGerm
    n_max: int
    reached_n: int
    resource_error: str | None
    oracle: list
    variants: list

    @property
    def failures(self) -> int:
        return sum(v.failures for v in self.variants)

    @property
    def findings(self) -> list:
        out = []
        for v in self.variants:
            out.extend(f"{v.case.kind}[k={v.case.k}]: {msg}" for msg in v.findings)
        return out


def oracle_records(f: SkewGerm, n_max: int,
                   limits: ResourceLimits | None = None):
    """Iterate the germ, keeping every n that fits in the resource caps."""
    records = []
    error = None
    try:
        for n, fn in iterates(f, n_max, limits):
            c_qn, ord_z, ord_w = fn.q.orders()
            c_pn = min(i for i, _ in fn.p.support())
            records.append(OracleRecord(
                n=n,
                germ=fn,
                polygon=newton_polygon(fn.q),
                c_qn=c_qn,
                ord_z=ord_z,
                ord_w=ord_w,
                c_pn=c_pn,
                c_fn=min(c_pn, c_qn),
                delta_pow=f.delta**n,
            ))
    except ResourceCapError as exc:
        error = str(exc)
    return records, error


def verify_germ(f: SkewGerm, n_max: int, extra_ls=(),
                limits: ResourceLimits | None = None) -> VerificationReport:
    """Full exact verification of every applicable case reading."""
    records, error = oracle_records(f, n_max, limits)
    variants = [
        _verify_variant(f, case, records, tuple(Fraction(x) for x in extra_ls))
        for case in case_variants(f)
    ]
    return VerificationReport(
        germ=f,
        n_max=n_max,
        reached_n=records[-1].n if records else 0,
        resource_error=error,
        oracle=records,
        variants=variants,
    )


def _fmt(x) -> str:
    if isinstance(x, (int, Fraction)):
        return format_exact(x)
    return str(x)


def _verify_variant(f: SkewGerm, case: CaseData, records, extra_ls):
    rep = VariantReport(case=case)
    out = rep.checks.append

    interval = equality_interval(case)
    ls = list(interval.sample_points())
    outside = []
    for l in extra_ls:
        if interval.contains(l):
            if l not in ls:
                ls.append(l)
        else:
            outside.append(l)
    ls.sort()

    reached = records[-1].n if records else 0
    crit_seq = critical_coeff_sequence(f, reached) if (
        case.may_vanish and reached) else None
    crit_base = case.polygon.vertex(case.s)[0] if case.may_vanish else None

    for rec in records:
        n = rec.n
        crit_present = bool(crit_seq[n - 1]) if crit_seq else None
        pred = predict(f, case, n, ls=ls, critical_present=crit_present)
        rep.predictions.append(pred)
        Q = rec.germ.q
        dom = pred.dominant_bidegree
        dom_obs = Q.coeff(*dom)

        out(CheckResult("p-iterate-order", rec.c_pn == rec.delta_pow, n,
                        f"order(p^n) = {rec.c_pn}, delta^n = {rec.delta_pow}"))

        # Dominant term: presence is asserted whenever it cannot cancel.
        if case.dominant_may_vanish:
            out(CheckResult(
                "dominant-presence-conditional", None, n,
                f"coefficient of z^{dom[0]} w^{dom[1]} is {_fmt(dom_obs)}"))
        else:
            out(CheckResult(
                "dominant-term-presence", bool(dom_obs), n,
                f"coefficient of z^{dom[0]} w^{dom[1]} is {_fmt(dom_obs)}"))
            if dom_obs:
                agree = dom_obs == pred.dominant_coeff
                out(CheckResult(
                    "dominant-coefficient-closed-form", None, n,
                    f"observed {_fmt(dom_obs)}, closed form "
                    f"{_fmt(pred.dominant_coeff)}"))
                if not agree:
                    rep.findings.append(
                        f"n={n}: dominant coefficient {_fmt(dom_obs)} "
                        f"differs from closed form {_fmt(pred.dominant_coeff)}")

        # Critical pure-z coefficient: recursion must match the oracle.
        if crit_seq is not None:
            crit_deg = crit_base * case.delta ** (n - 1)
            obs = Q.coeff(crit_deg, 0)
            out(CheckResult(
                "critical-coefficient-recursion", obs == crit_seq[n - 1], n,
                f"z^{crit_deg}: oracle {_fmt(obs)}, "
                f"recursion {_fmt(crit_seq[n - 1])}"))
            if not obs:
                if rep.vanishing_first_n is None:
                    rep.vanishing_first_n = n
                rep.findings.append(f"vanishing event at n={n} (z^{crit_deg})")

        # Dominant vertex position.
        verts = rec.polygon.vertices
        pos = pred.dominant_position
        if pos == "only_vertex":
            out(CheckResult("dominant-only-vertex", verts == (dom,), n,
                            f"vertices {verts}"))
        elif pos == "min_y_vertex":
            out(CheckResult("dominant-min-y-vertex", verts[-1] == dom, n,
                            f"vertices {verts}, dominant {dom}"))
        elif pos == "min_x_vertex":
            out(CheckResult("dominant-min-x-vertex", verts[0] == dom, n,
                            f"vertices {verts}, dominant {dom}"))
        elif pos == "vertex":
            out(CheckResult("dominant-vertex", dom in verts, n,
                            f"vertices {verts}, dominant {dom}"))
        else:  # min_y_vertex_if_present
            if dom_obs:
                out(CheckResult("dominant-min-y-vertex", verts[-1] == dom, n,
                                f"vertices {verts}, dominant {dom}"))

        # Weight equalities on the sampled l values.
        for claim in pred.weight_claims:
            obs_w = weight(Q, claim.l)
            out(CheckResult(
                "weight-equality", obs_w == claim.value, n,
                f"w_{format_exact(claim.l)}(Q^n) = {format_exact(obs_w)}, "
                f"claimed {format_exact(claim.value)}"))
        for l in outside:
            out(CheckResult(
                "weight-sample-outside-range", None, n,
                f"w_{format_exact(l)}(Q^n) = "
                f"{format_exact(weight(Q, l))} (no claim)"))

        # Rate brackets.
        c = rec.c_qn
        cq = pred.cqn
        if cq.exact is not None:
            out(CheckResult("cqn-exact", c == cq.exact, n,
                            f"c(Q^n) = {c}, claimed {format_exact(cq.exact)}"))
        else:
            ok_lo = c > cq.lower if cq.lower_strict else c >= cq.lower
            ok_up = c < cq.upper if cq.upper_strict else c <= cq.upper
            rel_lo = ">" if cq.lower_strict else ">="
            rel_up = "<" if cq.upper_strict else "<="
            out(CheckResult("cqn-refined-lower", ok_lo, n,
                            f"c(Q^n) = {c} {rel_lo} {format_exact(cq.lower)}"))
            out(CheckResult("cqn-refined-upper", ok_up, n,
                            f"c(Q^n) = {c} {rel_up} {format_exact(cq.upper)}"))
        tb = pred.theorem_cqn
        out(CheckResult(
            "cqn-base-bracket", tb.lower <= c <= tb.upper, n,
            f"{format_exact(tb.lower)} <= {c} <= {format_exact(tb.upper)}"))

        out(CheckResult(
            "cfn-identity", rec.c_fn == min(rec.delta_pow, c), n,
            f"c(f^n) = {rec.c_fn}"))
        out(CheckResult(
            "cfn-bracket",
            pred.cfn_lower <= rec.c_fn <= pred.cfn_upper, n,
            f"{format_exact(pred.cfn_lower)} <= {rec.c_fn} <= "
            f"{format_exact(pred.cfn_upper)}"))

        # Order claims.
        if pred.ord_w_claim is not None:
            out(CheckResult("order-in-w", rec.ord_w == pred.ord_w_claim, n,
                            f"ord_w = {rec.ord_w}, claimed {pred.ord_w_claim}"))
        if pred.ord_z_claim is not None:
            out(CheckResult("order-in-z", rec.ord_z == pred.ord_z_claim, n,
                            f"ord_z = {rec.ord_z}, claimed {pred.ord_z_claim}"))

        # Adjacent vertices.
        for vc in (pred.prev_vertex, pred.next_vertex):
            if vc is None:
                continue
            name = f"{vc.side}-vertex"
            if dom not in verts:
                out(CheckResult(name, False, n,
                                f"dominant {dom} is not a vertex"))
                continue
            idx = verts.index(dom)
            adj_idx = idx - 1 if vc.side == "prev" else idx + 1
            ok_pos = 0 <= adj_idx < len(verts) and verts[adj_idx] == vc.point
            out(CheckResult(
                name, ok_pos, n,
                f"claimed {vc.tag} = {vc.point}, chain {verts}"))
            if ok_pos:
                px, py = vc.point
                slope = Fraction(py - dom[1], px - dom[0])
                out(CheckResult(
                    f"{vc.side}-vertex-slope",
                    slope == -1 / vc.edge_l, n,
                    f"slope {slope}, claimed -1/{format_exact(vc.edge_l)}"))
            out(CheckResult(
                f"{vc.side}-vertex-intercept-side",
                vc.intercept_identity_holds(dom, rec.delta_pow), n,
                f"delta^n = {rec.delta_pow} vs intercept of the "
                f"{vc.tag} edge"))

        # Slope inequalities at the dominant vertex.
        if pred.m_n_claim == "greater_than_M" and dom in verts:
            idx = verts.index(dom)
            if idx == 0:
                out(CheckResult("prev-slope-exceeds-base", True, n,
                                "no previous vertex (slope infinite)"))
            else:
                pv = verts[idx - 1]
                m_n = Fraction(pv[1] - dom[1], dom[0] - pv[0])
                out(CheckResult(
                    "prev-slope-exceeds-base", m_n > 1 / case.l1, n,
                    f"M_n = {format_exact(m_n)} vs 1/l1 = "
                    f"{format_exact(1 / case.l1)}"))
        elif pred.m_n_claim == "at_most_M" and dom in verts:
            idx = verts.index(dom)
            if idx == len(verts) - 1:
                out(CheckResult("next-slope-at-most-base", None, n,
                                "no next vertex (vacuous)"))
            else:
                nv = verts[idx + 1]
                m_n = Fraction(dom[1] - nv[1], nv[0] - dom[0])
                out(CheckResult(
                    "next-slope-at-most-base", m_n <= 1 / case.l2, n,
                    f"M_n = {format_exact(m_n)} vs 1/l2 = "
                    f"{format_exact(1 / case.l2)}"))

    # Variant-level claims over all computed n.
    if records:
        ar = asymptotic(f, case)
        observed = [(rec.n, rec.c_fn) for rec in records]
        out(CheckResult(
            "asymptotic-rate-bracket", ar.holds_for(observed), None,
            f"c_inf = {ar.c_infinity}, candidates "
            f"{[format_exact(x) for x in ar.d_candidates]}"))

        if case.kind == CASE2 and case.d > 0:
            base = weight_intervals(case).i_f
            for rec in records:
                if rec.n > 3:
                    break
                sub = classify(rec.germ)
                same = (sub.kind == CASE2
                        and weight_intervals(sub).i_f == base)
                out(CheckResult(
                    "interval-stability", same, rec.n,
                    f"iterate classified {sub.kind}"))

    _r_map_checks(case, ls, out)
    _slope_lemma_check(case, out)
    _interval_system_checks(f, case, out)
    return rep


def _r_map_checks(case: CaseData, ls, out, n_top: int = 10):
    if case.kind == CASE1:
        return
    interval = equality_interval(case)
    alpha = case.alpha
    for l in ls[:3]:
        seq = [Fraction(l)]
        for _ in range(n_top):
            seq.append(r_step(case, seq[-1]))
        closed_ok = all(r_map(case, l, n) == seq[n] for n in range(n_top + 1))
        out(CheckResult("r-map-closed-form", closed_ok, None,
                        f"l = {format_exact(l)}"))
        out(CheckResult(
            "r-map-stays-in-interval",
            all(interval.contains(v) for v in seq), None,
            f"l = {format_exact(l)}"))
        if case.kind == CASE2:
            mono = all(a <= b for a, b in zip(seq, seq[1:]))
        elif case.kind == CASE3:
            mono = all(a >= b for a, b in zip(seq, seq[1:]))
        else:
            if alpha is None or l == alpha:
                mono = all(v == seq[0] for v in seq)
            elif l < alpha:
                mono = all(a <= b <= alpha for a, b in zip(seq, seq[1:]))
            else:
                mono = all(a >= b >= alpha for a, b in zip(seq, seq[1:]))
        out(CheckResult("r-map-monotone", mono, None, f"l = {format_exact(l)}"))
        semi = all(
            r_map(case, l, a + b) == r_map(case, r_map(case, l, b), a)
            for a, b in ((1, 1), (1, 2), (2, 3)))
        out(CheckResult("r-map-semigroup", semi, None, f"l = {format_exact(l)}"))


def _slope_lemma_check(case: CaseData, out, n_top: int = 6):
    if case.gamma <= 0:
        return
    slopes = set()
    for n in range(1, n_top + 1):
        g_n = gamma_n(case.delta, case.gamma, case.d, n)
        slopes.add(Fraction(case.d**n - case.delta**n, g_n))
    out(CheckResult("iterate-anchor-slope-constant", len(slopes) == 1, None,
                    f"slopes {sorted(map(format_exact, slopes))}"))


def _probe_values(*anchors):
    offsets = (Fraction(0), Fraction(1, 7), Fraction(1, 2), Fraction(1))
    vals = {Fraction(1, 3), Fraction(1), Fraction(3)}
    for a in anchors:
        if a is None or not isinstance(a, (int, Fraction)):
            continue
        for off in offsets:
            for v in (a - off, a + off):
                if v > 0:
                    vals.add(Fraction(v))
    return sorted(vals)


def _interval_system_checks(f: SkewGerm, case: CaseData, out):
    iv = weight_intervals(case)
    if case.kind in (CASE1, CASE2, CASE3):
        probes = _probe_values(case.l1, case.l2 if case.kind == CASE3 else None,
                               case.alpha)
        ok = all(iv.i_f.contains(l) == system_membership(f, case, l)
                 for l in probes)
        out(CheckResult("interval-system-agreement", ok, None,
                        f"{len(probes)} probes"))
        return
    probes = _probe_values(case.l1, case.l1_plus_l2, case.alpha)
    ok_first = all(
        iv.i_f1.contains(l) == system_membership_case4_first(case, l)
        for l in probes)
    out(CheckResult("interval-system-agreement-first", ok_first, None,
                    f"{len(probes)} probes"))
    ok_ar = all(
        iv.i_f_ar.contains(l) == system_membership_case4_ar(case, l)
        for l in probes)
    out(CheckResult("interval-system-agreement-ar", ok_ar, None,
                    f"{len(probes)} probes"))
    pair_ok = True
    for x in probes[:6]:
        for y in probes[:6]:
            closed = iv.i_f.contains(x, y)
            raw = system_membership_case4_pair(f, case, x, y)
            if closed != raw:
                pair_ok = False
    out(CheckResult("interval-system-agreement-pairs", pair_ok, None,
                    "rectangle probes"))
