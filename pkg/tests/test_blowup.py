from fractions import Fraction

import pytest

from skewprod import (
    BlowupError,
    NewtonPolygon,
    a1_transform,
    a2_transform,
    case4_lattice_checks,
    classify,
    conjugate_pi1,
    conjugate_pi2,
    iterate_germ,
    newton_polygon,
    parse_poly,
)
from skewprod.blowup import transformed_polygon_matches
from conftest import germ


def test_pi1_g2_at_l1(germs):
    f = germs["g2"]
    rep = conjugate_pi1(f, 2)
    assert rep.exact and rep.truncation is None
    assert rep.transformed_q == parse_poly("z*w + z*w^2")
    assert rep.transformed is not None
    assert rep.all_checks_hold
    assert newton_polygon(rep.transformed_q).vertices == ((1, 1),)
    assert transformed_polygon_matches(f, 2, rep)


def test_pi1_g2_at_alpha(germs):
    rep = conjugate_pi1(germs["g2"], 3)
    assert rep.transformed_q == parse_poly("w + z*w^2")
    assert newton_polygon(rep.transformed_q).vertices == ((0, 1),)
    assert rep.all_checks_hold
    names = {c.name for c in rep.lemma_checks}
    assert "shift-zero-at-alpha" in names


def test_pi1_monomial_transforms_termwise():
    f = germ("z^3", "z^2*w^2")
    rep = conjugate_pi1(f, 1)
    assert rep.transformed_q == parse_poly("z*w^2")


def test_pi1_outside_interval_raises(germs):
    with pytest.raises(BlowupError):
        conjugate_pi1(germs["g2"], 4)
    with pytest.raises(BlowupError):
        conjugate_pi1(germs["g2"], 0)


def test_pi1_conjugacy_compatible_with_iteration(germs):
    for name, l in (("g2", 2), ("g2", 3), ("g6", 2)):
        f = germs[name]
        ft = conjugate_pi1(f, l).transformed
        lhs = iterate_germ(ft, 2)
        rhs = conjugate_pi1(iterate_germ(f, 2), l).transformed
        assert lhs == rhs, (name, l)


def test_pi1_nonmonomial_p_truncated_division():
    f = germ("z^2 + z^3", "z^3*w + z*w^2")
    rep = conjugate_pi1(f, 2, truncation=6)
    assert not rep.exact and rep.truncation == 6
    # q(z, z^2 c) = z^5 c + z^5 c^2; dividing by (z^2 + z^3)^2 gives
    # (zc + zc^2)(1 - 2z + 3z^2 - ...) up to the truncation degree
    expected = parse_poly(
        "z*w + z*w^2 - 2*z^2*w - 2*z^2*w^2 + 3*z^3*w + 3*z^3*w^2"
        " - 4*z^4*w - 4*z^4*w^2 + 5*z^5*w + 5*z^5*w^2 - 6*z^6*w - 6*z^6*w^2")
    assert rep.transformed_q == expected
    assert transformed_polygon_matches(f, 2, rep)


def test_pi2_g3(germs):
    f = germs["g3"]
    rep = conjugate_pi2(f, 1)
    assert rep.transformed_q == parse_poly("w^2 + z*w^2")
    assert rep.division_valid
    coeff, t_exp, w_exp = rep.first_component
    assert (coeff, t_exp, w_exp) == (1, 3, 1)
    assert rep.all_checks_hold


def test_pi2_monomial():
    f = germ("z^4", "z^2*w")
    rep = conjugate_pi2(f, 2)
    assert rep.transformed_q == parse_poly("z^2*w^5")
    coeff, t_exp, w_exp = rep.first_component
    # d~ = 2*2 + 1 = 5, first component t^{4-4} w^{2*(4-5)} is invalid
    assert (t_exp, w_exp) == (0, -2)
    assert not rep.division_valid


def test_pi2_requires_integer_inverse(germs):
    with pytest.raises(BlowupError):
        conjugate_pi2(germs["g4"], Fraction(2, 3))
    with pytest.raises(BlowupError):
        conjugate_pi2(germs["g4"], 0)


def test_two_stage_case4(germs):
    f = germs["g7"]
    case = classify(f)
    assert case.kind == "Case4"
    assert case.l1 == 2 and case.l2 == Fraction(1, 2)

    stage1 = conjugate_pi1(f, 2)
    assert stage1.exact and stage1.all_checks_hold
    assert stage1.transformed is not None
    mid = classify(stage1.transformed)
    assert mid.kind == "Case3"
    assert mid.t_next == 6  # l2^{-1} gamma~ + d

    stage2 = conjugate_pi2(stage1.transformed, 2)
    assert stage2.all_checks_hold
    assert newton_polygon(stage2.transformed_q).vertices == ((2, 6),)
    coeff, t_exp, w_exp = stage2.first_component
    assert t_exp == 7 - 2 * 2 and w_exp == 2 * (7 - 6)
    assert stage2.division_valid


def test_case4_lattice_checks(germs):
    for name in ("g4", "g6", "g7", "g8"):
        f = germs[name]
        for case in (c for c in (classify(f),) if c.kind == "Case4"):
            for check in case4_lattice_checks(f, case):
                assert check.holds, (name, check)


def test_case4_lattice_checks_rational_weights(germs):
    # g4 has l1 = 1/2 and l2 = 3/2: the germ-level lift is out of scope,
    # but the lattice transforms still straighten both edges
    f = germs["g4"]
    case = classify(f)
    checks = {c.name: c.holds for c in case4_lattice_checks(f, case)}
    assert checks == {
        "composite-image-dominates": True,
        "composite-corner-nonnegative": True,
        "prev-edge-maps-to-vertical": True,
        "next-edge-maps-to-horizontal": True,
    }


def test_composite_transform_images(germs):
    f = germs["g4"]
    case = classify(f)
    img = a2_transform(
        a1_transform((case.gamma, case.d), case.l1, case.delta), 1 / case.l2)
    hull = NewtonPolygon.from_points(
        [a2_transform(a1_transform(pt, case.l1, case.delta), 1 / case.l2)
         for pt in f.q.support()])
    assert hull.vertices == (img,)
