import pytest

from skewprod import (
    GermFileError,
    InvalidGermError,
    ResourceCapError,
    ResourceLimits,
    SkewGerm,
    compose_germ,
    format_germ_file,
    iterate_germ,
    parse_germ_file,
    parse_poly,
)
from conftest import germ


def test_validation():
    with pytest.raises(InvalidGermError):
        germ("z^2", "1 + w")  # constant term in q
    with pytest.raises(InvalidGermError):
        germ("1 + z", "w")  # p does not fix the origin
    with pytest.raises(InvalidGermError):
        SkewGerm(parse_poly("z + w"), parse_poly("w"))  # p depends on w
    with pytest.raises(InvalidGermError):
        SkewGerm(parse_poly("0"), parse_poly("w"))


def test_delta_and_lead_coeff():
    f = germ("3*z^4 + z^5", "w")
    assert f.delta == 4
    assert f.a_delta == 3


def test_iterate_monomial():
    f = germ("z^2", "z*w")
    f2 = iterate_germ(f, 2)
    assert format_germ_file(f2) == "p = z^4\nq = z^3*w\n"
    f3 = iterate_germ(f, 3)
    assert f3.q == parse_poly("z^7*w")


def test_iterate_example_expansion():
    f = germ("z^2", "z^3*w + z*w^2")
    f2 = iterate_germ(f, 2)
    assert f2.q == parse_poly("z^9*w + z^8*w^2 + z^7*w^2 + 2*z^6*w^3 + z^4*w^4")
    assert f2.q.orders() == (8, 4, 1)
    assert f2.p == parse_poly("z^4")


def test_iterate_identity_at_one():
    f = germ("z^2", "w^3 + z*w + z^3")
    assert iterate_germ(f, 1) == f


@pytest.mark.parametrize("name", ["g1", "g2", "g3", "g4", "g5"])
def test_iteration_semigroup(name, germs):
    f = germs[name]
    f1, f2, f3 = (iterate_germ(f, n) for n in (1, 2, 3))
    assert compose_germ(f1, f2) == f3
    assert compose_germ(f2, f1) == f3
    assert compose_germ(f2, f2) == iterate_germ(f, 4)


def test_p_iterate_order(germs):
    for f in germs.values():
        for n in (1, 2, 3):
            pn = iterate_germ(f, n).p
            assert min(i for i, _ in pn.support()) == f.delta**n


def test_iterate_respects_limits():
    f = germ("z^2", "z*w")
    with pytest.raises(ResourceCapError):
        iterate_germ(f, 25, ResourceLimits(max_total_degree=10**6))


def test_germ_file_round_trip():
    text = "# comment\nq = z^3*w + z*w^2\np = z^2\n"
    f = parse_germ_file(text)
    assert f == germ("z^2", "z^3*w + z*w^2")
    assert parse_germ_file(format_germ_file(f)) == f


def test_germ_file_errors():
    with pytest.raises(GermFileError):
        parse_germ_file("p = z^2\n")  # missing q
    with pytest.raises(GermFileError):
        parse_germ_file("p = z^2\np = z^3\nq = w")  # duplicate
    with pytest.raises(GermFileError):
        parse_germ_file("p = z^2\nq = v + w")  # bad variable
    with pytest.raises(GermFileError):
        parse_germ_file("p = w\nq = w")  # w not allowed in p
    with pytest.raises(GermFileError):
        parse_germ_file("r = z\nq = w")
