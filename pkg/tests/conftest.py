import pathlib

import pytest

from skewprod import SkewGerm, parse_poly

DATA = pathlib.Path(__file__).parent / "data"
GOLDEN = pathlib.Path(__file__).parent / "golden"


def germ(p_src: str, q_src: str) -> SkewGerm:
    return SkewGerm(parse_poly(p_src, allowed_vars=("z",)), parse_poly(q_src))


# The five canonical fixtures plus cases with integral blow-up weights
# (g6: first stage, g7: both stages) and a boundary germ whose delta
# equals an interior intercept (g8: two simultaneous Case-4 readings).
FIXTURES = {
    "g1": ("z^2", "z*w"),
    "g2": ("z^2", "z^3*w + z*w^2"),
    "g3": ("z^3", "w^2 + z*w"),
    "g4": ("z^2", "w^3 + z*w + z^3"),
    "g5": ("z^2", "-2*w^2 + z*w + z^2"),
    "g6": ("z^2", "w^4 + z*w^2 + z^3*w + z^7"),
    "g7": ("z^7", "z^8*w^4 + z^12*w^2 + z^17"),
    "g8": ("z^5", "w^8 + z*w^4 + z^3*w^2 + z^9*w"),
}


@pytest.fixture(scope="session")
def germs():
    return {name: germ(p, q) for name, (p, q) in FIXTURES.items()}
