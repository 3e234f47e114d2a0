import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from paramcodes.gf import FieldSpec
from paramcodes.ideals import ExponentMatrix, enumerate_points

# moduli for the extension fields exercised in tests (constant term first)
MODULI = {
    4: [1, 1, 1],          # x^2 + x + 1 over GF(2)
    8: [1, 1, 0, 1],       # x^3 + x + 1
    9: [1, 0, 1],          # x^2 + 1 over GF(3)
    16: [1, 1, 0, 0, 1],   # x^4 + x + 1
    25: [1, 1, 1],         # x^2 + x + 1 over GF(5)
    27: [1, 2, 0, 1],      # x^3 + 2x + 1 over GF(3)
    32: [1, 0, 1, 0, 0, 1],  # x^5 + x^2 + 1
}


def field(q: int) -> FieldSpec:
    return FieldSpec.of(q, MODULI.get(q))


@pytest.fixture(scope="session")
def f5():
    return FieldSpec.of(5)


@pytest.fixture(scope="session")
def f11():
    return FieldSpec.of(11)


@pytest.fixture(scope="session")
def f4():
    return field(4)


@pytest.fixture(scope="session")
def triangle_matrix():
    """The three pairwise products of three parameters (q = 5 golden case)."""
    return ExponentMatrix.of([[1, 1, 0], [0, 1, 1], [1, 0, 1]])


@pytest.fixture(scope="session")
def triangle_set(triangle_matrix, f5):
    return enumerate_points(triangle_matrix, f5)


@pytest.fixture(scope="session")
def torus11_set(f11):
    return enumerate_points(ExponentMatrix.torus(2), f11)
