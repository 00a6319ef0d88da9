import random
from fractions import Fraction

import pytest


def random_rational_point(rng: random.Random, d: int = 2, den: int = 97):
    return tuple(
        Fraction(rng.randrange(-400 * den, 400 * den), den) for _ in range(d)
    )


@pytest.fixture
def rng():
    return random.Random(20240817)
