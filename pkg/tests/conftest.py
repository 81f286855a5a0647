import random
from fractions import Fraction

import pytest

from bergmanops import ComplexRational, Polynomial, cplx


@pytest.fixture
def rng():
    return random.Random(0xBE26)


def rand_fraction(rng, span=8, den=6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def rand_scalar(rng) -> ComplexRational:
    return cplx(rand_fraction(rng), rand_fraction(rng))


def rand_polynomial(rng, dim, degree=3, terms=4) -> Polynomial:
    out = Polynomial.zero(dim)
    for _ in range(terms):
        idx = tuple(rng.randint(0, degree) for _ in range(dim))
        if sum(idx) > degree:
            idx = tuple(0 for _ in range(dim))
        out = out + Polynomial.monomial(idx, rand_scalar(rng))
    return out
