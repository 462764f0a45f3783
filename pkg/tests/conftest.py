import random
from itertools import combinations_with_replacement

import pytest

from logdiv.poly import MPoly


def random_poly(rng: random.Random, nvars: int, max_deg: int = 3,
                max_terms: int = 5, mod: int | None = None) -> MPoly:
    terms = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        e = tuple(rng.randrange(0, max_deg + 1) for _ in range(nvars))
        if sum(e) > max_deg:
            continue
        c = rng.randrange(-6, 7)
        if c:
            terms[e] = c
    return MPoly(nvars, terms, mod)


def random_form(rng: random.Random, nvars: int, degree: int,
                mod: int | None = None, lo: int = -9, hi: int = 9) -> MPoly:
    """Dense random homogeneous form of the given degree."""
    terms = {}
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        c = rng.randrange(lo, hi + 1) if mod is None else rng.randrange(mod)
        if c:
            terms[tuple(e)] = c
    return MPoly(nvars, terms, mod)


@pytest.fixture
def rng():
    return random.Random(20240801)
