import random

import pytest

from toritrans.cone import Cone
from toritrans.lattice import det, identity


def random_unimodular(n, rng, steps=6, span=2):
    """Product of random elementary matrices; entries stay small."""
    M = [list(r) for r in identity(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if n > 1 and rng.random() < 0.8:
            c = rng.choice([c for c in range(-span, span + 1) if c])
            M[i] = [a + c * b for a, b in zip(M[i], M[j])]
        elif n > 1 and rng.random() < 0.5:
            M[i], M[j] = M[j], M[i]
        else:
            M[i] = [-a for a in M[i]]
    M = tuple(tuple(r) for r in M)
    assert abs(det(M)) == 1
    return M


def random_pointed_cone(rank, rng, lo=-3, hi=3, ngens=(2, 5), full=False):
    while True:
        gens = [tuple(rng.randint(lo, hi) for _ in range(rank)) for _ in range(rng.randint(*ngens))]
        gens = [g for g in gens if any(g)]
        if not gens:
            continue
        sigma = Cone(*gens)
        if sigma.is_pointed and (not full or sigma.dim == rank):
            return sigma


@pytest.fixture
def rng():
    return random.Random(20241018)
