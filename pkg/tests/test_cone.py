import random

import pytest

from toritrans.cone import (
    Cone,
    RationalCone,
    contains_point,
    dual_cone,
    faces,
    hilbert_basis,
    is_face_of,
    is_smooth_cone,
    is_strongly_convex,
    zero_cone,
)
from toritrans.errors import RankMismatch, UnsupportedCone, UnsupportedRank
from toritrans.lattice import apply, identity
from toritrans.oracle import brute_in_cone

from conftest import random_pointed_cone, random_unimodular

QUADRANT = Cone((1, 0), (0, 1))


def test_generators_are_canonical():
    sigma = Cone((2, 0), (1, 1), (0, 3), (1, 2))
    assert sigma.generators == ((0, 1), (1, 0))
    assert sigma == QUADRANT


@pytest.mark.parametrize(
    "sigma, expected",
    [
        (QUADRANT, QUADRANT),
        (Cone((1, 0), (1, 2)), Cone((0, 1), (2, -1))),
    ],
)
def test_dual_examples(sigma, expected):
    assert dual_cone(sigma) == expected


def test_dual_of_zero_cone_is_whole_plane():
    full = dual_cone(zero_cone(2))
    assert full.inequalities == ()
    assert full.dim == 2 and full.lineality_dim == 2
    assert full.contains((-5, 7))


@pytest.mark.parametrize(
    "sigma, expected",
    [
        (Cone((1,), (-1,)), False),
        (QUADRANT, True),
        (Cone((1, 0), (-1, 0), (0, 1)), False),
        (zero_cone(3), True),
    ],
)
def test_strong_convexity(sigma, expected):
    assert is_strongly_convex(sigma) is expected


def test_faces():
    assert faces(QUADRANT) == [zero_cone(2), Cone((0, 1)), Cone((1, 0)), QUADRANT]
    assert faces(Cone((1, 0))) == [zero_cone(2), Cone((1, 0))]
    assert len(faces(Cone((1, 0), (1, 2)))) == 4
    assert len(faces(Cone((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)))) == 1 + 4 + 4 + 1
    with pytest.raises(UnsupportedCone):
        faces(Cone((1, 0), (-1, 0)))


@pytest.mark.parametrize(
    "tau, sigma, expected",
    [
        (zero_cone(2), QUADRANT, True),
        (Cone((1, 0)), QUADRANT, True),
        (Cone((1, 1)), QUADRANT, False),
        (QUADRANT, QUADRANT, True),
        (Cone((1, 0), (1, 1)), QUADRANT, False),
        (Cone((1, 0), (0, 1), rank=2), Cone((1, 0), (0, 1)), True),
    ],
)
def test_is_face_of(tau, sigma, expected):
    assert is_face_of(tau, sigma) is expected


@pytest.mark.parametrize(
    "sigma, expected",
    [
        (Cone((1, 0), (1, 1)), True),
        (Cone((1, 0), (1, 2)), False),
        (zero_cone(2), True),
        (Cone((1, 0, 0), (0, 1, 0), (1, 1, 2)), False),
        (Cone((1, -1)), True),
    ],
)
def test_smoothness(sigma, expected):
    assert is_smooth_cone(sigma) is expected


def test_smoothness_needs_pointed_cone():
    with pytest.raises(UnsupportedCone):
        is_smooth_cone(Cone((1, 0), (-1, 0)))


@pytest.mark.parametrize(
    "sigma, expected",
    [
        (QUADRANT, [(0, 1), (1, 0)]),
        (Cone((0, 1), (2, -1)), [(0, 1), (1, 0), (2, -1)]),
        (Cone((0, 1), (3, -2)), [(0, 1), (1, 0), (2, -1), (3, -2)]),
        (Cone((1, 0, 0), (0, 1, 0), (1, 1, 2)), [(0, 1, 0), (1, 0, 0), (1, 1, 1), (1, 1, 2)]),
        (Cone((2, 3)), [(2, 3)]),
        (zero_cone(2), []),
    ],
)
def test_hilbert_basis_examples(sigma, expected):
    assert list(hilbert_basis(sigma)) == expected


def test_hilbert_basis_of_lower_dimensional_cone():
    # a 2-dimensional cone sitting in Z^3
    sigma = Cone((1, 0, 1), (1, 2, 1))
    assert hilbert_basis(sigma) == ((1, 0, 1), (1, 1, 1), (1, 2, 1))


def test_hilbert_basis_errors(monkeypatch):
    with pytest.raises(UnsupportedCone):
        hilbert_basis(Cone((1, 0), (-1, 0)))
    with pytest.raises(UnsupportedRank):
        hilbert_basis(Cone(*identity(5)))
    monkeypatch.setenv("TORITRANS_RANK_LIMIT", "5")
    assert len(hilbert_basis(Cone(*identity(5)))) == 5


@pytest.mark.parametrize(
    "sigma, v, expected",
    [(QUADRANT, (3, 5), True), (QUADRANT, (-1, 0), False), (Cone((0, 1), (2, -1)), (1, 0), True)],
)
def test_contains_point(sigma, v, expected):
    assert contains_point(sigma, v) is expected


def test_contains_point_rank_mismatch():
    with pytest.raises(RankMismatch):
        contains_point(QUADRANT, (1, 0, 0))


def test_inequality_constructor_roundtrip():
    sigma = Cone((1, 0, 0), (0, 1, 0), (1, 1, 3))
    assert RationalCone.from_inequalities(sigma.inequalities, 3) == sigma


def test_duality_involution_random(rng):
    for rank in (2, 3):
        for _ in range(30):
            sigma = random_pointed_cone(rank, rng, -9, 9)
            assert dual_cone(dual_cone(sigma)) == sigma
            for g in sigma.generators:
                assert all(sum(a * b for a, b in zip(u, g)) >= 0 for u in sigma.inequalities)


def test_membership_agrees_with_rational_combinations(rng):
    for rank in (2, 3):
        for _ in range(5):
            sigma = random_pointed_cone(rank, rng)
            for _ in range(200):
                v = tuple(rng.randint(-6, 6) for _ in range(rank))
                assert sigma.contains(v) == brute_in_cone(sigma.generators, v)


def test_hilbert_basis_elements_are_irreducible(rng):
    for _ in range(15):
        sigma = random_pointed_cone(3, rng, full=True)
        hb = hilbert_basis(sigma)
        assert len(hb) <= 50
        hbset = set(hb)
        for h in hb:
            for g in hb:
                rest = tuple(a - b for a, b in zip(h, g))
                assert not (g != h and any(rest) and sigma.contains(rest))
        assert set(sigma.generators) <= hbset


def test_smooth_dual_has_rank_many_generators(rng):
    for n in (2, 3, 4):
        U = random_unimodular(n, rng)
        sigma = Cone(*[apply(U, e) for e in identity(n)])
        assert is_smooth_cone(sigma)
        assert len(hilbert_basis(dual_cone(sigma))) == n


def test_repr():
    assert repr(QUADRANT) == "Cone((0, 1), (1, 0))"
    assert repr(zero_cone(2)) == "Cone(rank=2)"
