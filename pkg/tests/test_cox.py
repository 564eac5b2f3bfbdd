from math import gcd

import pytest

from toritrans import standard as S
from toritrans.cox import (
    cox_presentation,
    degree_map_annihilates_characters,
    divisor_class_group,
    irrelevant_components,
)
from toritrans.errors import DegenerateFan
from toritrans.lattice import det, hermite_normal_form, transpose


def test_affine_space_is_trivial():
    for n in (1, 2, 3):
        assert divisor_class_group(S.affine_space(n)).is_trivial


def test_projective_spaces():
    for n in (1, 2, 3):
        cl = divisor_class_group(S.projective_space(n))
        assert (cl.free_rank, cl.torsion) == (1, ())
        assert [abs(cl.degree(i)[0]) for i in range(n + 1)] == [1] * (n + 1)
        assert len({cl.degree(i) for i in range(n + 1)}) == 1


def test_p1xp1():
    cl = divisor_class_group(S.projective_product([1, 1]))
    assert cl.describe() == "Z^2"


@pytest.mark.parametrize("b", range(2, 13))
def test_surfaces_have_cyclic_class_group(b):
    for a in range(1, b):
        if gcd(a, b) == 1:
            cl = divisor_class_group(S.surface_fan(a, b))
            assert (cl.free_rank, cl.torsion) == (0, (b,))
            assert cl.order == b


def test_surface_weights():
    cox = cox_presentation(S.surface_fan(2, 5))
    assert cox.degrees == ((3,), (1,))
    assert cox.quasitorus_relations == ((1, 2), (0, 5))
    assert cox.irrelevant_locus_empty
    assert irrelevant_components(cox) == []


def test_punctured_plane():
    cox = cox_presentation(S.punctured_affine_space(2))
    assert cox.class_group.is_trivial
    assert set(cox.irrelevant_monomials) == {(0, 1), (1, 0)}
    assert irrelevant_components(cox) == [(0, 1)]


def test_projective_plane_presentation():
    f = S.projective_space(2)
    cox = cox_presentation(f)
    assert sorted(cox.irrelevant_monomials) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert irrelevant_components(cox) == [(0, 1, 2)]
    assert hermite_normal_form(cox.quasitorus_relations) == hermite_normal_form(transpose(f.rays))
    assert "Cl(X) = Z" in cox.summary()


def test_exactness_and_torsion_index(rng):
    fans = [S.projective_space(2), S.hirzebruch(2), S.blowup_projective_plane(), S.surface_fan(3, 7)]
    for f in fans:
        assert degree_map_annihilates_characters(divisor_class_group(f), f)
    for _ in range(10):
        a, b = rng.randint(-5, 5), rng.randint(2, 9)
        if gcd(a, b) != 1:
            continue
        f = S.surface_fan(a, b)
        assert divisor_class_group(f).order == abs(det(f.rays))


def test_smooth_complete_fans_have_free_class_group():
    for f in [S.projective_space(3), S.hirzebruch(3), S.blowup_projective_plane(), S.projective_product([1, 2])]:
        assert divisor_class_group(f).torsion == ()
        assert divisor_class_group(f).free_rank == len(f.rays) - f.rank


def test_degenerate_fan_rejected():
    with pytest.raises(DegenerateFan):
        divisor_class_group(S.line_with_torus())
    with pytest.raises(DegenerateFan):
        cox_presentation(S.torus(1))
