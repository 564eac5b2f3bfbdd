"""Constructors for the fans that keep coming up."""
from __future__ import annotations

import itertools
from typing import Sequence

from .cone import RationalCone
from .fan import Fan
from .lattice import identity, neg


def affine_space(n: int) -> Fan:
    return Fan.from_data(n, identity(n), [range(n)], name=f"A^{n}")


def torus(n: int) -> Fan:
    return Fan.from_data(n, [], [], name=f"(K^*)^{n}")


def projective_space(n: int) -> Fan:
    rays = list(identity(n)) + [tuple([-1] * n)]
    cones = [[j for j in range(n + 1) if j != i] for i in range(n + 1)]
    return Fan.from_data(n, rays, cones, name=f"P^{n}")


def punctured_affine_space(n: int) -> Fan:
    """``A^n`` minus the origin: every proper face of the orthant."""
    return Fan.from_data(n, identity(n), [[j for j in range(n) if j != i] for i in range(n)], name=f"A^{n}\\{{0}}")


def blowup_affine_plane() -> Fan:
    return Fan.from_data(2, [(1, 0), (1, 1), (0, 1)], [[0, 1], [1, 2]], name="Bl_0 A^2")


def hirzebruch(k: int) -> Fan:
    rays = [(1, 0), (0, 1), (-1, k), (0, -1)]
    return Fan.from_data(2, rays, [[0, 1], [1, 2], [2, 3], [3, 0]], name=f"F_{k}")


def blowup_projective_plane() -> Fan:
    rays = [(1, 0), (1, 1), (0, 1), (-1, -1)]
    return Fan.from_data(2, rays, [[0, 1], [1, 2], [2, 3], [3, 0]], name="Bl_p P^2")


def cone_fan(sigma: RationalCone, name: str | None = None) -> Fan:
    """Affine toric variety of a single strongly convex cone."""
    return Fan.from_data(sigma.rank, sigma.generators, [range(len(sigma.generators))], name=name)


def surface_fan(a: int, b: int) -> Fan:
    return Fan.from_data(2, [(1, 0), (a, b)], [[0, 1]], name=f"X_{{{a},{b}}}")


def product(f: Fan, g: Fan) -> Fan:
    """Fan of ``X(f) x X(g)`` in ``Z^(f.rank + g.rank)``."""
    rays = [r + (0,) * g.rank for r in f.rays] + [(0,) * f.rank + r for r in g.rays]
    m = len(f.rays)
    cones = [sorted(c) + [m + i for i in d] for c, d in itertools.product(f.max_cones, g.max_cones)]
    name = f"{f.name} x {g.name}" if f.name and g.name else None
    return Fan.from_data(f.rank + g.rank, rays, cones, name=name)


def projective_product(dims: Sequence[int]) -> Fan:
    out = projective_space(dims[0])
    for d in dims[1:]:
        out = product(out, projective_space(d))
    return out


def line_with_torus() -> Fan:
    """``A^1 x K^*`` as the single ray (1, 0) in ``Z^2``."""
    return Fan.from_data(2, [(1, 0)], [[0]], name="A^1 x K^*")


def negated(f: Fan) -> Fan:
    return Fan.from_data(f.rank, [neg(r) for r in f.rays], [sorted(c) for c in f.max_cones], f.name)
