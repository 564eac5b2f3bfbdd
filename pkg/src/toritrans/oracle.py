"""Brute-force verifiers for cone computations.

Nothing here calls the elimination, Smith/Hermite or Hilbert-basis code of
the main modules.  Each oracle works from the raw generators of its input
and enumerates lattice points in an explicit box, so the box size documents
how far a negative answer can be trusted.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .cone import RationalCone
from .errors import RankMismatch, UnsupportedCone, UnsupportedRank

Vector = Tuple[int, ...]


def _box(n: int, bound: int) -> np.ndarray:
    axis = np.arange(-bound, bound + 1, dtype=np.int64)
    grids = np.meshgrid(*([axis] * n), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def _solve(columns: Sequence[Sequence[int]], target: Sequence[int]) -> Optional[List[Fraction]]:
    """Exact least-structure solve of ``sum x_j columns[j] = target``; None if inconsistent."""
    n, k = len(target), len(columns)
    rows = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    pivots = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(rows[i][k] != 0 for i in range(r, n)):
        return None
    x = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        x[c] = rows[i][k]
    return x


def brute_in_cone(generators: Sequence[Sequence[int]], point: Sequence[int]) -> bool:
    """Membership by trying every subset of generators as a nonnegative basis."""
    if not any(point):
        return True
    gens = [tuple(g) for g in generators]
    for size in range(1, min(len(gens), len(point)) + 1):
        for subset in itertools.combinations(gens, size):
            x = _solve(subset, point)
            if x is not None and all(v >= 0 for v in x):
                return True
    return False


# --------------------------------------------------------------------------
# rank 2
# --------------------------------------------------------------------------

def _cross(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _in_plane_cone(g1: Vector, g2: Vector, p: Vector) -> bool:
    s = _cross(g1, g2)
    if s == 0:
        # a single ray (g1 and g2 positively proportional)
        return _cross(g1, p) == 0 and g1[0] * p[0] + g1[1] * p[1] >= 0
    return _cross(g1, p) * s >= 0 and _cross(p, g2) * s >= 0


def brute_hilbert_basis(sigma: RationalCone, bound: int) -> List[Vector]:
    """Points of the box ``[-bound, bound]^2`` in ``σ`` that are not a sum of two nonzero points of ``σ``."""
    if sigma.rank != 2:
        raise UnsupportedRank("the enumeration oracle handles rank 2 only")
    gens = list(sigma.generators)
    if len(gens) > 2 or not gens:
        raise UnsupportedCone("expected a pointed cone with one or two rays")
    g1, g2 = gens[0], gens[-1]
    pts = [
        (x, y)
        for x in range(-bound, bound + 1)
        for y in range(-bound, bound + 1)
        if (x, y) != (0, 0) and _in_plane_cone(g1, g2, (x, y))
    ]
    out = []
    for p in pts:
        split = any(
            q != p and _in_plane_cone(g1, g2, (p[0] - q[0], p[1] - q[1]))
            for q in pts
        )
        if not split:
            out.append(p)
    return sorted(out)


# --------------------------------------------------------------------------
# rank 3, full-dimensional
# --------------------------------------------------------------------------

def _brute_facets(gens: Sequence[Vector]) -> List[Vector]:
    """Inward facet normals of a full-dimensional pointed cone in ``Z^3``."""
    normals = set()
    for g, h in itertools.combinations(gens, 2):
        nrm = (g[1] * h[2] - g[2] * h[1], g[2] * h[0] - g[0] * h[2], g[0] * h[1] - g[1] * h[0])
        if not any(nrm):
            continue
        vals = [sum(a * b for a, b in zip(nrm, x)) for x in gens]
        if all(v >= 0 for v in vals):
            normals.add(nrm)
        elif all(v <= 0 for v in vals):
            normals.add(tuple(-c for c in nrm))
    return sorted(normals)


def zonotope_bound(sigma: RationalCone) -> int:
    """Coordinate bound containing ``sum t_i g_i`` for all ``t_i`` in ``[0, 1]``."""
    n = sigma.rank
    return max(sum(abs(g[j]) for g in sigma.generators) for j in range(n))


def brute_hilbert_basis_pointwise(sigma: RationalCone, bound: Optional[int] = None) -> List[Vector]:
    """Hilbert basis of a full-dimensional pointed cone in ``Z^3`` by box enumeration.

    Points are visited in increasing degree for the grading given by the sum
    of the facet normals; a point is kept unless it minus an already kept
    point stays in the cone.  Complete once ``bound`` reaches the
    :func:`zonotope_bound`, which is the default.
    """
    if sigma.rank != 3:
        raise UnsupportedRank("the pointwise oracle handles rank 3 only")
    gens = [tuple(g) for g in sigma.generators]
    if len(gens) < 3 or not brute_pointed(gens):
        raise UnsupportedCone("expected a full-dimensional pointed cone")
    facets = _brute_facets(gens)
    if len(facets) < 3:
        raise UnsupportedCone("expected a full-dimensional pointed cone")
    F = np.array(facets, dtype=np.int64)
    bound = zonotope_bound(sigma) if bound is None else bound
    pts = _box(3, bound)
    vals = pts @ F.T
    inside = np.all(vals >= 0, axis=1) & np.any(pts != 0, axis=1)
    pts, vals = pts[inside], vals[inside]
    deg = vals.sum(axis=1)
    order = np.lexsort((pts[:, 2], pts[:, 1], pts[:, 0], deg))
    kept = np.zeros((0, len(facets)), dtype=np.int64)
    out = []
    for i in order:
        v = vals[i]
        if kept.shape[0] and np.any(np.all(v - kept >= 0, axis=1)):
            continue
        kept = np.vstack([kept, v])
        out.append(tuple(int(c) for c in pts[i]))
    return sorted(out)


def brute_pointed(gens: Sequence[Vector]) -> bool:
    """No nonzero point and its negative both lie in the cone of ``gens``."""
    for g in gens:
        if brute_in_cone(gens, tuple(-c for c in g)):
            return False
    return True


# --------------------------------------------------------------------------
# duality and surfaces
# --------------------------------------------------------------------------

def brute_dual_equivalence(sigma: RationalCone, claimed: RationalCone, bound: int) -> bool:
    """Compare ``claimed`` with ``{u : <u, g> >= 0 for all generators g}`` on a box."""
    if sigma.rank != claimed.rank:
        raise RankMismatch("cones live in lattices of different rank")
    n = sigma.rank
    pts = _box(n, bound)
    if sigma.generators:
        G = np.array(sigma.generators, dtype=np.int64)
        expected = np.all(pts @ G.T >= 0, axis=1)
    else:
        expected = np.ones(len(pts), dtype=bool)
    for p, e in zip(pts, expected):
        if claimed.contains(tuple(int(c) for c in p)) != bool(e):
            return False
    return True


def _surface_rays(a: int, b: int) -> Tuple[Vector, Vector]:
    return (1, 0), (a, b)


def brute_surface_iso_search(s, t, shear_bound: int) -> Optional[Tuple[Vector, Vector]]:
    """Search ``M`` in ``GL_2(Z)`` mapping the cone of ``s`` onto the cone of ``t``.

    The first column of ``M`` is the image of ``(1, 0)`` and must be a ray of
    ``t``; the second column ranges over ``[-shear_bound, shear_bound]^2``.
    Returns ``M`` as a pair of rows, verified, or None.  Complete when
    ``shear_bound >= b``.
    """
    src = _surface_rays(s.a, s.b)
    dst = set(_surface_rays(t.a, t.b))
    rng = range(-shear_bound, shear_bound + 1)
    for c1 in sorted(dst):
        for c2 in itertools.product(rng, rng):
            if abs(c1[0] * c2[1] - c1[1] * c2[0]) != 1:
                continue
            M = ((c1[0], c2[0]), (c1[1], c2[1]))
            image = {(M[0][0] * v[0] + M[0][1] * v[1], M[1][0] * v[0] + M[1][1] * v[1]) for v in src}
            if image == dst:
                return M
    return None
