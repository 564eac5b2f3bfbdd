"""Rational polyhedral cones with exact generator and inequality descriptions.

A cone is stored in a canonical form that works for pointed and non-pointed
cones alike.  If ``L`` is the lineality space, the generators are ``±b`` for the
Hermite basis ``b`` of ``L ∩ Z^n`` together with the primitive extremal rays of
``cone ∩ L^⊥``.  The inequalities are the canonical generators of the dual
cone, so taking the dual is just swapping the two lists.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from . import _kernels
from .errors import RankMismatch, UnsupportedCone, UnsupportedRank
from .lattice import (
    IntVector,
    adjugate,
    apply,
    canonical_vectors,
    det,
    dot,
    extends_to_basis,
    identity,
    integer_coordinates,
    integer_kernel,
    neg,
    primitive_part,
    rank as matrix_rank,
    saturation_basis,
    smith_normal_form,
    transpose,
    vec,
)

DEFAULT_RANK_LIMIT = 4


def rank_limit() -> int:
    return int(os.environ.get("TORITRANS_RANK_LIMIT", DEFAULT_RANK_LIMIT))


# --------------------------------------------------------------------------
# double description
# --------------------------------------------------------------------------

def _extreme_rays(A: Sequence[IntVector], k: int) -> List[IntVector]:
    """Extreme rays of ``{y in Q^k : A y >= 0}`` for ``A`` of full column rank."""
    rows = list(canonical_vectors(A))
    if k == 0:
        return []
    basis: List[int] = []
    for i, row in enumerate(rows):
        if matrix_rank([rows[j] for j in basis] + [row]) > len(basis):
            basis.append(i)
            if len(basis) == k:
                break
    if len(basis) < k:
        raise ValueError("inequality system is not of full column rank")

    B = [rows[i] for i in basis]
    adj = adjugate(B)
    sign = 1 if det(B) > 0 else -1
    rays = [primitive_part([sign * adj[r][j] for r in range(k)]) for j in range(k)]
    done = list(basis)
    zeros = [frozenset(i for i in done if dot(rows[i], r) == 0) for r in rays]

    for i in range(len(rows)):
        if i in basis:
            continue
        a = rows[i]
        vals = [dot(a, r) for r in rays]
        pos = [j for j, v in enumerate(vals) if v > 0]
        neg_ = [j for j, v in enumerate(vals) if v < 0]
        zer = [j for j, v in enumerate(vals) if v == 0]
        new_rays = [rays[j] for j in pos + zer]
        new_zeros = [zeros[j] for j in pos] + [zeros[j] | {i} for j in zer]
        for p in pos:
            for q in neg_:
                common = zeros[p] & zeros[q]
                if len(common) < k - 2:
                    continue
                if any(t != p and t != q and common <= zeros[t] for t in range(len(rays))):
                    continue
                v = primitive_part([vals[p] * y - vals[q] * x for x, y in zip(rays[p], rays[q])])
                new_rays.append(v)
                new_zeros.append(frozenset(j for j in done if dot(rows[j], v) == 0) | {i})
        done.append(i)
        rays, zeros = new_rays, new_zeros
    return rays


def _canonical_dual(generators: Iterable[Sequence[int]], n: int) -> Tuple[IntVector, ...]:
    """Canonical generators of the dual of ``cone(generators)`` inside ``Z^n``."""
    return _dual_of_canonical(canonical_vectors(generators), n)


# fans rebuild the same faces many times over; results are immutable tuples
@lru_cache(maxsize=8192)
def _dual_of_canonical(G: Tuple[IntVector, ...], n: int) -> Tuple[IntVector, ...]:
    if not G:
        eye = identity(n)
        return tuple(sorted(set(eye) | {neg(e) for e in eye}))
    if matrix_rank(G) == n:
        return tuple(sorted(set(_extreme_rays(G, n))))
    L = integer_kernel(G, n)
    W = saturation_basis(G, n)
    A = [apply(W, g) for g in G]
    Wt = transpose(W)
    rays = {primitive_part(apply(Wt, y)) for y in _extreme_rays(A, len(W))}
    return tuple(sorted(rays | set(L) | {neg(b) for b in L}))


# --------------------------------------------------------------------------
# the cone type
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalCone:
    """A rational polyhedral cone in ``Q^rank``.

    Build instances with :meth:`from_generators`, :meth:`from_inequalities` or
    :func:`Cone`; the constructor itself trusts that both lists are already
    canonical.  Equality and hashing use ``rank`` and ``generators`` only.
    """

    rank: int
    generators: Tuple[IntVector, ...]
    inequalities: Tuple[IntVector, ...] = field(compare=False, repr=False)

    @classmethod
    def from_generators(cls, generators: Iterable[Sequence[int]], rank: int | None = None) -> "RationalCone":
        gens = [vec(g) for g in generators]
        if rank is None:
            if not gens:
                raise ValueError("rank is required for a cone without generators")
            rank = len(gens[0])
        if any(len(g) != rank for g in gens):
            raise RankMismatch(f"generators must all have length {rank}")
        ineqs = _canonical_dual(gens, rank)
        return cls(rank, _canonical_dual(ineqs, rank), ineqs)

    @classmethod
    def from_inequalities(cls, inequalities: Iterable[Sequence[int]], rank: int) -> "RationalCone":
        ineqs = [vec(u) for u in inequalities]
        if any(len(u) != rank for u in ineqs):
            raise RankMismatch(f"inequalities must all have length {rank}")
        gens = _canonical_dual(ineqs, rank)
        return cls(rank, gens, _canonical_dual(gens, rank))

    @cached_property
    def dim(self) -> int:
        return matrix_rank(self.generators)

    @cached_property
    def lineality_dim(self) -> int:
        return self.rank - matrix_rank(self.inequalities)

    @property
    def is_pointed(self) -> bool:
        return self.lineality_dim == 0

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.rank

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_simplicial(self) -> bool:
        return self.is_pointed and len(self.generators) == self.dim

    def contains(self, v: Sequence[int]) -> bool:
        return all(dot(u, v) >= 0 for u in self.inequalities)

    def __repr__(self) -> str:
        if not self.generators:
            return f"Cone(rank={self.rank})"
        return "Cone(" + ", ".join(str(g) for g in self.generators) + ")"


def Cone(*generators: Sequence[int], rank: int | None = None) -> RationalCone:
    """Shorthand: ``Cone((1, 0), (1, 2))``."""
    return RationalCone.from_generators(generators, rank)


def zero_cone(rank: int) -> RationalCone:
    return RationalCone.from_generators((), rank)


# --------------------------------------------------------------------------
# operations
# --------------------------------------------------------------------------

def dual_cone(sigma: RationalCone) -> RationalCone:
    return RationalCone(sigma.rank, sigma.inequalities, sigma.generators)


def is_strongly_convex(sigma: RationalCone) -> bool:
    return sigma.is_pointed


def contains_point(sigma: RationalCone, v: Sequence[int]) -> bool:
    if len(v) != sigma.rank:
        raise RankMismatch(f"point of length {len(v)} in a rank-{sigma.rank} cone")
    return sigma.contains(v)


def intersection(sigma: RationalCone, tau: RationalCone) -> RationalCone:
    if sigma.rank != tau.rank:
        raise RankMismatch("cones live in lattices of different rank")
    return RationalCone.from_inequalities(sigma.inequalities + tau.inequalities, sigma.rank)


def face_index_sets(sigma: RationalCone) -> List[FrozenSet[int]]:
    """Every face of a pointed cone as a set of indices into its generators."""
    if not sigma.is_pointed:
        raise UnsupportedCone(f"{sigma!r} is not strongly convex")
    gens = sigma.generators
    full = frozenset(range(len(gens)))
    cuts = {frozenset(i for i, g in enumerate(gens) if dot(u, g) == 0) for u in sigma.inequalities}
    cuts.discard(full)
    found = {full}
    frontier = [full]
    while frontier:
        F = frontier.pop()
        for s in cuts:
            G = F & s
            if G not in found:
                found.add(G)
                frontier.append(G)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def faces(sigma: RationalCone) -> List[RationalCone]:
    """All faces of a strongly convex cone, from ``{0}`` up to ``sigma``."""
    gens = sigma.generators
    out = [RationalCone.from_generators([gens[i] for i in s], sigma.rank) for s in face_index_sets(sigma)]
    return sorted(out, key=lambda c: (c.dim, c.generators))


def is_face_of(tau: RationalCone, sigma: RationalCone) -> bool:
    if tau.rank != sigma.rank:
        raise RankMismatch("cones live in lattices of different rank")
    if not all(sigma.contains(g) for g in tau.generators):
        return False
    u = [0] * sigma.rank
    for w in sigma.inequalities:
        if all(dot(w, g) == 0 for g in tau.generators):
            u = [a + b for a, b in zip(u, w)]
    face = RationalCone.from_generators([g for g in sigma.generators if dot(u, g) == 0], sigma.rank)
    return face == tau


def is_smooth_cone(sigma: RationalCone) -> bool:
    if not sigma.is_pointed:
        raise UnsupportedCone(f"{sigma!r} is not strongly convex")
    return extends_to_basis(sigma.generators, sigma.rank)


# --------------------------------------------------------------------------
# Hilbert bases
# --------------------------------------------------------------------------

def _triangulate(cone: RationalCone) -> List[Tuple[int, ...]]:
    """Pulling triangulation of a pointed cone into simplicial cones.

    Returns index tuples into ``cone.generators``.
    """
    gens = cone.generators
    face_sets = face_index_sets(cone)
    dims: Dict[FrozenSet[int], int] = {F: matrix_rank([gens[i] for i in F]) for F in face_sets}
    memo: Dict[FrozenSet[int], List[Tuple[int, ...]]] = {}

    def tri(F: FrozenSet[int]) -> List[Tuple[int, ...]]:
        if F in memo:
            return memo[F]
        d = dims[F]
        if len(F) == d:
            res = [tuple(sorted(F))]
        else:
            apex = min(F)
            res = []
            for G in face_sets:
                if G < F and dims[G] == d - 1 and apex not in G:
                    res.extend(tuple(sorted(T + (apex,))) for T in tri(G))
        memo[F] = res
        return res

    return tri(frozenset(range(len(gens))))


def _parallelepiped_points(simplex: Sequence[IntVector]) -> List[IntVector]:
    """Lattice points of the half-open parallelepiped of a full-rank simplex."""
    cols = transpose(simplex)
    d = det(cols)
    if abs(d) == 1:
        return []
    snf = smith_normal_form(cols)
    reps = [apply(snf.U_inv, c) for c in itertools.product(*(range(x) for x in snf.diagonal))]
    adj = adjugate(cols)
    if d < 0:
        adj = tuple(neg(r) for r in adj)
        d = -d
    return _kernels.reduce_to_parallelepiped(reps, simplex, adj, d)


def hilbert_basis(sigma: RationalCone) -> Tuple[IntVector, ...]:
    """Minimal generating set of the semigroup ``sigma ∩ Z^n``.

    The cone is rewritten in a basis of the saturated lattice of its span,
    triangulated, and the half-open fundamental parallelepipeds of the
    simplicial pieces supply a candidate set that is then reduced to its
    irreducible elements.
    """
    if not sigma.is_pointed:
        raise UnsupportedCone(f"{sigma!r} is not strongly convex")
    if sigma.rank > rank_limit():
        raise UnsupportedRank(f"Hilbert bases are supported up to rank {rank_limit()}, got {sigma.rank}")
    gens = sigma.generators
    if len(gens) <= 1:
        return gens
    B = saturation_basis(gens, sigma.rank)
    k = len(B)
    local = RationalCone.from_generators([integer_coordinates(B, g) for g in gens], k)

    cands = set(local.generators)
    for simplex in _triangulate(local):
        cands.update(_parallelepiped_points([local.generators[i] for i in simplex]))
    cands.discard((0,) * k)

    grading = [sum(col) for col in zip(*local.inequalities)]
    pts = sorted(cands, key=lambda p: (dot(grading, p), p))
    keep = _kernels.irreducible_indices(pts, local.inequalities)
    Bt = transpose(B)
    return tuple(sorted(apply(Bt, pts[i]) for i in keep))
