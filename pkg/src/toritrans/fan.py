"""Fans of strongly convex cones and the combinatorial tests run on them."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .cone import RationalCone, dual_cone, face_index_sets, intersection, is_face_of, is_smooth_cone
from .errors import DegenerateInput, InvalidFan, RankMismatch
from .lattice import (
    IntMatrix,
    IntVector,
    apply,
    det,
    hermite_normal_form,
    integer_coordinates,
    is_zero,
    primitive_part,
    rank as matrix_rank,
    saturation_basis,
    vec,
)

RaySet = FrozenSet[int]


@dataclass(frozen=True)
class Fan:
    """A fan given by its rays and its inclusion-maximal cones.

    ``rays`` are primitive and sorted; ``max_cones`` are sets of indices into
    ``rays``.  The torus fan has no rays and the single max cone ``{}``.
    Use :meth:`from_data` to build one from arbitrary input.
    """

    rank: int
    rays: Tuple[IntVector, ...]
    max_cones: Tuple[RaySet, ...]
    name: Optional[str] = field(default=None, compare=False)

    @classmethod
    def from_data(
        cls,
        rank: int,
        rays: Iterable[Sequence[int]],
        max_cones: Iterable[Iterable[int]],
        name: Optional[str] = None,
    ) -> "Fan":
        raw = [vec(r) for r in rays]
        if any(len(r) != rank for r in raw):
            raise RankMismatch(f"every ray must have length {rank}")
        if any(is_zero(r) for r in raw):
            raise DegenerateInput("a ray cannot be the zero vector")
        prim = [primitive_part(r) for r in raw]
        if len(set(prim)) != len(prim):
            raise InvalidFan(["duplicate rays after normalization"])
        order = sorted(range(len(prim)), key=lambda i: prim[i])
        new_index = {old: new for new, old in enumerate(order)}
        cones = set()
        for c in max_cones:
            c = list(c)
            if any(not 0 <= i < len(prim) for i in c):
                raise InvalidFan([f"cone {c} refers to a ray index out of range"])
            cones.add(frozenset(new_index[i] for i in c))
        if not cones:
            cones = {frozenset()}
        maximal = [c for c in cones if not any(c < d for d in cones)]
        used = frozenset().union(*maximal)
        if len(used) != len(prim):
            missing = [prim[order[i]] for i in range(len(prim)) if i not in used]
            raise InvalidFan([f"rays {missing} lie in no cone"])
        return cls(rank, tuple(prim[i] for i in order), tuple(sorted(maximal, key=lambda s: sorted(s))), name)

    def ray_list(self, cone: Iterable[int]) -> List[IntVector]:
        return [self.rays[i] for i in sorted(cone)]

    def cone(self, index_set: Iterable[int]) -> RationalCone:
        key = frozenset(index_set)
        cache = self._cone_cache
        if key not in cache:
            cache[key] = RationalCone.from_generators(self.ray_list(key), self.rank)
        return cache[key]

    @cached_property
    def _cone_cache(self) -> Dict[RaySet, RationalCone]:
        return {}

    @cached_property
    def violations(self) -> Tuple[str, ...]:
        out = []
        good = []
        for c in self.max_cones:
            sigma = self.cone(c)
            if not sigma.is_pointed:
                out.append(f"cone {self.ray_list(c)} is not strongly convex")
            elif set(sigma.generators) != set(self.ray_list(c)):
                out.append(f"rays {self.ray_list(c)} are not exactly the extremal rays of their cone")
            else:
                good.append(c)
        for c1, c2 in itertools.combinations(good, 2):
            s1, s2 = self.cone(c1), self.cone(c2)
            meet = intersection(s1, s2)
            if not (is_face_of(meet, s1) and is_face_of(meet, s2)):
                out.append(
                    f"intersection of cones {self.ray_list(c1)} and {self.ray_list(c2)} is not a face of both"
                )
        return tuple(out)

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def require_valid(self) -> "Fan":
        if self.violations:
            raise InvalidFan(self.violations)
        return self

    @cached_property
    def cones(self) -> Dict[RaySet, RationalCone]:
        """The face-closed collection, keyed by ray index sets."""
        self.require_valid()
        out: Dict[RaySet, RationalCone] = {}
        for c in self.max_cones:
            sigma = self.cone(c)
            index_of = {r: i for i, r in enumerate(self.rays)}
            for s in face_index_sets(sigma):
                key = frozenset(index_of[sigma.generators[i]] for i in s)
                if key not in out:
                    out[key] = self.cone(key)
        return dict(sorted(out.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))))

    def __str__(self) -> str:
        cones = ", ".join("{" + ",".join(map(str, sorted(c))) + "}" for c in self.max_cones)
        label = f"{self.name}: " if self.name else ""
        return f"{label}Fan(rank={self.rank}, rays={list(self.rays)}, max_cones=[{cones}])"


def validate(f: Fan) -> List[str]:
    """Empty list for a valid fan, otherwise one message per violation."""
    return list(f.violations)


def is_complete(f: Fan) -> bool:
    f.require_valid()
    n = f.rank
    if any(f.cone(c).dim != n for c in f.max_cones):
        return False
    walls: Dict[RaySet, int] = {}
    for c in f.max_cones:
        sigma = f.cone(c)
        index_of = {r: i for i, r in enumerate(f.rays)}
        for s in face_index_sets(sigma):
            key = frozenset(index_of[sigma.generators[i]] for i in s)
            if f.cone(key).dim == n - 1:
                walls[key] = walls.get(key, 0) + 1
    return all(v == 2 for v in walls.values())


def ray_cone(f: Fan) -> RationalCone:
    """``Cone(Σ(1))``: the cone spanned by every ray of the fan."""
    return RationalCone.from_generators(f.rays, f.rank)


def quasi_affine_envelope(f: Fan) -> Tuple[bool, Optional[RationalCone]]:
    """Decide quasi-affineness by testing that every cone is a face of ``Cone(Σ(1))``."""
    f.require_valid()
    omega = ray_cone(f)
    if not omega.is_pointed:
        return False, None
    if all(is_face_of(f.cone(c), omega) for c in f.max_cones):
        return True, omega
    return False, None


def is_quasi_affine(f: Fan) -> bool:
    return quasi_affine_envelope(f)[0]


def degenerate_split(f: Fan) -> Tuple[int, Fan]:
    """Split off the torus factor: returns ``(k, f')`` with ``X = X(f') x (K^*)^k``."""
    f.require_valid()
    r = matrix_rank(f.rays)
    k = f.rank - r
    if k == 0:
        return 0, f
    basis = saturation_basis(f.rays, f.rank)
    rays = [integer_coordinates(basis, ray) for ray in f.rays]
    return k, Fan.from_data(r, rays, [sorted(c) for c in f.max_cones], f.name)


def is_smooth_fan(f: Fan) -> bool:
    f.require_valid()
    return all(is_smooth_cone(f.cone(c)) for c in f.max_cones)


def smooth_locus_subfan(f: Fan) -> Fan:
    """Subfan of smooth cones; it describes the smooth locus of the variety."""
    smooth = [c for c, sigma in f.cones.items() if is_smooth_cone(sigma)]
    maximal = [c for c in smooth if not any(c < d for d in smooth)]
    name = f"{f.name} (smooth locus)" if f.name else None
    return Fan.from_data(f.rank, f.rays, [sorted(c) for c in maximal], name)


def _minimal_zero_sum(rays: Sequence[IntVector], pool: Sequence[int], start: int) -> Optional[Tuple[int, ...]]:
    rest = [i for i in pool if i != start]
    n = len(rays[start])
    for size in range(1, len(rest) + 1):
        for combo in itertools.combinations(rest, size):
            total = list(rays[start])
            for i in combo:
                total = [a + b for a, b in zip(total, rays[i])]
            if all(x == 0 for x in total):
                S = (start,) + combo
                for sub in range(1, len(S)):
                    for part in itertools.combinations(S, sub):
                        if all(sum(rays[i][j] for i in part) == 0 for j in range(n)):
                            return None
                return tuple(sorted(S))
    return None


def detect_projective_product(f: Fan) -> Optional[List[int]]:
    """Factor dimensions ``[n1, ..., nk]`` if ``f`` is a product of projective-space fans."""
    f.require_valid()
    if not f.rays or not is_complete(f) or not is_smooth_fan(f):
        return None
    n = f.rank
    if any(sum(r[j] for r in f.rays) != 0 for j in range(n)):
        return None
    unassigned = list(range(len(f.rays)))
    groups: List[Tuple[int, ...]] = []
    while unassigned:
        S = _minimal_zero_sum(f.rays, unassigned, unassigned[0])
        if S is None:
            return None
        groups.append(S)
        unassigned = [i for i in unassigned if i not in S]

    stacked: List[IntVector] = []
    for S in groups:
        vecs = [f.rays[i] for i in S]
        if len(S) != matrix_rank(vecs) + 1:
            return None
        sat = saturation_basis(vecs, n)
        if any(hermite_normal_form([f.rays[i] for i in S if i != drop], n) != sat for drop in S):
            return None
        stacked.extend(sat)
    if len(stacked) != n or abs(det(stacked)) != 1:
        return None
    expected = {
        frozenset(i for S, drop in zip(groups, choice) for i in S if i != drop)
        for choice in itertools.product(*groups)
    }
    if expected != set(f.max_cones):
        return None
    return sorted(len(S) - 1 for S in groups)


def orbit_inventory(f: Fan) -> List[Tuple[RationalCone, int]]:
    """Each cone of the fan with the dimension ``n - dim(cone)`` of its torus orbit."""
    return [(sigma, f.rank - sigma.dim) for sigma in f.cones.values()]


def is_fan_morphism(phi: Sequence[Sequence[int]], f: Fan, g: Fan) -> bool:
    """Whether the lattice map ``phi`` (a ``g.rank x f.rank`` matrix) sends cones into cones."""
    if len(phi) != g.rank or any(len(row) != f.rank for row in phi):
        raise RankMismatch(f"expected a {g.rank}x{f.rank} matrix")
    f.require_valid()
    g.require_valid()
    targets = [g.cone(c) for c in g.max_cones]
    for c in f.max_cones:
        images = [apply(phi, r) for r in f.ray_list(c)]
        if not any(all(t.contains(v) for v in images) for t in targets):
            return False
    return True


def global_functions_cone(f: Fan) -> RationalCone:
    """Dual of ``Cone(Σ(1))``; its lattice points index a basis of ``K[X]``."""
    f.require_valid()
    return dual_cone(ray_cone(f))


def change_basis(f: Fan, U: IntMatrix) -> Fan:
    """Image of the fan under the unimodular map ``v -> U v``."""
    if abs(det(U)) != 1:
        raise ValueError("change of basis must be unimodular")
    return Fan.from_data(f.rank, [apply(U, r) for r in f.rays], [sorted(c) for c in f.max_cones], f.name)
