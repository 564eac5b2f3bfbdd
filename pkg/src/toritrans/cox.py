"""Divisor class group and quotient presentation of a non-degenerate toric variety."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import List, Tuple

from .errors import DegenerateFan
from .fan import Fan
from .lattice import IntMatrix, IntVector, hermite_normal_form, rank as matrix_rank, smith_normal_form, transpose


@dataclass(frozen=True)
class ClassGroupPresentation:
    """``Cl(X) = Z^free_rank ⊕ Z/d1 ⊕ Z/d2 ⊕ ...``.

    Row ``i`` of ``degree_map`` gives coordinate ``i`` of the class of each
    ray divisor: free coordinates first, then one row per torsion factor with
    entries reduced modulo that factor.
    """

    free_rank: int
    torsion: Tuple[int, ...]
    degree_map: IntMatrix

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def order(self):
        """Group order, or None when infinite."""
        return None if self.free_rank else prod(self.torsion)

    def degree(self, i: int) -> IntVector:
        return tuple(row[i] for row in self.degree_map)

    def describe(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class CoxPresentation:
    """Quotient data ``X = (K^m \\ Z) // G``.

    ``irrelevant_monomials`` has one squarefree exponent vector per max cone,
    supported on the rays outside it; ``Z`` is where all those monomials vanish.
    ``quasitorus_relations`` lists exponent vectors ``w`` cutting out
    ``G = {t : prod t_i^w_i = 1}``.
    """

    class_group: ClassGroupPresentation
    degrees: Tuple[IntVector, ...]
    irrelevant_monomials: Tuple[IntVector, ...]
    quasitorus_relations: Tuple[IntVector, ...]

    @property
    def irrelevant_locus_empty(self) -> bool:
        return any(not any(m) for m in self.irrelevant_monomials)

    def summary(self) -> str:
        m = len(self.degrees)
        z = "empty" if self.irrelevant_locus_empty else f"{len(self.irrelevant_monomials)} monomial equations"
        return f"X = (K^{m} \\ Z) // G with Cl(X) = {self.class_group.describe()}, Z {z}"


def pairing_matrix(f: Fan) -> IntMatrix:
    """``m x n`` matrix whose row ``i`` is the ray generator ``p_i``; it sends ``u`` to ``(<u,p_i>)_i``."""
    return tuple(f.rays)


def _require_nondegenerate(f: Fan) -> None:
    f.require_valid()
    if matrix_rank(f.rays) != f.rank:
        raise DegenerateFan("the rays do not span the lattice; split off the torus factor first")


def divisor_class_group(f: Fan) -> ClassGroupPresentation:
    """Cokernel of ``M -> Z^m`` computed from a Smith form of the pairing matrix."""
    _require_nondegenerate(f)
    P = pairing_matrix(f)
    m, n = len(P), f.rank
    snf = smith_normal_form(P, n)
    diag = snf.diagonal
    free_rows = hermite_normal_form(snf.U[n:], m) if m > n else ()
    torsion = []
    torsion_rows = []
    for i, d in enumerate(diag):
        if d > 1:
            torsion.append(d)
            torsion_rows.append(tuple(x % d for x in snf.U[i]))
    return ClassGroupPresentation(m - n, tuple(torsion), tuple(free_rows) + tuple(torsion_rows))


def cox_presentation(f: Fan) -> CoxPresentation:
    cl = divisor_class_group(f)
    m = len(f.rays)
    degrees = tuple(cl.degree(i) for i in range(m))
    monomials = tuple(tuple(0 if i in c else 1 for i in range(m)) for c in f.max_cones)
    relations = transpose(pairing_matrix(f))
    return CoxPresentation(cl, degrees, monomials, tuple(relations))


def degree_map_annihilates_characters(cl: ClassGroupPresentation, f: Fan) -> bool:
    """Exactness check: every character maps to the zero class."""
    P = pairing_matrix(f)
    moduli = [0] * cl.free_rank + list(cl.torsion)
    for row, d in zip(cl.degree_map, moduli):
        for j in range(f.rank):
            s = sum(row[i] * P[i][j] for i in range(len(P)))
            if (s % d if d else s) != 0:
                return False
    return True


def irrelevant_components(cox: CoxPresentation) -> List[Tuple[int, ...]]:
    """Coordinate supports of ``Z``: which coordinate subspaces are irrelevant.

    Returns the minimal sets of variable indices whose simultaneous vanishing
    kills every irrelevant monomial (the components of ``Z``).
    """
    m = len(cox.degrees)
    monos = [frozenset(i for i, e in enumerate(mono) if e) for mono in cox.irrelevant_monomials]
    if any(not s for s in monos):
        return []
    hits = []
    for size in range(1, m + 1):
        for S in combinations(range(m), size):
            Sset = set(S)
            if all(mono & Sset for mono in monos) and not any(set(h) <= Sset for h in hits):
                hits.append(S)
    return hits
