"""Exact integer linear algebra over Z.

Vectors are tuples of Python ints and matrices are tuples of row tuples, so
every value is hashable and immutable.  Nothing in here touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Optional, Sequence, Tuple

from .errors import DegenerateInput

IntVector = Tuple[int, ...]
IntMatrix = Tuple[IntVector, ...]


def vec(v: Iterable[int]) -> IntVector:
    return tuple(int(x) for x in v)


def mat(rows: Iterable[Iterable[int]]) -> IntMatrix:
    return tuple(vec(r) for r in rows)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def add(u: Sequence[int], v: Sequence[int]) -> IntVector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int]) -> IntVector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c: int, v: Sequence[int]) -> IntVector:
    return tuple(c * a for a in v)


def neg(v: Sequence[int]) -> IntVector:
    return tuple(-a for a in v)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> IntMatrix:
    if not A:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*A))


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> IntMatrix:
    Bt = transpose(B)
    return tuple(tuple(dot(row, col) for col in Bt) for row in A)


def apply(A: Sequence[Sequence[int]], v: Sequence[int]) -> IntVector:
    """Matrix-vector product ``A v``."""
    return tuple(dot(row, v) for row in A)


def content(v: Sequence[int]) -> int:
    return reduce(gcd, v, 0)


def is_zero(v: Sequence[int]) -> bool:
    return all(x == 0 for x in v)


def primitive_part(v: Sequence[int]) -> IntVector:
    """Divide ``v`` by the gcd of its coordinates.

    >>> primitive_part((3, -6, 9))
    (1, -2, 3)
    """
    g = content(v)
    if g == 0:
        raise DegenerateInput("the zero vector has no primitive part")
    return tuple(x // g for x in v)


def canonical_vectors(vectors: Iterable[Sequence[int]]) -> Tuple[IntVector, ...]:
    """Primitive, deduplicated, lexicographically sorted; zero vectors dropped."""
    return tuple(sorted({primitive_part(v) for v in vectors if not is_zero(v)}))


def rank(A: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free elimination."""
    rows = [list(r) for r in A if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = [p[c] * x - f * y for x, y in zip(rows[i], p)]
        r += 1
        if r == len(rows):
            break
    return r


def det(A: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def adjugate(A: Sequence[Sequence[int]]) -> IntMatrix:
    """Classical adjoint, so that ``adjugate(A) @ A == det(A) * I``."""
    n = len(A)
    if n == 1:
        return ((1,),)
    # fraction-free Gauss-Jordan on [A | I]: the left block ends as ±det * I and
    # the right block as the matching multiple of the adjugate
    M = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(A)]
    prev = 1
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            break
        M[c], M[p] = M[p], M[c]
        pc = M[c]
        for i in range(n):
            if i != c:
                f = M[i][c]
                M[i] = [(pc[c] * x - f * y) // prev for x, y in zip(M[i], pc)]
        prev = pc[c]
    else:
        d = det(A)
        return tuple(tuple(x * d // prev for x in row[n:]) for row in M)
    cof = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(A) if k != i]
            cof[i][j] = (-1) ** (i + j) * det(minor)
    return transpose(cof)


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular.

    ``U_inv`` and ``V_inv`` are carried along because the row space and the
    cokernel are read off from them directly.
    """

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix
    V_inv: IntMatrix

    @property
    def diagonal(self) -> IntVector:
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.V))))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> SmithDecomposition:
    """Smith normal form by elementary row and column operations.

    Args:
        A: an ``m x n`` integer matrix given as rows.  ``ncols`` is only needed
            when ``m == 0``.

    Returns:
        A :class:`SmithDecomposition` whose diagonal is non-negative, satisfies
        ``d1 | d2 | ...`` and has its zeros at the end.
    """
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    M = [list(r) for r in A]
    U = [list(r) for r in identity(m)]
    Ui = [list(r) for r in identity(m)]
    V = [list(r) for r in identity(n)]
    Vi = [list(r) for r in identity(n)]

    def row_add(i, j, q):  # row_i += q row_j
        if q == 0:
            return
        M[i] = [a + q * b for a, b in zip(M[i], M[j])]
        U[i] = [a + q * b for a, b in zip(U[i], U[j])]
        for r in Ui:
            r[j] -= q * r[i]

    def row_swap(i, j):
        if i == j:
            return
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]
        for r in Ui:
            r[i], r[j] = r[j], r[i]

    def row_neg(i):
        M[i] = [-a for a in M[i]]
        U[i] = [-a for a in U[i]]
        for r in Ui:
            r[i] = -r[i]

    def col_add(i, j, q):  # col_i += q col_j
        if q == 0:
            return
        for r in M:
            r[i] += q * r[j]
        for r in V:
            r[i] += q * r[j]
        Vi[j] = [a - q * b for a, b in zip(Vi[j], Vi[i])]

    def col_swap(i, j):
        if i == j:
            return
        for r in M:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if M[i][j] != 0 and (best is None or abs(M[i][j]) < abs(M[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        row_swap(t, best[0])
        col_swap(t, best[1])
        while True:
            dirty = False
            for i in range(t + 1, m):
                if M[i][t]:
                    row_add(i, t, -(M[i][t] // M[t][t]))
                    if M[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if M[t][j]:
                    col_add(j, t, -(M[t][j] // M[t][t]))
                    if M[t][j]:
                        dirty = True
            if dirty:
                # move the smallest leftover of row/column t onto the pivot
                cands = [(abs(M[i][t]), i, t) for i in range(t, m) if M[i][t]]
                cands += [(abs(M[t][j]), t, j) for j in range(t + 1, n) if M[t][j]]
                _, i, j = min(cands)
                row_swap(t, i)
                col_swap(t, j)
                continue
            p = M[t][t]
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if M[i][j] % p),
                None,
            )
            if bad is None:
                break
            row_add(t, bad, 1)
        if M[t][t] < 0:
            row_neg(t)

    return SmithDecomposition(mat(U), mat(M), mat(V), mat(Ui), mat(Vi))


def hermite_normal_form(rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> IntMatrix:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Zero rows are dropped, pivots are positive and entries above a pivot are
    reduced into ``[0, pivot)``.  Two generating sets span the same lattice
    exactly when their Hermite forms agree.
    """
    H = [list(r) for r in rows if any(r)]
    if not H:
        return ()
    n = len(H[0])
    r = 0
    for c in range(n):
        # Euclid on column c among rows r.. to leave a single nonzero entry
        while True:
            nz = [i for i in range(r, len(H)) if H[i][c] != 0]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda i: abs(H[i][c]))
            for i in nz:
                if i != piv:
                    q = H[i][c] // H[piv][c]
                    H[i] = [a - q * b for a, b in zip(H[i], H[piv])]
        nz = [i for i in range(r, len(H)) if H[i][c] != 0]
        if not nz:
            continue
        H[r], H[nz[0]] = H[nz[0]], H[r]
        if H[r][c] < 0:
            H[r] = [-a for a in H[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                H[i] = [a - q * b for a, b in zip(H[i], H[r])]
        r += 1
        if r == len(H):
            break
    return mat(H[:r])


def saturation_basis(vectors: Sequence[Sequence[int]], n: int) -> IntMatrix:
    """A lattice basis of ``span_Q(vectors) ∩ Z^n`` in Hermite normal form."""
    vectors = [v for v in vectors if any(v)]
    if not vectors:
        return ()
    snf = smith_normal_form(vectors, n)
    return hermite_normal_form(snf.V_inv[: snf.rank])


def integer_kernel(A: Sequence[Sequence[int]], n: int) -> IntMatrix:
    """Lattice basis (Hermite form) of ``{x in Z^n : A x = 0}``."""
    if not A or not any(any(r) for r in A):
        return identity(n)
    snf = smith_normal_form(A, n)
    cols = transpose(snf.V)
    return hermite_normal_form(cols[snf.rank:])


def extends_to_basis(vectors: Sequence[Sequence[int]], n: int) -> bool:
    """True iff ``vectors`` can be completed to a Z-basis of ``Z^n``."""
    if not vectors:
        return True
    if rank(vectors) < len(vectors):
        return False
    return all(d == 1 for d in smith_normal_form(vectors, n).diagonal)


def express_in_basis(basis: Sequence[Sequence[int]], v: Sequence[int]) -> Optional[Tuple[Fraction, ...]]:
    """Rational coefficients ``c`` with ``sum c_i basis_i == v``, or None.

    ``basis`` must be linearly independent.
    """
    k = len(basis)
    n = len(v)
    # augmented system  B^T c = v
    rows = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(v[i])] for i in range(n)]
    piv_cols = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(rows[i][k] != 0 for i in range(r, n)):
        return None
    coeffs = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        coeffs[c] = rows[i][k]
    return tuple(coeffs)


def integer_coordinates(basis: Sequence[Sequence[int]], v: Sequence[int]) -> IntVector:
    """Coordinates of a lattice vector in a lattice basis; raises if not integral."""
    c = express_in_basis(basis, v)
    if c is None or any(x.denominator != 1 for x in c):
        raise ValueError(f"{tuple(v)} is not in the lattice spanned by the basis")
    return tuple(int(x) for x in c)


def complete_to_basis(v: Sequence[int]) -> IntMatrix:
    """A unimodular matrix whose first row is the primitive vector ``v``."""
    n = len(v)
    snf = smith_normal_form([list(v)], n)
    if snf.diagonal[0] != 1:
        raise DegenerateInput(f"{tuple(v)} is not primitive")
    # v = U^{-1} * (1, 0, ..., 0) * V^{-1} and U is +-1, so v = +-row 0 of V^{-1}
    rows = [list(r) for r in snf.V_inv]
    if tuple(rows[0]) != tuple(v):
        rows[0] = [-a for a in rows[0]]
        rows[-1] = [-a for a in rows[-1]] if n > 1 else rows[-1]
    return mat(rows)
