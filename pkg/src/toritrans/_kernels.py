"""Hot integer loops of the Hilbert-basis computation.

Each kernel exists twice: a numba ``@njit`` version working on int64 arrays and
a numpy version that also accepts ``dtype=object`` arrays of Python ints.  The
numba path is used when numba imports, ``TORITRANS_NUMBA`` is not set to a
false value, and every intermediate provably fits in int64.  Otherwise the
numpy path runs, on object arrays when magnitudes demand it, so results stay
exact either way.
"""
from __future__ import annotations

import os

import numpy as np

_FALSE = {"0", "false", "no", "off"}

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

# keep every product and running sum far from 2**63
_INT64_SAFE = 1 << 28


def numba_enabled() -> bool:
    return HAVE_NUMBA and os.environ.get("TORITRANS_NUMBA", "1").strip().lower() not in _FALSE


def backend() -> str:
    return "numba" if numba_enabled() else "numpy"


def _fits(*arrays) -> bool:
    return all(a.size == 0 or int(np.max(np.abs(a.astype(object)))) < _INT64_SAFE for a in arrays)


def _as_array(rows, width: int) -> np.ndarray:
    a = np.array([list(r) for r in rows], dtype=object)
    return a.reshape(len(rows), width)


# --------------------------------------------------------------------------
# parallelepiped reduction
# --------------------------------------------------------------------------

def _reduce_numpy(points, gens, adj, d):
    lam = points.dot(adj.T)
    fl = lam // d
    return points - fl.dot(gens)


if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _reduce_numba(points, gens, adj, d):
        k, n = points.shape
        out = np.empty_like(points)
        for p in range(k):
            for j in range(n):
                out[p, j] = points[p, j]
            for i in range(adj.shape[0]):
                s = 0
                for j in range(n):
                    s += adj[i, j] * points[p, j]
                # floor division, d > 0
                q = s // d
                if q != 0:
                    for j in range(n):
                        out[p, j] -= q * gens[i, j]
        return out


def reduce_to_parallelepiped(points, gens, adj, d: int):
    """Translate lattice points into the half-open parallelepiped of ``gens``.

    Args:
        points: ``k x n`` coset representatives.
        gens: ``n x n`` simplicial generators as rows.
        adj: the adjugate of ``gens.T`` scaled so that ``adj @ x / d`` gives
            the coefficients of ``x`` in the generators; ``d > 0``.

    Returns:
        list of reduced points as tuples of Python ints.
    """
    n = len(gens)
    P = _as_array(points, n)
    G = _as_array(gens, n)
    A = _as_array(adj, n)
    bound = int(d) * max(1, int(np.max(np.abs(G)))) * n
    if numba_enabled() and _fits(P, A) and bound < _INT64_SAFE and (
        P.size == 0 or int(np.max(np.abs(P))) * int(np.max(np.abs(A))) * n < _INT64_SAFE
    ):
        out = _reduce_numba(P.astype(np.int64), G.astype(np.int64), A.astype(np.int64), np.int64(d))
    else:
        out = _reduce_numpy(P, G, A, d)
    return [tuple(int(x) for x in row) for row in out]


# --------------------------------------------------------------------------
# irreducibility filter
# --------------------------------------------------------------------------

def _irreducible_numpy(points, ineqs):
    keep = []
    basis = np.zeros((0, points.shape[1]), dtype=points.dtype)
    for i in range(points.shape[0]):
        p = points[i]
        if basis.shape[0]:
            diff = (p - basis).dot(ineqs.T)
            if (diff >= 0).all(axis=1).any():
                continue
        keep.append(i)
        basis = np.vstack([basis, p[None, :]])
    return keep


if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _irreducible_numba(points, ineqs):
        k, n = points.shape
        h = ineqs.shape[0]
        keep = np.empty(k, dtype=np.int64)
        nkeep = 0
        for i in range(k):
            reducible = False
            for t in range(nkeep):
                j = keep[t]
                inside = True
                for f in range(h):
                    s = 0
                    for c in range(n):
                        s += ineqs[f, c] * (points[i, c] - points[j, c])
                    if s < 0:
                        inside = False
                        break
                if inside:
                    reducible = True
                    break
            if not reducible:
                keep[nkeep] = i
                nkeep += 1
        return keep[:nkeep]


def irreducible_indices(points, ineqs) -> list:
    """Indices of the irreducible elements among degree-sorted semigroup points.

    ``points`` must be sorted by a grading that is strictly positive on the
    nonzero points of the cone ``{x : ineqs @ x >= 0}``, and must contain the
    Hilbert basis.  A point is dropped when subtracting an already accepted
    point leaves something in the cone.
    """
    if not points:
        return []
    n = len(points[0])
    P = _as_array(points, n)
    H = _as_array(ineqs, n)
    if numba_enabled() and _fits(P, H) and int(np.max(np.abs(P))) * max(1, int(np.max(np.abs(H)))) * n * 2 < _INT64_SAFE:
        return [int(i) for i in _irreducible_numba(P.astype(np.int64), H.astype(np.int64))]
    return _irreducible_numpy(P, H)
