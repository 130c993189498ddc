"""Small dense linear algebra over F_3 on numpy integer arrays.

Vectors are rows.  Everything is reduced mod 3 on the way in, so callers
may pass signed integers.
"""

import itertools

import numpy as np

P = 3
INV = {1: 1, 2: 2}


def mod3(a):
    return np.asarray(a, dtype=np.int64) % P


def rref(m):
    """Row-reduced echelon form; returns (reduced matrix, pivot columns)."""
    a = mod3(m).copy()
    if a.ndim == 1:
        a = a[None, :]
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * INV[int(a[r, c])]) % P
        others = np.nonzero(a[:, c])[0]
        for k in others:
            if k != r:
                a[k] = (a[k] - a[k, c] * a[r]) % P
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m):
    return len(rref(m)[1])


def row_basis(m):
    return rref(m)[0]


def nullspace(m):
    """Basis (as rows) of {v : m v^T = 0}."""
    a = mod3(m)
    if a.ndim == 1:
        a = a[None, :]
    n = a.shape[1]
    red, piv = rref(a)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = np.zeros(n, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(piv):
            v[c] = (-red[i, f]) % P
        basis.append(v)
    if not basis:
        return np.zeros((0, n), dtype=np.int64)
    return np.array(basis)


def inverse(m):
    a = mod3(m)
    n = a.shape[0]
    red, piv = rref(np.hstack([a, np.eye(n, dtype=np.int64)]))
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ValueError("matrix is singular over F3")
    return red[:n, n:]


def solve_left(basis, v):
    """Coefficients c with c @ basis == v, or None if v is not in the row span."""
    b = mod3(basis)
    k = b.shape[0]
    aug = np.vstack([b, mod3(v)[None, :]]).T
    red, piv = rref(aug)
    if k in piv:
        return None
    c = np.zeros(k, dtype=np.int64)
    for i, p in enumerate(piv):
        c[p] = red[i, k]
    return c


def span(basis):
    """All vectors of the row span, in lexicographic order of coefficients."""
    b = mod3(basis)
    k = b.shape[0]
    coeffs = np.array(list(itertools.product(range(P), repeat=k)), dtype=np.int64)
    if k == 0:
        return np.zeros((1, b.shape[1] if b.ndim == 2 else 0), dtype=np.int64)
    return (coeffs @ b) % P


def all_vectors(n):
    """Every vector of F_3^n; row i is the base-3 expansion of i (digit k = coordinate k)."""
    idx = np.arange(P ** n)
    return (idx[:, None] // (P ** np.arange(n))[None, :]) % P


def index_of(vecs):
    """Inverse of :func:`all_vectors`."""
    v = mod3(vecs)
    n = v.shape[-1]
    return v @ (P ** np.arange(n))


def square_class(c):
    """0 for squares (1) and 1 for non-squares (2) in F_3^*."""
    c = int(c) % P
    if c == 0:
        raise ValueError("zero has no square class")
    return 0 if c == 1 else 1
