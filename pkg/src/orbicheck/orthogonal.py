"""Quadratic spaces over F3 and their orthogonal groups as permutation groups.

Convention: a space is given by a symmetric matrix G with q(v) = v G v^T and
B(x, y) = x G y^T, so B is the polar form halved and B(v, v) = q(v).  Maps
act on row vectors, x -> x M.  Points of the permutation domain are the
indices of :func:`orbicheck.f3.all_vectors`.
"""

import numpy as np

from . import f3
from .perm import PermGroup

INV3 = {1: 1, 2: 2}


class OrthogonalError(ValueError):
    pass


class QuadSpaceF3:
    def __init__(self, gram):
        g = f3.mod3(gram)
        if g.ndim != 2 or g.shape[0] != g.shape[1] or (g != g.T).any():
            raise OrthogonalError("Gram matrix must be square and symmetric")
        self.gram = g
        self.n = g.shape[0]
        if 3 ** self.n > 3 ** 8:
            raise OrthogonalError("degree cap is 3^8 points")
        self.vectors = f3.all_vectors(self.n)
        self._q = None

    @property
    def qvalues(self):
        if self._q is None:
            self._q = np.einsum("ij,jk,ik->i", self.vectors, self.gram, self.vectors) % 3
        return self._q

    def q(self, v):
        v = f3.mod3(v)
        return int(v @ self.gram @ v) % 3

    def bform(self, x, y):
        return int(f3.mod3(x) @ self.gram @ f3.mod3(y)) % 3

    def is_nondegenerate(self):
        return f3.rank(self.gram) == self.n

    def determinant(self):
        return _det3(self.gram)

    def kind(self):
        """'plus' or 'minus' for even dimension, None for odd."""
        if self.n % 2:
            return None
        m = self.n // 2
        d = (_det3(self.gram) * (-1) ** m) % 3
        return "plus" if d == 1 else "minus"

    def singular_count(self):
        """Nonzero vectors with q = 0."""
        return int((self.qvalues == 0).sum()) - 1

    def anisotropic(self):
        return np.nonzero(self.qvalues)[0]

    def index(self, v):
        return int(f3.index_of(v))


def _det3(m):
    a = [[int(t) % 3 for t in row] for row in m]
    n, det = len(a), 1
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        inv = INV3[a[c][c]]
        for r in range(c + 1, n):
            f = a[r][c] * inv
            a[r] = [(x - f * y) % 3 for x, y in zip(a[r], a[c])]
    return det % 3


def standard_space(n, kind=None):
    """Diagonal form diag(1, ..., 1, d) of the requested type."""
    g = np.eye(n, dtype=np.int64)
    if n % 2 == 0:
        for d in (1, 2):
            g[-1, -1] = d
            if QuadSpaceF3(g).kind() == kind:
                break
    return QuadSpaceF3(g)


def reflection(space, v):
    """Matrix of x -> x - 2 B(x, v)/q(v) v."""
    v = f3.mod3(v)
    qv = space.q(v)
    if qv == 0:
        raise OrthogonalError("cannot reflect in an isotropic vector")
    c = (2 * INV3[qv]) % 3
    return (np.eye(space.n, dtype=np.int64) - c * np.outer(space.gram @ v, v)) % 3


def is_isometry(space, m):
    m = f3.mod3(m)
    return bool(((m @ space.gram @ m.T - space.gram) % 3 == 0).all()) and f3.rank(m) == space.n


def matrix_to_perm(space, m):
    return f3.index_of(space.vectors @ f3.mod3(m)).astype(np.int16)


def perm_to_matrix(space, p):
    basis = np.eye(space.n, dtype=np.int64)
    return space.vectors[p[f3.index_of(basis)]]


def base_hint(space):
    return [int(i) for i in f3.index_of(np.eye(space.n, dtype=np.int64))]


def preserves_q(space, perm):
    return bool((space.qvalues[perm] == space.qvalues).all())


# --- groups ------------------------------------------------------------------

def _saturate(space, draw, seed, start, confirm):
    """Grow a generating set from ``draw(rng)`` until ``confirm`` new draws are all members."""
    rng = np.random.default_rng(seed)
    gens = [draw(rng) for _ in range(start)]
    while True:
        grp = PermGroup(3 ** space.n, [matrix_to_perm(space, g) for g in gens],
                        base_hint(space), seed=seed)
        extra = [draw(rng) for _ in range(confirm)]
        outside = [g for g in extra if not grp.contains(matrix_to_perm(space, g))]
        if not outside:
            return grp, gens
        gens.extend(outside)


def random_anisotropic(space, rng):
    cand = space.anisotropic()
    return space.vectors[cand[rng.integers(len(cand))]]


def build_orthogonal_group(space, seed=0, confirm=8):
    """O(q) generated by random reflections, grown until new reflections add nothing."""
    if not space.is_nondegenerate():
        raise OrthogonalError("form is degenerate")
    if space.n == 0:
        return PermGroup(1, []), []
    return _saturate(space, lambda rng: reflection(space, random_anisotropic(space, rng)),
                     seed, start=space.n + 2, confirm=confirm)


def random_omega_element(space, rng):
    """sigma_u sigma_v with q(u) = q(v): even Dickson invariant, square spinor norm."""
    u = random_anisotropic(space, rng)
    cand = np.nonzero(space.qvalues == space.q(u))[0]
    v = space.vectors[cand[rng.integers(len(cand))]]
    return (reflection(space, u) @ reflection(space, v)) % 3


def build_omega(space, seed=0, confirm=8):
    return _saturate(space, lambda rng: random_omega_element(space, rng),
                     seed, start=space.n + 2, confirm=confirm)


def cartan_dieudonne(space, m):
    """Anisotropic vectors v_1..v_k with m = sigma_{v_1} ... sigma_{v_k} (applied left to right)."""
    m = f3.mod3(m)
    if not is_isometry(space, m):
        raise OrthogonalError("matrix is not an isometry")
    h = m.copy()
    fixed = []  # orthogonal anisotropic vectors fixed by h
    peeled = []  # reflections r with h_new = h_old then r
    for _ in range(space.n):
        # anisotropic x orthogonal to everything fixed so far
        ok = space.qvalues != 0
        for w in fixed:
            ok &= (space.vectors @ (space.gram @ w)) % 3 == 0
        cand = np.nonzero(ok)[0]
        if not len(cand):
            raise OrthogonalError("no anisotropic vector in the complement")
        x = space.vectors[cand[0]]
        y = (x @ h) % 3
        if (y != x).any():
            d = (y - x) % 3
            step = [d] if space.q(d) else [(x + y) % 3, x]
            for v in step:
                h = (h @ reflection(space, v)) % 3
            peeled.extend(step)
        if ((x @ h) % 3 != x).any():
            raise OrthogonalError("decomposition step failed to fix x")
        fixed.append(x)
    if not (h == np.eye(space.n, dtype=np.int64)).all():
        raise OrthogonalError("residual map is not the identity")
    # m then peeled reflections = 1, so m = reversed product (each reflection is an involution)
    return peeled[::-1]


def dickson_spinor(space, m):
    """(Dickson invariant, spinor class) in F2 x F2; spinor class 0 means square."""
    vs = cartan_dieudonne(space, m)
    prod = 1
    for v in vs:
        prod = (prod * space.q(v)) % 3
    return len(vs) % 2, f3.square_class(prod)


def product_of_reflections(space, vectors):
    out = np.eye(space.n, dtype=np.int64)
    for v in vectors:
        out = (out @ reflection(space, v)) % 3
    return out


def minus_identity(space):
    return (-np.eye(space.n, dtype=np.int64)) % 3


def singular_line_classes(space):
    """Block id per point: lines {v, -v} of nonzero vectors; 0 is its own block."""
    idx = np.arange(len(space.vectors))
    neg = f3.index_of(-space.vectors)
    rep = np.minimum(idx, neg)
    _, classes = np.unique(rep, return_inverse=True)
    return classes


def is_identity_matrix(m):
    return bool((f3.mod3(m) == np.eye(len(m), dtype=np.int64)).all())
