"""The 3^8 irreducible module labels of V_{K12}^tau and their fusion ring.

Labels are ``S^a[x]`` and ``T^a[x;i]`` with a in K12*/K12 = F3^6 (the block
coordinates of :class:`orbicheck.lattices.K12Discriminant`), x in F3 and
i in {1, 2}.

Quadratic form convention.  ``three_weight(m)`` is 3*wt(m) mod 3 computed
from the lowest weight congruences, reading the norm inside the twisted
weight as 3|a|^2.  ``qform`` is ``2 * three_weight``: that is the
normalisation for which B = (q(m+n) - q(m) - q(n))/2 reproduces the closed
bilinear formulas and q(S^a[0]) equals q_K12(a) = 3|a|^2 mod 3.

Linear coordinates.  The vector (a, x, t) in F3^8 stands for
``S^a[x]`` (t = 0), ``T^{-a}[x;1]`` (t = 1) and ``T^{a}[-x;2]`` (t = 2);
under this map the fusion product is vector addition.
"""

from dataclasses import dataclass

import numpy as np

from . import f3
from .lattices import K12Discriminant

ORDER = 3 ** 8


class FusionError(ValueError):
    pass


@dataclass(frozen=True)
class ModuleLabel:
    kind: str
    a: tuple
    x: int
    i: int = 0

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(t) % 3 for t in self.a))
        object.__setattr__(self, "x", int(self.x) % 3)
        if len(self.a) != 6:
            raise FusionError("coset label needs six F3 coordinates")
        if self.kind == "S":
            if self.i:
                raise FusionError("S-labels carry no twist index")
        elif self.kind == "T":
            if int(self.i) % 3 == 0:
                raise FusionError("twist index must be 1 or 2")
            object.__setattr__(self, "i", int(self.i) % 3)
        else:
            raise FusionError(f"unknown label kind {self.kind!r}")

    @classmethod
    def S(cls, a, x):
        return cls("S", tuple(a), x)

    @classmethod
    def T(cls, a, x, i):
        return cls("T", tuple(a), x, i)

    def to_vector(self):
        a = np.array(self.a, dtype=np.int64)
        if self.kind == "S":
            return np.concatenate([a, [self.x, 0]]) % 3
        if self.i == 1:
            return np.concatenate([-a, [self.x, 1]]) % 3
        return np.concatenate([a, [-self.x, 2]]) % 3

    @classmethod
    def from_vector(cls, v):
        v = [int(t) % 3 for t in v]
        a, x, t = v[:6], v[6], v[7]
        if t == 0:
            return cls.S(a, x)
        if t == 1:
            return cls.T([-s for s in a], x, 1)
        return cls.T(a, -x, 2)

    def index(self):
        return int(f3.index_of(self.to_vector()))

    def __str__(self):
        a = "".join(str(t) for t in self.a)
        if self.kind == "S":
            return f"S:{a}:{self.x}"
        return f"T:{a}:{self.x}:{self.i}"

    @classmethod
    def parse(cls, text):
        parts = text.strip().split(":")
        if parts[0] == "S" and len(parts) == 3:
            return cls.S([int(c) for c in parts[1]], int(parts[2]))
        if parts[0] == "T" and len(parts) == 4:
            return cls.T([int(c) for c in parts[1]], int(parts[2]), int(parts[3]))
        raise FusionError(f"cannot parse label {text!r}")


IDENTITY = ModuleLabel.S((0,) * 6, 0)


def _add(a, b, s=1):
    return tuple((p + s * q) % 3 for p, q in zip(a, b))


def _neg(a):
    return tuple((-p) % 3 for p in a)


def fuse(m1, m2):
    """Fusion product by the four case rules."""
    if m1.kind == "S" and m2.kind == "S":
        return ModuleLabel.S(_add(m1.a, m2.a), m1.x + m2.x)
    if m1.kind == "T" and m2.kind == "S":
        m1, m2 = m2, m1
    if m1.kind == "S":
        i = m2.i
        return ModuleLabel.T(_add(m2.a, m1.a, -i), m2.x + i * m1.x, i)
    if m1.i != m2.i:
        if m1.i == 2:
            m1, m2 = m2, m1
        return ModuleLabel.S(_add(m2.a, m1.a, -1), m1.x - m2.x)
    return ModuleLabel.T(_neg(_add(m1.a, m2.a)), -(m1.x + m2.x), 2 * m1.i)


def fuse_arrays(a1, x1, i1, a2, x2, i2):
    """Vectorised case rules; i = 0 marks S-labels.  a*: (n, 6), others (n,)."""
    a1, a2 = np.asarray(a1), np.asarray(a2)
    x1, x2, i1, i2 = (np.asarray(t) for t in (x1, x2, i1, i2))
    # order each pair so that an S-label comes first and a 1-twist precedes a 2-twist
    swap = ((i1 != 0) & (i2 == 0)) | ((i1 == 2) & (i2 == 1))
    sw = swap[:, None]
    a1, a2 = np.where(sw, a2, a1), np.where(sw, a1, a2)
    x1, x2 = np.where(swap, x2, x1), np.where(swap, x1, x2)
    i1, i2 = np.where(swap, i2, i1), np.where(swap, i1, i2)

    ss = (i1 == 0) & (i2 == 0)
    st = (i1 == 0) & (i2 != 0)
    tt_mixed = (i1 == 1) & (i2 == 2)
    tt_same = (i1 != 0) & (i1 == i2)

    a = np.zeros_like(a1)
    x = np.zeros_like(x1)
    i = np.zeros_like(i1)
    a = np.where(ss[:, None], a1 + a2, a)
    x = np.where(ss, x1 + x2, x)
    a = np.where(st[:, None], a2 - i2[:, None] * a1, a)
    x = np.where(st, x2 + i2 * x1, x)
    i = np.where(st, i2, i)
    a = np.where(tt_mixed[:, None], a2 - a1, a)
    x = np.where(tt_mixed, x1 - x2, x)
    a = np.where(tt_same[:, None], -(a1 + a2), a)
    x = np.where(tt_same, -(x1 + x2), x)
    i = np.where(tt_same, (2 * i1) % 3, i)
    return a % 3, x % 3, i


def labels_to_vectors(a, x, i):
    """Array version of :meth:`ModuleLabel.to_vector`."""
    a = np.asarray(a) % 3
    x = np.asarray(x) % 3
    i = np.asarray(i)
    sign = np.where(i == 1, -1, 1)
    av = (sign[:, None] * a) % 3
    xv = np.where(i == 2, -x, x) % 3
    return np.hstack([av, xv[:, None], i[:, None]])


def vectors_to_labels(v):
    v = np.asarray(v) % 3
    t = v[:, 7]
    sign = np.where(t == 1, -1, 1)
    a = (sign[:, None] * v[:, :6]) % 3
    x = np.where(t == 2, -v[:, 6], v[:, 6]) % 3
    return a, x, t


class FusionRing:
    """Label arithmetic together with q and B derived from the K12 discriminant."""

    def __init__(self, disc=None):
        self.disc = K12Discriminant() if disc is None else disc
        # 3|a|^2 reduced mod 3 and 3<a|b> mod 3, both from lattice representatives
        self.three_norm = self.disc.three_norms() % 3
        self.three_inner = self.disc.three_inner_table()
        self.vectors = f3.all_vectors(8)
        self._gram = None

    @staticmethod
    def labels():
        return [ModuleLabel.from_vector(v) for v in f3.all_vectors(8)]

    def _aidx(self, a):
        return int(f3.index_of(np.array(a)))

    # -- weights and forms --------------------------------------------------

    def three_weight(self, m):
        """3 wt(m) mod 3."""
        n = int(self.three_norm[self._aidx(m.a)])
        if m.kind == "S":
            return (2 * n) % 3
        return (2 * (1 + m.x + n)) % 3

    def s_lowest_weight(self, a):
        """Lowest weight of S^a[0], taken as half the minimum norm of the coset a + K12."""
        return self.disc.coset_min_norm(a) / 2

    def qform(self, m):
        return (2 * self.three_weight(m)) % 3

    def bform_closed(self, m1, m2):
        if m1.kind == "T" and m2.kind == "S":
            m1, m2 = m2, m1
        ip = int(self.three_inner[self._aidx(m1.a), self._aidx(m2.a)])
        if m1.kind == "S" and m2.kind == "S":
            return ip % 3
        if m1.kind == "S":
            return (-m2.i * (ip + m1.x)) % 3
        return (m1.i * m2.i * (ip - m1.x - m2.x + 1)) % 3

    def bform_polar(self, m1, m2):
        return (2 * (self.qform(fuse(m1, m2)) - self.qform(m1) - self.qform(m2))) % 3

    def bform(self, m1, m2):
        b1, b2 = self.bform_closed(m1, m2), self.bform_polar(m1, m2)
        if b1 != b2:
            raise FusionError(f"closed and polar forms disagree on {m1}, {m2}: {b1} != {b2}")
        return b1

    # -- linear-coordinate versions ----------------------------------------

    def q_vectors(self, v):
        """q on an array of 8-vectors in linear coordinates."""
        a, x, t = vectors_to_labels(v)
        n = self.three_norm[f3.index_of(a)]
        return np.where(t == 0, n, 1 + x + n) % 3

    def b_closed_arrays(self, v1, v2):
        a1, x1, i1 = vectors_to_labels(v1)
        a2, x2, i2 = vectors_to_labels(v2)
        ip = self.three_inner[f3.index_of(a1), f3.index_of(a2)]
        ss = (i1 == 0) & (i2 == 0)
        st = (i1 == 0) & (i2 != 0)
        ts = (i1 != 0) & (i2 == 0)
        out = np.where(ss, ip, 0)
        out = np.where(st, -i2 * (ip + x1), out)
        out = np.where(ts, -i1 * (ip + x2), out)
        tt = (i1 != 0) & (i2 != 0)
        out = np.where(tt, i1 * i2 * (ip - x1 - x2 + 1), out)
        return out % 3

    def gram(self):
        """8x8 matrix of B on the standard basis of the linear coordinates."""
        if self._gram is None:
            e = np.eye(8, dtype=np.int64)
            g = np.zeros((8, 8), dtype=np.int64)
            for r in range(8):
                g[r] = self.b_closed_arrays(np.repeat(e[r:r + 1], 8, axis=0), e)
            self._gram = g
        return self._gram

    def singular_vectors(self):
        q = self.q_vectors(self.vectors)
        return self.vectors[(q == 0) & (self.vectors.any(axis=1))]


# --- exhaustive / sampled checks -------------------------------------------
# These work on integer indices: a label is (coset index, x, i) and a coset
# index is the base-3 number of a; sums of cosets come from a 729 x 729 table.

CHUNK = 256


class _Tables:
    def __init__(self, ring):
        cos = f3.all_vectors(6)
        self.add = f3.index_of(cos[:, None, :] + cos[None, :, :]).astype(np.int32)
        self.neg = f3.index_of(-cos).astype(np.int32)
        v = ring.vectors
        self.vec_a = f3.index_of(v[:, :6]).astype(np.int32)
        self.vec_x = v[:, 6].astype(np.int32)
        self.vec_t = v[:, 7].astype(np.int32)
        a, x, i = vectors_to_labels(v)
        self.lab_a = f3.index_of(a).astype(np.int32)
        self.lab_x = x.astype(np.int32)
        self.lab_i = i.astype(np.int32)

    def fuse(self, p, q):
        """Case rules on label indices; returns (coset index, x, i)."""
        a1, x1, i1 = self.lab_a[p], self.lab_x[p], self.lab_i[p]
        a2, x2, i2 = self.lab_a[q], self.lab_x[q], self.lab_i[q]
        swap = ((i1 != 0) & (i2 == 0)) | ((i1 == 2) & (i2 == 1))
        a1, a2 = np.where(swap, a2, a1), np.where(swap, a1, a2)
        x1, x2 = np.where(swap, x2, x1), np.where(swap, x1, x2)
        i1, i2 = np.where(swap, i2, i1), np.where(swap, i1, i2)
        ss = (i1 == 0) & (i2 == 0)
        st = (i1 == 0) & (i2 != 0)
        mixed = (i1 == 1) & (i2 == 2)
        same = (i1 != 0) & (i1 == i2)
        a = self.add[a1, a2]
        # -i*a1 is -a1 for i = 1 and a1 for i = 2
        a = np.where(st, self.add[a2, np.where(i2 == 1, self.neg[a1], a1)], a)
        a = np.where(mixed, self.add[a2, self.neg[a1]], a)
        a = np.where(same, self.neg[a], a)
        x = np.where(ss, x1 + x2, 0)
        x = np.where(st, x2 + i2 * x1, x)
        x = np.where(mixed, x1 - x2, x)
        x = np.where(same, -(x1 + x2), x)
        i = np.where(st, i2, 0)
        i = np.where(same, (2 * i1) % 3, i)
        return a, x % 3, i

    def label_to_vector_index(self, a, x, i):
        va = np.where(i == 1, self.neg[a], a)
        vx = np.where(i == 2, -x, x) % 3
        return va + 729 * (vx + 3 * i)

    def vector_sum_index(self, p, q):
        a = self.add[self.vec_a[p], self.vec_a[q]]
        x = (self.vec_x[p] + self.vec_x[q]) % 3
        t = (self.vec_t[p] + self.vec_t[q]) % 3
        return a + 729 * (x + 3 * t)


def _pairs(ring, rows, rng):
    """Yield (first, second) index arrays covering rows x all labels in chunks."""
    n = len(ring.vectors)
    idx = np.arange(n) if rows is None else np.sort(rng.choice(n, size=rows, replace=False))
    for s in range(0, len(idx), CHUNK):
        block = idx[s:s + CHUNK]
        yield np.repeat(block, n), np.tile(np.arange(n), len(block))


def check_fusion_is_vector_addition(ring, rows=None, rng=None):
    """Compare the case rules against addition in linear coordinates.

    ``rows=None`` runs all 3^8 x 3^8 pairs; otherwise ``rows`` random first
    arguments are tested against everything.
    """
    tab = _Tables(ring)
    bad = 0
    for p, q in _pairs(ring, rows, rng):
        got = tab.label_to_vector_index(*tab.fuse(p, q))
        bad += int((got != tab.vector_sum_index(p, q)).sum())
    return bad


def check_commutative(ring, rows=None, rng=None):
    tab = _Tables(ring)
    bad = 0
    for p, q in _pairs(ring, rows, rng):
        left = tab.label_to_vector_index(*tab.fuse(p, q))
        right = tab.label_to_vector_index(*tab.fuse(q, p))
        bad += int((left != right).sum())
    return bad


def check_associative_sample(count, rng):
    bad = 0
    for _ in range(count):
        m = [ModuleLabel.from_vector(rng.integers(0, 3, 8)) for _ in range(3)]
        if fuse(fuse(m[0], m[1]), m[2]) != fuse(m[0], fuse(m[1], m[2])):
            bad += 1
    return bad


def check_bilinear(ring, rows=None, rng=None):
    """Closed B == polarisation of q == v1 G v2^T over all (or sampled) pairs."""
    tab = _Tables(ring)
    v = ring.vectors
    n = len(v)
    qv = ring.q_vectors(v).astype(np.int32)
    vg = (v @ ring.gram()) % 3
    la, lx, li = tab.lab_a, tab.lab_x, tab.lab_i
    bad = 0
    for p, q in _pairs(ring, rows, rng):
        ip = ring.three_inner[la[p], la[q]].astype(np.int32)
        i1, i2, x1, x2 = li[p], li[q], lx[p], lx[q]
        closed = np.where((i1 == 0) & (i2 == 0), ip, 0)
        closed = np.where((i1 == 0) & (i2 != 0), -i2 * (ip + x1), closed)
        closed = np.where((i1 != 0) & (i2 == 0), -i1 * (ip + x2), closed)
        closed = np.where((i1 != 0) & (i2 != 0), i1 * i2 * (ip - x1 - x2 + 1), closed)
        closed %= 3
        polar = (2 * (qv[tab.vector_sum_index(p, q)] - qv[p] - qv[q])) % 3
        rows_p = p[::n]
        matrix = ((vg[rows_p] @ v.T) % 3).ravel()
        bad += int(((closed != polar) | (closed != matrix)).sum())
    return bad


def check_q_is_quadratic(ring):
    """q(v) = v G v^T on every label, and q(lambda v) = lambda^2 q(v)."""
    v = ring.vectors
    qv = ring.q_vectors(v)
    g = ring.gram()
    direct = np.einsum("ij,jk,ik->i", v, g, v) % 3
    scaled = ring.q_vectors(2 * v)
    return int((direct != qv).sum() + (scaled != qv).sum())


def radical(ring):
    return f3.nullspace(ring.gram())
