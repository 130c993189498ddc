"""Exact lattices glued from copies of sqrt(2)A2.

Coordinates: a vector is written in the basis e1, e2 of each sqrt(2)A2 block
(<e1,e1> = <e2,e2> = 4, <e1,e2> = -2) and stored as an integer vector equal
to 6 times those coordinates.  Every vector of every lattice here (duals
included) then has integer entries, and <x, y> = x G y^T / 36 with G the
block-diagonal Gram matrix.

Discriminant group of one block: (s1, s2) lies in sqrt(2)A2* iff
s1 + s2 = 0 mod 3.  Its F4 part is (s1 mod 2) + w (s2 mod 2) and its F3 part
is s1 mod 3; see :func:`block_class`.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np
import sympy

from . import f3
from .exact import F4_MUL, QSeries

SCALE = 6
SCALE2 = SCALE * SCALE
BLOCK_GRAM = np.array([[4, -2], [-2, 4]], dtype=np.int64)

# F4 coset representatives of (1/2)sqrt(2)A2 / sqrt(2)A2, scaled
REP4 = {0: (0, 0), 1: (3, 0), 2: (0, 3), 3: (3, 3)}
# F3 coset representatives of 2(sqrt(2)A2)* / sqrt(2)A2, scaled; rep3(2) = e1 + e2 - rep3(1)
REP3 = {0: (0, 0), 1: (4, 2), 2: (2, 4)}
# one order-3 rotation per block: e1 -> e2, e2 -> -e1 - e2 (row-vector convention)
TAU_BLOCK = np.array([[0, 1], [-1, -1]], dtype=np.int64)

ENUM_NORM_CAP = 6


class LatticeError(ValueError):
    pass


class GlueCalibrationError(LatticeError):
    pass


def ambient_gram(nblocks):
    g = np.zeros((2 * nblocks, 2 * nblocks), dtype=np.int64)
    for k in range(nblocks):
        g[2 * k:2 * k + 2, 2 * k:2 * k + 2] = BLOCK_GRAM
    return g


def inner(x, y):
    """Exact inner product of two scaled vectors."""
    x = np.asarray(x, dtype=object)
    y = np.asarray(y, dtype=object)
    g = ambient_gram(len(x) // 2).astype(object)
    return Fraction(int(x @ g @ y), SCALE2)


def norm(x):
    return inner(x, x)


def block_class(s1, s2):
    """(F4 symbol, F3 symbol) of the class of a scaled block vector in sqrt(2)A2*/sqrt(2)A2."""
    if (s1 + s2) % 3:
        raise LatticeError(f"({s1}, {s2}) is not in the dual block lattice")
    return (s1 % 2) + 2 * (s2 % 2), s1 % 3


def vector_classes(v):
    v = np.asarray(v, dtype=np.int64)
    return [block_class(int(v[2 * k]), int(v[2 * k + 1])) for k in range(len(v) // 2)]


def hnf(rows):
    """Row Hermite normal form of an integer matrix, zero rows dropped."""
    a = [[int(t) for t in r] for r in rows]
    if not a:
        return np.zeros((0, 0), dtype=object)
    m, n = len(a), len(a[0])
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            live = [i for i in range(r, m) if a[i][c]]
            if not live:
                break
            p = min(live, key=lambda i: abs(a[i][c]))
            a[r], a[p] = a[p], a[r]
            clean = True
            for i in range(r + 1, m):
                if a[i][c]:
                    f = a[i][c] // a[r][c]
                    a[i] = [s - f * t for s, t in zip(a[i], a[r])]
                    if a[i][c]:
                        clean = False
            if clean:
                break
        if r >= m or not a[r][c]:
            continue
        if a[r][c] < 0:
            a[r] = [-t for t in a[r]]
        for i in range(r):
            f = a[i][c] // a[r][c]
            if f:
                a[i] = [s - f * t for s, t in zip(a[i], a[r])]
        r += 1
    return np.array(a[:r], dtype=object)


class GramLattice:
    """A lattice given by an integer (scaled) basis in the block ambient space."""

    def __init__(self, generators, name=""):
        gens = np.asarray(generators, dtype=object)
        if gens.ndim != 2 or gens.shape[1] % 2:
            raise LatticeError("generators must be rows of even length")
        self.dim = gens.shape[1]
        self.nblocks = self.dim // 2
        self.basis = hnf(gens)
        self.name = name
        self._gram_scaled = None

    @property
    def rank(self):
        return self.basis.shape[0]

    @property
    def gram_scaled(self):
        """36 times the Gram matrix, as exact integers."""
        if self._gram_scaled is None:
            g = ambient_gram(self.nblocks).astype(object)
            self._gram_scaled = self.basis @ g @ self.basis.T
        return self._gram_scaled

    @property
    def gram(self):
        return [[Fraction(int(t), SCALE2) for t in row] for row in self.gram_scaled]

    def gram_sympy(self):
        return sympy.Matrix(self.gram_scaled.tolist()) / SCALE2

    def det(self):
        return Fraction(int(sympy.Matrix(self.gram_scaled.tolist()).det()), SCALE2 ** self.rank)

    def is_integral(self):
        return all(int(t) % SCALE2 == 0 for t in self.gram_scaled.flat)

    def is_even(self):
        if not self.is_integral():
            return False
        return all((int(self.gram_scaled[i, i]) // SCALE2) % 2 == 0 for i in range(self.rank))

    def is_positive_definite(self):
        return self.gram_sympy().is_positive_definite

    def contains(self, v):
        v = [int(t) for t in v]
        if len(v) != self.dim:
            return False
        for row in self.basis:
            c = next(i for i, t in enumerate(row) if t)
            p = int(row[c])
            if v[c] % p:
                return False
            f = v[c] // p
            if f:
                v = [s - f * int(t) for s, t in zip(v, row)]
        return not any(v)

    def contains_lattice(self, other):
        return all(self.contains(r) for r in other.basis)

    def __eq__(self, other):
        if not isinstance(other, GramLattice):
            return NotImplemented
        return self.basis.shape == other.basis.shape and (self.basis == other.basis).all()

    def __hash__(self):
        return hash(tuple(int(t) for t in self.basis.flat))

    def index_in(self, other):
        """[other : self] for a full-rank sublattice self of other."""
        ratio = self.det() / other.det()
        root = math.isqrt(ratio.numerator)
        if ratio.denominator != 1 or root * root != ratio.numerator:
            raise LatticeError("determinant ratio is not a square integer")
        return root

    def dual_basis(self):
        """Rows of the dual basis, as scaled integer vectors in the same ambient."""
        ginv = sympy.Matrix(self.gram_scaled.tolist()).inv() * SCALE2
        rows = []
        for i in range(self.rank):
            v = [sympy.Rational(0)] * self.dim
            for j in range(self.rank):
                c = ginv[i, j]
                if c:
                    v = [s + c * int(t) for s, t in zip(v, self.basis[j])]
            if any(x.q != 1 for x in v):
                raise LatticeError("dual vector leaves the scaled integer grid")
            rows.append([int(x) for x in v])
        return np.array(rows, dtype=object)

    def to_text(self):
        return "\n".join(" ".join(str(int(t)) for t in row) for row in self.basis) + "\n"

    @classmethod
    def from_text(cls, text, name=""):
        rows = [[int(t) for t in ln.split()] for ln in text.splitlines() if ln.strip()]
        return cls(rows, name)

    def random_vectors(self, count, rng, spread=3):
        coeffs = rng.integers(-spread, spread + 1, size=(count, self.rank))
        return coeffs.astype(object) @ self.basis


@dataclass(frozen=True)
class GlueVectorMap:
    """Per-block coset representatives for F4 and F3 labels (scaled)."""

    rep4: tuple = tuple(REP4[k] for k in range(4))
    rep3: tuple = tuple(REP3[k] for k in range(3))

    def vector(self, block_labels, nblocks, blocks):
        v = [0] * (2 * nblocks)
        for b, (c, d) in zip(blocks, block_labels):
            v[2 * b] = self.rep4[c][0] + self.rep3[d][0]
            v[2 * b + 1] = self.rep4[c][1] + self.rep3[d][1]
        return v

    def check(self):
        """Coset conditions and compatibility with the block rotation."""
        problems = []
        if self.rep4[0] != (0, 0) or self.rep3[0] != (0, 0):
            problems.append("zero label must map to zero")
        for c in range(1, 4):
            s = self.rep4[c]
            if block_class(*s) != (c, 0):
                problems.append(f"rep4({c}) lies in the wrong class")
            # tau acts as multiplication by w on F4 labels
            rot = tuple(int(t) for t in np.array(s) @ TAU_BLOCK)
            if block_class(*rot)[0] != F4_MUL[2][c]:
                problems.append(f"rotation does not send rep4({c}) to rep4(w*{c})")
        for d in range(1, 3):
            s = self.rep3[d]
            if block_class(*s) != (0, d):
                problems.append(f"rep3({d}) lies in the wrong class")
            rot = tuple(int(t) for t in np.array(s) @ TAU_BLOCK)
            if block_class(*rot) != (0, d):
                problems.append(f"rotation moves the F3 class of rep3({d})")
        return problems


class GlueLattice(GramLattice):
    """sqrt(2)A2 on ``blocks`` of an ``nblocks`` ambient, glued by an F4 code and an F3 code."""

    def __init__(self, nblocks=12, blocks=None, f4code=None, f3code=None,
                 glue_map=GlueVectorMap(), name="", check=True):
        blocks = tuple(range(nblocks)) if blocks is None else tuple(blocks)
        for code, fld in ((f4code, "F4"), (f3code, "F3")):
            if code is not None and (code.field != fld or code.length != len(blocks)):
                raise LatticeError(f"{fld} glue code does not fit the blocks")
        self.blocks = blocks
        self.f4code = f4code
        self.f3code = f3code
        self.glue_map = glue_map
        gens = []
        for b in blocks:
            for row in ((SCALE, 0), (0, SCALE)):
                v = [0] * (2 * nblocks)
                v[2 * b], v[2 * b + 1] = row
                gens.append(v)
        zero = (0,) * len(blocks)
        if f4code is not None:
            for r in f4code.rows:
                for mult in (1, 2):  # F2-span of an F4-linear code needs r and w*r
                    word = tuple(F4_MUL[mult][t] for t in r)
                    gens.append(glue_map.vector(list(zip(word, zero)), nblocks, blocks))
        if f3code is not None:
            for r in f3code.rows:
                gens.append(glue_map.vector(list(zip(zero, r)), nblocks, blocks))
        super().__init__(gens, name)
        if check and not (self.is_integral() and self.is_even()):
            raise GlueCalibrationError(f"glued lattice {name!r} is not even integral")

    @property
    def glue_order(self):
        n = 1
        if self.f4code is not None:
            n *= self.f4code.size
        if self.f3code is not None:
            n *= self.f3code.size
        return n

    def glue_words(self):
        """Arrays of F4 parts and F3 parts of all glue labels (as separate code word lists)."""
        nb = len(self.blocks)
        c = self.f4code.words() if self.f4code is not None else np.zeros((1, nb), dtype=np.int64)
        d = self.f3code.words() if self.f3code is not None else np.zeros((1, nb), dtype=np.int64)
        return c, d


# --- theta series and short vectors ----------------------------------------

def block_norm_counts(f4, f3v, max_norm3):
    """Counts of vectors in one block coset by 3*norm, up to 3*norm <= max_norm3."""
    rep = np.array(REP4[f4]) + np.array(REP3[f3v])
    r = int(math.isqrt(max_norm3) + 3)
    counts = [0] * (max_norm3 + 1)
    for i in range(-r, r + 1):
        for j in range(-r, r + 1):
            s1 = int(rep[0]) + SCALE * i
            s2 = int(rep[1]) + SCALE * j
            k3 = s1 * s1 - s1 * s2 + s2 * s2
            assert k3 % 3 == 0
            k = k3 // 3  # = 3 * norm
            if k <= max_norm3:
                counts[k] += 1
    return counts


def _block_type_tables(max_norm3):
    """Per-block counts keyed by type (F4 part nonzero, F3 part nonzero)."""
    tables = {}
    for f4 in range(4):
        for f3v in range(3):
            t = (f4 != 0, f3v != 0)
            c = block_norm_counts(f4, f3v, max_norm3)
            if t in tables and tables[t] != c:
                raise LatticeError("block classes of one type have different theta series")
            tables[t] = c
    return tables


def _poly_mul(a, b, cap):
    out = [0] * (cap + 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b[:cap + 1 - i]):
            if y:
                out[i + j] += x * y
    return out


def _poly_pow(a, n, cap):
    out = [1] + [0] * cap
    base = a[:cap + 1]
    while n:
        if n & 1:
            out = _poly_mul(out, base, cap)
        n >>= 1
        if n:
            base = _poly_mul(base, base, cap)
    return out


_POPCOUNT = np.array([bin(i).count("1") for i in range(1 << 12)], dtype=np.int64)


def _masks(words):
    w = (np.asarray(words) != 0).astype(np.int64)
    return w @ (1 << np.arange(w.shape[1], dtype=np.int64))


def support_patterns(lattice):
    """Histogram of (F4-only, F3-only, both) block counts over all glue labels."""
    c, d = lattice.glue_words()
    cm, dm = _masks(c), _masks(d)
    nb = len(lattice.blocks)
    pop = _POPCOUNT if nb <= 12 else np.array([bin(i).count("1") for i in range(1 << nb)])
    full = (1 << nb) - 1
    hist = {}
    for start in range(0, len(cm), 512):
        cc = cm[start:start + 512][:, None]
        both = pop[cc & dm[None, :]]
        c_only = pop[cc & (~dm[None, :] & full)]
        d_only = pop[(~cc & full) & dm[None, :]]
        key = (c_only * 169 + d_only * 13 + both).ravel()
        vals, counts = np.unique(key, return_counts=True)
        for v, n in zip(vals, counts):
            hist[int(v)] = hist.get(int(v), 0) + int(n)
    return {(v // 169, (v // 13) % 13, v % 13): n for v, n in hist.items()}


def norm_counts(lattice, max_norm):
    """Exact counts of lattice vectors per norm, norms <= max_norm (Fractions).

    Works block by block: a glue label fixes one coset per block, and the
    vectors of that coset of norm n are counted by convolving the per-block
    coset theta series with the remaining budget.
    """
    if not isinstance(lattice, GlueLattice):
        return fincke_pohst_counts(lattice, max_norm)
    cap = int(math.floor(Fraction(max_norm) * 3))
    tables = _block_type_tables(cap)
    nb = len(lattice.blocks)
    total = [0] * (cap + 1)
    for (a, b, c), n in support_patterns(lattice).items():
        poly = [1] + [0] * cap
        for t, k in (((True, False), a), ((False, True), b), ((True, True), c),
                     ((False, False), nb - a - b - c)):
            if k:
                poly = _poly_mul(poly, _poly_pow(tables[t], k, cap), cap)
        for i, x in enumerate(poly):
            total[i] += n * x
    return {Fraction(k, 3): x for k, x in enumerate(total) if x}


def short_vectors(lattice, norm_bound, cap=ENUM_NORM_CAP):
    """Counts per norm of nonzero vectors with norm <= norm_bound."""
    if lattice.rank >= 24 and norm_bound > cap:
        raise LatticeError(f"norm bound {norm_bound} exceeds the enumeration cap {cap}")
    counts = norm_counts(lattice, norm_bound)
    counts.pop(Fraction(0), None)
    return counts


def minimum_norm(lattice, search=6):
    counts = short_vectors(lattice, search, cap=max(search, ENUM_NORM_CAP))
    return min(counts) if counts else None


def theta_series(lattice, order):
    """Theta series sum_v q^{|v|^2/2} up to q^order."""
    counts = norm_counts(lattice, 2 * Fraction(order))
    return QSeries({n / 2: c for n, c in counts.items()}, trunc=Fraction(order))


# --- generic exact enumeration ---------------------------------------------

def _ldl(gram):
    n = len(gram)
    q = [[Fraction(x) for x in row] for row in gram]
    # Fincke-Pohst form: Q(x) = sum_i d_i (x_i + sum_{j>i} m_ij x_j)^2
    d = [Fraction(0)] * n
    m = [[Fraction(0)] * n for _ in range(n)]
    a = [row[:] for row in q]
    for i in range(n):
        d[i] = a[i][i]
        if d[i] <= 0:
            raise LatticeError("Gram matrix is not positive definite")
        for j in range(i + 1, n):
            m[i][j] = a[i][j] / d[i]
        for j in range(i + 1, n):
            for k in range(j, n):
                a[j][k] -= m[i][j] * a[i][k]
                a[k][j] = a[j][k]
    return d, m


def fincke_pohst_counts(lattice, max_norm):
    """Exact Fincke-Pohst enumeration from the Gram matrix; returns counts per norm incl. 0."""
    gram = lattice.gram
    n = len(gram)
    d, m = _ldl(gram)
    bound = Fraction(max_norm)
    counts = {}
    x = [0] * n

    def rec(i, remaining):
        if i < 0:
            val = bound - remaining
            counts[val] = counts.get(val, 0) + 1
            return
        c = sum((m[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        t = remaining / d[i]
        r = math.isqrt(math.ceil(t)) + 1
        lo = math.floor(-c) - r
        hi = math.ceil(-c) + r
        for xi in range(lo, hi + 1):
            y = xi + c
            used = d[i] * y * y
            if used <= remaining:
                x[i] = xi
                rec(i - 1, remaining - used)
        x[i] = 0

    rec(n - 1, bound)
    return dict(sorted(counts.items()))


# --- standard lattices of the construction ---------------------------------

def build_base(nblocks=12):
    """N = sqrt(2)A2^nblocks."""
    return GlueLattice(nblocks, name=f"sqrt2A2^{nblocks}")


def glue(base, f4code=None, f3code=None, glue_map=GlueVectorMap(), name=""):
    if not isinstance(base, GlueLattice) or base.f4code is not None or base.f3code is not None:
        raise LatticeError("glue expects an unglued block lattice")
    return GlueLattice(base.nblocks, base.blocks, f4code, f3code, glue_map, name)


def glue_index(lattice, base):
    """[lattice : base] computed from determinants."""
    return base.index_in(lattice)


def leech(glue_map=GlueVectorMap()):
    from .codes import glue_code_c, ternary_d
    return glue(build_base(12), glue_code_c(), ternary_d(), glue_map, name="Leech")


def lattice_lc(glue_map=GlueVectorMap()):
    from .codes import glue_code_c
    return glue(build_base(12), glue_code_c(), None, glue_map, name="L_C")


def k12(copy=None, glue_map=GlueVectorMap()):
    """Coxeter-Todd lattice as sqrt(2)A2^6 glued by the hexacode.

    ``copy=None`` gives the standalone rank-12 lattice; ``copy=0`` or ``1``
    places it on blocks 1-6 or 7-12 of the 12-block ambient.
    """
    from .codes import hexacode
    if copy is None:
        return GlueLattice(6, None, hexacode(), None, glue_map, name="K12")
    blocks = tuple(range(6 * copy, 6 * copy + 6))
    return GlueLattice(12, blocks, hexacode(), None, glue_map, name=f"K12[{copy}]")


def orthogonal_sum(a, b, name=""):
    return GramLattice(np.vstack([a.basis, b.basis]), name)


def blocks_orthogonal(a, b):
    g = ambient_gram(a.nblocks).astype(object)
    return not (a.basis @ g @ b.basis.T).any()


# --- isometries ------------------------------------------------------------

class Isometry:
    """Integer matrix U acting on scaled row vectors by v -> v U."""

    def __init__(self, matrix, name=""):
        self.matrix = np.asarray(matrix, dtype=object)
        self.name = name

    def __call__(self, v):
        return np.asarray(v, dtype=object) @ self.matrix

    def __matmul__(self, other):
        """self @ other applies other first."""
        return Isometry(other.matrix @ self.matrix, f"{self.name}*{other.name}")

    def power(self, k):
        out = np.identity(len(self.matrix), dtype=object)
        for _ in range(k):
            out = out @ self.matrix
        return Isometry(out)

    def is_identity(self):
        return (self.matrix == np.identity(len(self.matrix), dtype=object)).all()

    def preserves_form(self):
        g = ambient_gram(len(self.matrix) // 2).astype(object)
        return (self.matrix @ g @ self.matrix.T == g).all()

    def image(self, lattice, name=""):
        return GramLattice(lattice.basis @ self.matrix, name)

    def preserves(self, lattice):
        return self.image(lattice) == lattice

    def fixed_space_dim(self):
        m = sympy.Matrix(self.matrix.tolist()) - sympy.eye(len(self.matrix))
        return len(self.matrix) - m.rank()

    def norm_spot_check(self, lattice, count=1000, seed=0):
        rng = np.random.default_rng(seed)
        vecs = lattice.random_vectors(count, rng)
        g = ambient_gram(lattice.nblocks).astype(object)
        before = np.einsum("ij,jk,ik->i", vecs, g, vecs)
        img = vecs @ self.matrix
        after = np.einsum("ij,jk,ik->i", img, g, img)
        return bool((before == after).all())


def build_tau(nblocks=12):
    m = np.zeros((2 * nblocks, 2 * nblocks), dtype=object)
    for k in range(nblocks):
        m[2 * k:2 * k + 2, 2 * k:2 * k + 2] = TAU_BLOCK
    return Isometry(m, "tau")


def build_h(nblocks=12):
    """h = eps s: swap block k with block k + n/2, then negate the second half."""
    half = nblocks // 2
    m = np.zeros((2 * nblocks, 2 * nblocks), dtype=object)
    for k in range(nblocks):
        target = (k + half) % nblocks
        sign = -1 if target >= half else 1
        m[2 * k, 2 * target] = sign
        m[2 * k + 1, 2 * target + 1] = sign
    return Isometry(m, "h")


def tau_trivial_on_discriminant(lattice, tau):
    """True iff (1 - tau) maps the dual lattice into the lattice."""
    if lattice.det() == 1:
        return True
    for v in lattice.dual_basis():
        w = np.asarray(v, dtype=object) - tau(v)
        if not lattice.contains(w):
            return False
    return True


# --- discriminant groups ---------------------------------------------------

def invariant_factors(lattice):
    """Nontrivial invariant factors of L*/L (Smith normal form of the Gram matrix)."""
    g = sympy.Matrix(lattice.gram_scaled.tolist()) / SCALE2
    if any(x.q != 1 for x in g):
        raise LatticeError("discriminant group needs an integral lattice")
    from sympy.matrices.normalforms import invariant_factors as inv
    from sympy.polys.domains import ZZ
    facs = [int(f) for f in inv(g, domain=ZZ)]
    return tuple(f for f in facs if abs(f) != 1)


class K12Discriminant:
    """K12*/K12 = F3^6 with coordinate k = F3 class of the k-th block.

    Representatives are sum_k a_k * rep3 on block k (F4 part zero); this is
    the fixed coordinate system for fusion labels ``S^a[x]``.
    """

    def __init__(self, lattice=None):
        self.lattice = k12() if lattice is None else lattice
        if len(self.lattice.blocks) != 6 or self.lattice.f3code is not None:
            raise LatticeError("expected a hexacode-glued six-block lattice")
        self.coords = f3.all_vectors(6)
        self.reps = np.array([self.representative(a) for a in self.coords], dtype=object)

    def representative(self, a):
        v = [0] * self.lattice.dim
        for k, b in enumerate(self.lattice.blocks):
            s = REP3[int(a[k]) % 3]
            v[2 * b], v[2 * b + 1] = s
        return v

    def coordinates(self, v):
        """F3^6 label of the coset of a dual vector (restricted to this copy's blocks)."""
        out = []
        for b in self.lattice.blocks:
            f4, f3v = block_class(int(v[2 * b]), int(v[2 * b + 1]))
            out.append(f3v)
        return tuple(out)

    def in_dual(self, v):
        g = ambient_gram(self.lattice.nblocks).astype(object)
        ips = self.lattice.basis @ g @ np.asarray(v, dtype=object)
        return all(int(t) % SCALE2 == 0 for t in ips)

    def three_inner_table(self):
        """729 x 729 table of 3<a|b> mod 3 from the stored representatives."""
        g = ambient_gram(self.lattice.nblocks).astype(np.int64)
        reps = self.reps.astype(np.int64)
        ip36 = reps @ g @ reps.T  # 36 <a|b>
        if (ip36 % 12).any():
            raise LatticeError("3<a|b> is not integral")
        return (ip36 // 12) % 3

    def three_norms(self):
        """3|a|^2 (mod 6, as exact integers) for each representative."""
        g = ambient_gram(self.lattice.nblocks).astype(np.int64)
        reps = self.reps.astype(np.int64)
        n36 = np.einsum("ij,jk,ik->i", reps, g, reps)
        if (n36 % 12).any():
            raise LatticeError("3|a|^2 is not integral")
        return n36 // 12

    def qform(self):
        """q_K12(a) = 3|a|^2 mod 3 for every coset."""
        return self.three_norms() % 3

    def coset_min_norm(self, a):
        """Minimum norm over the coset a + K12 (exact, via the glue structure)."""
        mins = {t: next(i for i, c in enumerate(tab) if c) for t, tab in _block_type_tables(12).items()}
        best = None
        a = [int(t) % 3 for t in a]
        for c in self.lattice.f4code.words():
            tot = sum(mins[(int(ck) != 0, ak != 0)] for ck, ak in zip(c, a))
            best = tot if best is None else min(best, tot)
        return Fraction(best, 3)


def glue_image(leech_lattice, disc1, disc2):
    """Image of the Leech lattice in (K12*/K12)^2 as a list of label pairs (a, b)."""
    pairs = [disc1.coordinates(v) + disc2.coordinates(v) for v in leech_lattice.basis]
    return f3.row_basis(np.array(pairs))
