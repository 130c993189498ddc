"""The doubled label space R + R, the subgroup U, its two maximal extensions, and eta.

Everything is in the linear coordinates of :mod:`orbicheck.fusion`: a label
pair is a vector in F3^16 whose halves are the two labels, and q2 is the
orthogonal sum of two copies of q.
"""

from dataclasses import dataclass

import numpy as np

from . import f3
from .fusion import FusionRing, ModuleLabel
from .lattices import K12Discriminant, build_h, glue_image, k12, leech


class ExtensionError(ValueError):
    pass


class SubspaceF3:
    """Row-reduced basis of a subspace of F3^n."""

    def __init__(self, rows, n=None):
        rows = f3.mod3(rows)
        if rows.ndim == 1:
            rows = rows.reshape(0 if n is not None and rows.size == 0 else 1, -1)
        if rows.size == 0:
            self.n = n if n is not None else rows.shape[1]
            self.basis = np.zeros((0, self.n), dtype=np.int64)
        else:
            self.n = rows.shape[1]
            self.basis = f3.row_basis(rows)

    @property
    def dim(self):
        return self.basis.shape[0]

    @property
    def size(self):
        return 3 ** self.dim

    def contains(self, v):
        if self.dim == 0:
            return not f3.mod3(v).any()
        return f3.solve_left(self.basis, v) is not None

    def contains_space(self, other):
        return all(self.contains(r) for r in other.basis)

    def __eq__(self, other):
        return self.dim == other.dim and self.contains_space(other)

    def elements(self):
        return f3.span(self.basis) if self.dim else np.zeros((1, self.n), dtype=np.int64)

    def __add__(self, other):
        return SubspaceF3(np.vstack([self.basis, other.basis]), self.n)

    def perp(self, gram):
        """{v : v G b^T = 0 for all basis rows b}."""
        if self.dim == 0:
            return SubspaceF3(np.eye(self.n, dtype=np.int64))
        return SubspaceF3(f3.nullspace(self.basis @ gram), self.n)


@dataclass
class LabelPair:
    first: ModuleLabel
    second: ModuleLabel

    def to_vector(self):
        return np.concatenate([self.first.to_vector(), self.second.to_vector()])

    @classmethod
    def from_vector(cls, v):
        return cls(ModuleLabel.from_vector(v[:8]), ModuleLabel.from_vector(v[8:]))

    def __str__(self):
        return f"({self.first}, {self.second})"


class ExtensionGeometry:
    def __init__(self, ring=None, leech_lattice=None):
        self.ring = FusionRing() if ring is None else ring
        self.gram = self.ring.gram()
        z = np.zeros((8, 8), dtype=np.int64)
        self.gram2 = np.block([[self.gram, z], [z, self.gram]])
        self.leech = leech() if leech_lattice is None else leech_lattice
        self.disc = (K12Discriminant(k12(0)), K12Discriminant(k12(1)))
        self.G6 = SubspaceF3(glue_image(self.leech, *self.disc))
        self.U, self.SLambda = self._build_u()
        self.Uperp = self.U.perp(self.gram2)
        self.lines = self._extensions()
        others = [s for s in self.lines if not s == self.SLambda]
        if len(self.lines) != 2 or len(others) != 1:
            raise ExtensionError("U does not have exactly two maximal extensions, one of them S_Lambda")
        self.Ssharp = others[0]
        self.eta = self._eta()

    # -- construction --------------------------------------------------------

    def _build_u(self):
        rows = []
        for g in self.G6.basis:
            a, b = g[:6], g[6:]
            rows.append(np.concatenate([a, [0, 0], b, [0, 0]]))
        xrow = np.zeros(16, dtype=np.int64)
        xrow[6], xrow[14] = 1, 2  # (S^0[1], S^0[-1])
        yrow = np.zeros(16, dtype=np.int64)
        yrow[14] = 1  # (S^0[0], S^0[1])
        u = SubspaceF3(np.vstack(rows + [xrow]))
        s = SubspaceF3(np.vstack(rows + [xrow, yrow]))
        return u, s

    def q2(self, vecs):
        vecs = f3.mod3(vecs)
        return np.einsum("ij,jk,ik->i", vecs, self.gram2, vecs) % 3

    def is_totally_singular(self, space):
        return not self.q2(space.elements()).any()

    def quotient_basis(self):
        """Two vectors of U-perp completing a basis of U."""
        comp = []
        cur = self.U
        for r in self.Uperp.basis:
            if not cur.contains(r):
                comp.append(r)
                cur = cur + SubspaceF3(r[None, :])
        return np.array(comp)

    def quotient_gram(self):
        c = self.quotient_basis()
        return (c @ self.gram2 @ c.T) % 3

    def _extensions(self):
        """All maximal totally singular subspaces containing U (U + a singular line of U-perp/U)."""
        c = self.quotient_basis()
        if len(c) != 2:
            raise ExtensionError(f"U-perp/U has dimension {len(c)}, expected 2")
        out = []
        seen = []
        for coeffs in f3.all_vectors(2)[1:]:
            w = (coeffs @ c) % 3
            if self.q2(w[None, :])[0]:
                continue
            line = self.U + SubspaceF3(w[None, :])
            if not any(line == s for s in seen):
                seen.append(line)
                out.append(line)
        return out

    def hyperbolic_pair(self):
        """Singular e, f in the quotient with B(e, f) = 1 (coefficient vectors)."""
        g = self.quotient_gram()
        vecs = f3.all_vectors(2)[1:]
        sing = [v for v in vecs if (v @ g @ v) % 3 == 0]
        for e in sing:
            for f in sing:
                if (e @ g @ f) % 3 == 1:
                    return e, f
        return None

    def _eta(self):
        b = self.Ssharp.basis
        p1, p2 = b[:, :8], b[:, 8:]
        if f3.rank(p1) != 8:
            raise ExtensionError("first projection of S# is not bijective")
        return (f3.inverse(p1) @ p2) % 3

    # -- checks --------------------------------------------------------------

    def g6_isotropic(self):
        """q_K12(a) + q_K12(b) over all of G6 (should vanish)."""
        qa = self.ring.three_norm
        el = self.G6.elements()
        return int(((qa[f3.index_of(el[:, :6])] + qa[f3.index_of(el[:, 6:])]) % 3 != 0).sum())

    def g6_self_dual(self):
        table = self.ring.three_inner
        b = self.G6.basis
        ips = (table[np.ix_(f3.index_of(b[:, :6]), f3.index_of(b[:, :6]))]
               + table[np.ix_(f3.index_of(b[:, 6:]), f3.index_of(b[:, 6:]))]) % 3
        return (not ips.any()) and self.G6.dim == 6

    def s_type_of_uperp(self):
        """Elements of U-perp whose components are both S-labels."""
        el = self.Uperp.elements()
        return el[(el[:, 7] == 0) & (el[:, 15] == 0)]

    def graph_partners(self):
        """Number of S# elements per first component, as an array over R."""
        el = self.Ssharp.elements()
        return np.bincount(f3.index_of(el[:, :8]), minlength=3 ** 8)

    def eta_apply(self, vecs):
        return (f3.mod3(vecs) @ self.eta) % 3

    def eta_q_check(self):
        v = self.ring.vectors
        return int(((self.ring.q_vectors(self.eta_apply(v)) + self.ring.q_vectors(v)) % 3).sum())

    def eta_is_isometry(self):
        return bool(((self.eta @ self.gram @ self.eta.T - self.gram) % 3 == 0).all())

    def twist_pattern(self):
        """(count of S# \\ U elements, count with both components T-type and equal twist)."""
        el = self.Ssharp.elements()
        t1, t2 = el[:, 7], el[:, 15]
        outside = ~self._in_u_mask(el)
        ok = outside & (t1 != 0) & (t2 != 0) & (t1 == t2)
        return int(outside.sum()), int(ok.sum())

    def _in_u_mask(self, el):
        # membership in U via a parity-check matrix
        h = f3.nullspace(self.U.basis)
        return ~((el @ h.T) % 3).any(axis=1)

    def phi_exponent(self, m, s):
        s = f3.mod3(s)
        if not self.Ssharp.contains(s):
            raise ExtensionError("grading element is not in S#")
        return int(m.to_vector() @ self.gram @ s[:8]) % 3

    def phi_levels(self, m):
        """Sizes of the level sets of s -> B(m, s_1) on S#, and whether level 0 is U."""
        el = self.Ssharp.elements()
        vals = (el[:, :8] @ self.gram @ m.to_vector()) % 3
        sizes = [int((vals == k).sum()) for k in range(3)]
        level0 = el[vals == 0]
        return sizes, bool(self._in_u_mask(level0).all()) and len(level0) == self.U.size

    def pair_map_preserves(self, g):
        """(g, eta^-1 g eta) maps S# to itself; g is an 8x8 isometry matrix."""
        einv = f3.inverse(self.eta)
        g2 = (einv @ g @ self.eta) % 3
        if ((g2 @ self.gram @ g2.T - self.gram) % 3).any():
            return False
        img = np.hstack([(self.Ssharp.basis[:, :8] @ g) % 3, (self.Ssharp.basis[:, 8:] @ g2) % 3])
        return SubspaceF3(img) == self.Ssharp

    def h_discriminant_maps(self):
        """Matrices A1 (copy 1 -> copy 2) and A2 (copy 2 -> copy 1) induced by h on F3^6 labels."""
        h = build_h(12)
        mats = []
        for src, dst in ((self.disc[0], self.disc[1]), (self.disc[1], self.disc[0])):
            rows = []
            for k in range(6):
                e = np.zeros(6, dtype=np.int64)
                e[k] = 1
                img = h(src.representative(e))
                if not dst.in_dual(img):
                    raise ExtensionError("h does not map the dual of one copy to the other")
                rows.append(dst.coordinates(img))
            mats.append(np.array(rows) % 3)
        return mats

    def h_label_action_check(self):
        """h swaps the G6 coordinates (with its discriminant action) and preserves U."""
        a1, a2 = self.h_discriminant_maps()
        # (S^a[x], S^b[y]) -> (S^{b A2}[y], S^{a A1}[x])
        m = np.zeros((16, 16), dtype=np.int64)
        m[0:6, 8:14] = a1
        m[8:14, 0:6] = a2
        m[6, 14] = 1
        m[14, 6] = 1
        g6_img = SubspaceF3(np.hstack([(self.G6.basis[:, 6:] @ a2) % 3, (self.G6.basis[:, :6] @ a1) % 3]))
        u_img = SubspaceF3((self.U.basis @ m) % 3)
        return g6_img == self.G6 and u_img == self.U, a1, a2

    # -- export --------------------------------------------------------------

    def eta_table(self):
        lines = []
        for v in self.ring.vectors:
            w = self.eta_apply(v[None, :])[0]
            lines.append(f"{ModuleLabel.from_vector(v)} -> {ModuleLabel.from_vector(w)}")
        return "\n".join(lines) + "\n"

    def ssharp_basis_text(self):
        return "\n".join(str(LabelPair.from_vector(r)) for r in self.Ssharp.basis) + "\n"
