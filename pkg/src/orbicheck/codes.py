"""Linear codes over F3 and F4 used as glue for the sqrt(2)A2^12 block lattice.

F4 symbols are ints 0..3 read as b0 + b1*w (``exact.F4_MUL``); the text
format writes them as ``0 1 w W`` with ``W`` = wbar = w^2.
"""

from dataclasses import dataclass, field
import itertools

import numpy as np

from . import f3
from .exact import F4_FROB, F4_MUL, F4_SYMBOLS

SIZE_CAP = 10 ** 7

_MUL = np.array(F4_MUL, dtype=np.int64)
_FROB = np.array(F4_FROB, dtype=np.int64)

# the printed generator matrix of the ternary glue code; coordinates pair up
# as tetracodes on {1,2,7,8}, {3,4,9,10}, {5,6,11,12}
TERNARY_D_ROWS = (
    (1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
    (1, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
    (0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0),
    (0, 0, 1, 2, 0, 0, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 1, 2, 0, 0, 0, 0, 0, 1),
)

# words (a, b, c, f(1), f(w), f(wbar)) with f(x) = a x^2 + b x + c
HEXACODE_ROWS = (
    (1, 0, 0, 1, 3, 2),
    (0, 1, 0, 1, 2, 3),
    (0, 0, 1, 1, 1, 1),
)


class CodeError(ValueError):
    pass


def _f4_rank(rows):
    # Gaussian elimination over F4
    a = [list(r) for r in rows]
    r = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = F4_FROB[a[r][c]]  # x^-1 = x^2 for x != 0
        a[r] = [F4_MUL[inv][t] for t in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [s ^ F4_MUL[f][t] for s, t in zip(a[i], a[r])]
        r += 1
    return r


@dataclass(frozen=True)
class LinearCode:
    field: str
    rows: tuple
    name: str = ""
    _words: object = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.field not in ("F3", "F4"):
            raise CodeError(f"unsupported field {self.field}")
        rows = tuple(tuple(int(t) for t in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise CodeError("generator rows have different lengths")
        if self.field == "F3" and any(t not in (0, 1, 2) for r in rows for t in r):
            raise CodeError("F3 entries must be 0, 1, 2")
        if self.field == "F4" and any(t not in (0, 1, 2, 3) for r in rows for t in r):
            raise CodeError("F4 entries must be 0..3")
        if self.rank() != len(rows):
            raise CodeError("generator rows are linearly dependent")

    @property
    def q(self):
        return 3 if self.field == "F3" else 4

    @property
    def length(self):
        return len(self.rows[0]) if self.rows else 0

    @property
    def dimension(self):
        return len(self.rows)

    @property
    def size(self):
        return self.q ** self.dimension

    def rank(self):
        if not self.rows:
            return 0
        if self.field == "F3":
            return f3.rank(np.array(self.rows))
        return _f4_rank(self.rows)

    def words(self):
        """All codewords as an array, ordered lexicographically by message vector."""
        if self._words is not None:
            return self._words
        if self.size > SIZE_CAP:
            raise CodeError(f"code of size {self.size} exceeds enumeration cap")
        k, n = self.dimension, self.length
        msgs = np.array(list(itertools.product(range(self.q), repeat=k)), dtype=np.int64).reshape(-1, k)
        if k == 0:
            out = np.zeros((1, n), dtype=np.int64)
        elif self.field == "F3":
            out = (msgs @ np.array(self.rows)) % 3
        else:
            g = np.array(self.rows, dtype=np.int64)
            out = np.zeros((len(msgs), n), dtype=np.int64)
            for i in range(k):
                out ^= _MUL[msgs[:, i][:, None], g[i][None, :]]
        out.setflags(write=False)
        object.__setattr__(self, "_words", out)
        return out

    def enumerate(self):
        return [tuple(int(t) for t in w) for w in self.words()]

    def weights(self):
        return (self.words() != 0).sum(axis=1)

    def weight_distribution(self):
        vals, counts = np.unique(self.weights(), return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, counts)}

    def min_weight(self):
        w = self.weights()
        w = w[w > 0]
        return int(w.min()) if len(w) else 0

    def word_set(self):
        return {tuple(int(t) for t in w) for w in self.words()}

    def contains(self, word):
        return tuple(int(t) for t in word) in self.word_set()

    def to_text(self):
        if self.field == "F3":
            return "\n".join(" ".join(str(t) for t in r) for r in self.rows) + "\n"
        return "\n".join(" ".join(F4_SYMBOLS[t] for t in r) for r in self.rows) + "\n"

    @classmethod
    def from_text(cls, text, field, name=""):
        rows = []
        for ln in text.splitlines():
            toks = ln.split()
            if not toks:
                continue
            if field == "F3":
                rows.append(tuple(int(t) for t in toks))
            else:
                rows.append(tuple(F4_SYMBOLS.index(t) for t in toks))
        return cls(field, tuple(rows), name)


def direct_sum(a, b, name=""):
    if a.field != b.field:
        raise CodeError("direct sum of codes over different fields")
    rows = [tuple(r) + (0,) * b.length for r in a.rows]
    rows += [(0,) * a.length + tuple(r) for r in b.rows]
    return LinearCode(a.field, tuple(rows), name)


def ternary_d():
    return LinearCode("F3", TERNARY_D_ROWS, "D")


def hexacode():
    return LinearCode("F4", HEXACODE_ROWS, "H")


def glue_code_c():
    return direct_sum(hexacode(), hexacode(), "C")


def is_self_orthogonal_f3(code):
    g = np.array(code.rows)
    return not ((g @ g.T) % 3).any()


def hermitian_trace_products(code):
    """Tr(sum_k x_k conj(y_k)) over F2 for all pairs of generators and their w-multiples.

    A zero result on these spanning sets means the F2-span of the code is
    orthogonal for the trace form, which is what integrality of the glued
    lattice needs.
    """
    g = np.array(code.rows, dtype=np.int64)
    gens = np.vstack([g, _MUL[2][g]])
    prods = _MUL[gens[:, None, :], _FROB[gens][None, :, :]]
    total = np.bitwise_xor.reduce(prods, axis=2)
    return total >> 1  # trace(b0 + b1 w) = b1


@dataclass(frozen=True)
class MonomialMap:
    """Coordinate permutation plus per-coordinate scaling.

    ``perm[k]`` is the target coordinate of source coordinate k.  Over F3,
    ``scale`` holds 1 or 2 (= -1) per target coordinate; over F4 it holds 0/1
    flags for applying Frobenius at the target coordinate.
    """

    perm: tuple
    scale: tuple
    field: str = "F3"

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise CodeError("not a permutation")
        allowed = (1, 2) if self.field == "F3" else (0, 1)
        if len(self.scale) != len(self.perm) or any(s not in allowed for s in self.scale):
            raise CodeError("bad scaling vector")

    def apply_word(self, word):
        n = len(self.perm)
        out = [0] * n
        for k in range(n):
            out[self.perm[k]] = int(word[k])
        if self.field == "F3":
            return tuple((s * t) % 3 for s, t in zip(self.scale, out))
        return tuple(F4_FROB[t] if s else t for s, t in zip(self.scale, out))

    def compose(self, other):
        """The map applying ``other`` first, then ``self``."""
        if other.field != self.field:
            raise CodeError("composing maps over different fields")
        n = len(self.perm)
        perm = tuple(self.perm[other.perm[k]] for k in range(n))
        moved = [0] * n
        for t in range(n):
            moved[self.perm[t]] = other.scale[t]
        if self.field == "F3":
            scale = tuple((a * b) % 3 for a, b in zip(self.scale, moved))
        else:
            scale = tuple(a ^ b for a, b in zip(self.scale, moved))
        return MonomialMap(perm, scale, self.field)

    def inverse(self):
        n = len(self.perm)
        perm = [0] * n
        for k in range(n):
            perm[self.perm[k]] = k
        # scaling at target t moves back to source coordinate perm^-1(t)
        scale = [0] * n
        for k in range(n):
            scale[k] = self.scale[self.perm[k]]
        return MonomialMap(tuple(perm), tuple(scale), self.field)

    @classmethod
    def identity(cls, n, field="F3"):
        return cls(tuple(range(n)), (1,) * n if field == "F3" else (0,) * n, field)


def apply_map(code, m):
    if m.field != code.field:
        raise CodeError("map and code are over different fields")
    rows = tuple(m.apply_word(r) for r in code.rows)
    return LinearCode(code.field, rows, code.name)


def is_invariant(code, m):
    if len(m.perm) != code.length:
        raise CodeError("map length does not match code length")
    if m.field != code.field:
        raise CodeError("map and code are over different fields")
    image = {m.apply_word(w) for w in code.words()}
    return image == code.word_set()


def swap_halves_map(n=12, field="F3", negate_second=True):
    """The coordinate swap k <-> k+n/2, then -1 on the second half (trivial over F4)."""
    h = n // 2
    perm = tuple((k + h) % n for k in range(n))
    if field == "F3":
        scale = tuple(1 if k < h or not negate_second else 2 for k in range(n))
    else:
        scale = (0,) * n
    return MonomialMap(perm, scale, field)
