"""Exact scalars and truncated q-series.

``CycRational`` is an element of Q(xi) with xi^2 + xi + 1 = 0, ``F4Elem`` an
element of the field with four elements, and ``QSeries`` a truncated Laurent
series in q whose exponents are rationals with bounded denominator.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

DEFAULT_DENOM = 72
DEFAULT_TRUNC = Fraction(10)


class SeriesError(ValueError):
    pass


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class CycRational:
    """re + im * xi, xi a primitive cube root of unity."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    @classmethod
    def xi(cls, k=1):
        k %= 3
        if k == 0:
            return cls(1, 0)
        if k == 1:
            return cls(0, 1)
        return cls(-1, -1)

    @staticmethod
    def _lift(other):
        if isinstance(other, CycRational):
            return other
        if isinstance(other, (int, Fraction)):
            return CycRational(other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return CycRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return CycRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.re, self.im, o.re, o.im
        # xi^2 = -1 - xi
        return CycRational(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def conj(self):
        # xi -> xi^2 = -1 - xi
        return CycRational(self.re - self.im, -self.im)

    def norm(self):
        return self.re * self.re - self.re * self.im + self.im * self.im

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero in Q(xi)")
        c = self.conj()
        return CycRational(c.re / n, c.im / n)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def is_real(self):
        return self.im == 0

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"CycRational({self.re}, {self.im})"


# F4 = {0, 1, w, wbar} encoded as two bits b0 + 2*b1 meaning b0 + b1*w, w^2 = w + 1.
_F4_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)
F4_MUL = _F4_MUL
F4_FROB = (0, 1, 3, 2)
F4_SYMBOLS = "01wW"


@dataclass(frozen=True)
class F4Elem:
    bits: int

    def __post_init__(self):
        if self.bits not in (0, 1, 2, 3):
            raise ValueError(f"not an F4 element: {self.bits}")

    @classmethod
    def from_symbol(cls, s):
        return cls(F4_SYMBOLS.index(s))

    def __add__(self, other):
        return F4Elem(self.bits ^ other.bits)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        return F4Elem(_F4_MUL[self.bits][other.bits])

    def frobenius(self):
        return F4Elem(F4_FROB[self.bits])

    def inverse(self):
        if self.bits == 0:
            raise ZeroDivisionError("zero in F4")
        return F4Elem(F4_FROB[self.bits])

    def __str__(self):
        return F4_SYMBOLS[self.bits]


class QSeries:
    """Truncated Laurent series sum c_e q^e, exact rational c_e and e.

    Only terms with exponent <= ``trunc`` are meaningful.  ``trunc=None``
    marks an exact finite expression (a Laurent polynomial).
    """

    __slots__ = ("terms", "trunc", "denom")

    def __init__(self, terms=None, trunc=DEFAULT_TRUNC, denom=DEFAULT_DENOM):
        self.denom = int(denom)
        self.trunc = None if trunc is None else _frac(trunc)
        clean = {}
        for e, c in (terms or {}).items():
            e, c = _frac(e), _frac(c)
            if (e * self.denom).denominator != 1:
                raise SeriesError(f"exponent {e} exceeds denominator bound {self.denom}")
            if self.trunc is not None and e > self.trunc:
                continue
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def monomial(cls, e=0, c=1, trunc=None, denom=DEFAULT_DENOM):
        return cls({e: c}, trunc=trunc, denom=denom)

    @classmethod
    def zero(cls, trunc=None, denom=DEFAULT_DENOM):
        return cls({}, trunc=trunc, denom=denom)

    def __getitem__(self, e):
        e = _frac(e)
        if self.trunc is not None and e > self.trunc:
            raise SeriesError(f"coefficient of q^{e} is beyond truncation {self.trunc}")
        return self.terms.get(e, Fraction(0))

    def coeff(self, e):
        return self[e]

    def valuation(self):
        if not self.terms:
            return None
        return min(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def is_zero(self):
        return not self.terms

    def _compatible(self, other):
        if isinstance(other, (int, Fraction)):
            return QSeries.monomial(0, other, denom=self.denom)
        if not isinstance(other, QSeries):
            return NotImplemented
        if other.denom != self.denom:
            raise SeriesError("mismatched denominator bounds")
        return other

    @staticmethod
    def _min_trunc(*ts):
        ts = [t for t in ts if t is not None]
        return min(ts) if ts else None

    def __add__(self, other):
        other = self._compatible(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return QSeries(terms, self._min_trunc(self.trunc, other.trunc), self.denom)

    __radd__ = __add__

    def __neg__(self):
        return QSeries({e: -c for e, c in self.terms.items()}, self.trunc, self.denom)

    def __sub__(self, other):
        other = self._compatible(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = _frac(c)
        return QSeries({e: c * v for e, v in self.terms.items()}, self.trunc, self.denom)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._compatible(other)
        if other is NotImplemented:
            return other
        va, vb = self.valuation(), other.valuation()
        cands = [self.trunc, other.trunc]
        if self.trunc is not None and vb is not None:
            cands.append(self.trunc + vb)
        if other.trunc is not None and va is not None:
            cands.append(other.trunc + va)
        trunc = self._min_trunc(*cands)
        terms = {}
        b_items = other.items()
        for ea, ca in self.items():
            for eb, cb in b_items:
                e = ea + eb
                if trunc is not None and e > trunc:
                    break
                terms[e] = terms.get(e, Fraction(0)) + ca * cb
        return QSeries(terms, trunc, self.denom)

    __rmul__ = __mul__

    def shift(self, e):
        """Exact multiplication by q^e."""
        e = _frac(e)
        terms = {k + e: c for k, c in self.terms.items()}
        return QSeries(terms, None if self.trunc is None else self.trunc + e, self.denom)

    def with_trunc(self, trunc):
        t = self._min_trunc(self.trunc, _frac(trunc))
        return QSeries(self.terms, t, self.denom)

    def inverse(self, trunc=None):
        """Multiplicative inverse; the leading coefficient must be nonzero."""
        v = self.valuation()
        if v is None:
            raise SeriesError("non-invertible leading term: zero series")
        lead = self.terms[v]
        if self.trunc is not None:
            target = self.trunc - 2 * v
        elif trunc is not None:
            target = _frac(trunc)
        else:
            raise SeriesError("inverse of an exact series needs an explicit truncation order")
        if trunc is not None:
            target = min(target, _frac(trunc))
        # unit part u = a / (lead q^v) = 1 + rest, rest on a grid of step 1/g
        g = math.lcm(*[(e - v).denominator for e in self.terms]) if self.terms else 1
        span = target + v  # inverse = q^-v * (1/u) with (1/u) needed up to exponent target + v
        n = int(math.floor(span * g)) if span >= 0 else -1
        rest = {}
        for e, c in self.terms.items():
            k = (e - v) * g
            if k.denominator != 1:
                raise SeriesError("inconsistent exponent grid")
            if 0 < k <= n:
                rest[int(k)] = c / lead
        out = [Fraction(0)] * (n + 1)
        if n >= 0:
            out[0] = Fraction(1)
        rest_items = sorted(rest.items())
        for k in range(1, n + 1):
            s = Fraction(0)
            for j, c in rest_items:
                if j > k:
                    break
                s += c * out[k - j]
            out[k] = -s
        terms = {Fraction(k, g) - v: c / lead for k, c in enumerate(out) if c}
        return QSeries(terms, target, self.denom)

    def pow_int(self, n, trunc=None):
        n = int(n)
        if n < 0:
            return self.inverse(trunc).pow_int(-n)
        result = QSeries.monomial(0, 1, denom=self.denom)
        base = self if trunc is None else self.with_trunc(trunc)
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        if trunc is not None:
            result = result.with_trunc(trunc)
        return result

    __pow__ = pow_int

    def substitute(self, k):
        """q -> q^k for a positive rational k."""
        k = _frac(k)
        if k <= 0:
            raise SeriesError("substitution exponent must be positive")
        terms = {e * k: c for e, c in self.terms.items()}
        return QSeries(terms, None if self.trunc is None else self.trunc * k, self.denom)

    def integer_exponent_part(self):
        terms = {e: c for e, c in self.terms.items() if e.denominator == 1}
        trunc = None if self.trunc is None else Fraction(math.floor(self.trunc))
        return QSeries(terms, trunc, 1)

    def to_denom(self, denom):
        return QSeries(self.terms, self.trunc, denom)

    def agrees_with(self, other, upto=None):
        """Term-by-term equality up to the shared truncation order (or ``upto``)."""
        t = self._min_trunc(self.trunc, other.trunc, None if upto is None else _frac(upto))
        keys = set(self.terms) | set(other.terms)
        for e in keys:
            if t is not None and e > t:
                continue
            if self.terms.get(e, 0) != other.terms.get(e, 0):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.terms == other.terms and self.trunc == other.trunc

    def __repr__(self):
        parts = [f"{c}*q^{e}" for e, c in self.items()[:8]]
        more = " + ..." if len(self.terms) > 8 else ""
        return f"QSeries({' + '.join(parts) or '0'}{more}; trunc={self.trunc})"

    # canonical text: header line then "num/den coeffnum/coeffden" per term
    def to_text(self):
        lines = [f"# denom {self.denom} trunc {self.trunc if self.trunc is not None else 'exact'}"]
        for e, c in self.items():
            lines.append(f"{e.numerator}/{e.denominator} {c.numerator}/{c.denominator}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        head = lines[0].split()
        if head[:2] != ["#", "denom"] or head[3] != "trunc":
            raise SeriesError("malformed series header")
        denom = int(head[2])
        trunc = None if head[4] == "exact" else Fraction(head[4])
        terms = {}
        for ln in lines[1:]:
            e, c = ln.split()
            terms[Fraction(e)] = Fraction(c)
        return cls(terms, trunc, denom)
