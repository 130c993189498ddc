"""The constants c^i_{mn} of the twisted vertex operator correction, over Q(xi).

sum c^0_{mn} x^m y^n = -1/2 sum_{r=1,2} log(u_r),  sum c^i_{mn} x^m y^n = 1/2 log(u_i),
with u_r = ((1+x)^(1/3) - xi^(-r) (1+y)^(1/3)) / (1 - xi^(-r)).
"""

from fractions import Fraction

from .exact import CycRational

MAX_ORDER = 16


class TwistError(ValueError):
    pass


class BivariateCycSeries:
    """Truncated sum c_{mn} x^m y^n with m + n <= order."""

    def __init__(self, coeffs=None, order=8):
        self.order = int(order)
        self.coeffs = {}
        for (m, n), c in (coeffs or {}).items():
            if m + n <= self.order and not c.is_zero():
                self.coeffs[(m, n)] = c

    def __getitem__(self, mn):
        m, n = mn
        if m + n > self.order:
            raise TwistError(f"({m}, {n}) beyond order {self.order}")
        return self.coeffs.get((m, n), CycRational(0))

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, CycRational(0)) + c
        return BivariateCycSeries(out, min(self.order, other.order))

    def __sub__(self, other):
        return self + other.scale(CycRational(-1))

    def scale(self, c):
        c = c if isinstance(c, CycRational) else CycRational(c)
        return BivariateCycSeries({k: v * c for k, v in self.coeffs.items()}, self.order)

    def __mul__(self, other):
        order = min(self.order, other.order)
        out = {}
        for (a, b), c in self.coeffs.items():
            for (d, e), f in other.coeffs.items():
                if a + b + d + e <= order:
                    k = (a + d, b + e)
                    out[k] = out.get(k, CycRational(0)) + c * f
        return BivariateCycSeries(out, order)

    def conj(self):
        return BivariateCycSeries({k: v.conj() for k, v in self.coeffs.items()}, self.order)

    def swap(self):
        return BivariateCycSeries({(n, m): v for (m, n), v in self.coeffs.items()}, self.order)

    def constant(self):
        return self.coeffs.get((0, 0), CycRational(0))

    def keys(self):
        return [(m, k - m) for k in range(self.order + 1) for m in range(k, -1, -1)]

    def __eq__(self, other):
        return self.order == other.order and self.coeffs == other.coeffs

    def truncate(self, order):
        return BivariateCycSeries(self.coeffs, min(order, self.order))

    def to_text(self, i):
        lines = []
        for m, n in self.keys():
            c = self[(m, n)]
            lines.append(f"{m} {n} {i} {c.re} {c.im}")
        return "\n".join(lines) + "\n"


def binomial_series(alpha, order):
    """Coefficients of (1 + t)^alpha up to t^order."""
    alpha = Fraction(alpha)
    out = [Fraction(1)]
    for k in range(1, order + 1):
        out.append(out[-1] * (alpha - k + 1) / k)
    return out


def log_one_plus(w, order):
    """log(1 + w) for w without constant term."""
    if not w.constant().is_zero():
        raise TwistError("log argument must have constant term 1")
    result = BivariateCycSeries({}, order)
    power = BivariateCycSeries({(0, 0): CycRational(1)}, order)
    for k in range(1, order + 1):
        power = power * w
        sign = 1 if k % 2 else -1
        result = result + power.scale(CycRational(Fraction(sign, k)))
    return result


def log_argument(r, order):
    """u_r as a bivariate series; its constant term is asserted to be 1."""
    b = binomial_series(Fraction(1, 3), order)
    root = CycRational.xi(-r % 3)  # xi^(-r)
    denom = CycRational(1) - root
    if denom.is_zero():
        raise TwistError("r must be non-zero mod 3")
    inv = denom.inverse()
    coeffs = {}
    for k, c in enumerate(b):
        coeffs[(k, 0)] = coeffs.get((k, 0), CycRational(0)) + CycRational(c) * inv
        coeffs[(0, k)] = coeffs.get((0, k), CycRational(0)) - root * CycRational(c) * inv
    u = BivariateCycSeries(coeffs, order)
    if u.constant() != CycRational(1):
        raise TwistError("normalised log argument does not start with 1")
    return u


def compute_cmn(i, order):
    """c^i_{mn} for m + n <= order."""
    if not 0 <= order <= MAX_ORDER:
        raise TwistError(f"order must lie in 0..{MAX_ORDER}")
    i = int(i) % 3

    def log_u(r):
        u = log_argument(r, order)
        return log_one_plus(u - BivariateCycSeries({(0, 0): CycRational(1)}, order), order)

    if i == 0:
        return (log_u(1) + log_u(2)).scale(CycRational(Fraction(-1, 2)))
    return log_u(i).scale(CycRational(Fraction(1, 2)))


def export_table(order):
    return "".join(compute_cmn(i, order).to_text(i) for i in range(3))
