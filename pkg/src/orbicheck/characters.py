"""q-series for the Z/3 orbifold of the Leech lattice VOA.

Exponent convention: in a character the coefficient of q^(w-1) is the
dimension of the weight-w space.

Where the tau-trace comes from: tau acts on each Heisenberg level with
eigenvalues xi, xi^2 (12 each), and (1 - xi x)(1 - xi^2 x) = (1 - x^3)/(1 - x),
so the trace on V_Lambda is q^-1 prod (1 - q^n)^12 / (1 - q^{3n})^12
= eta(q)^12 / eta(q^3)^12 (Lambda has no tau-fixed vectors).
"""

from dataclasses import dataclass, field
from fractions import Fraction
import math
from pathlib import Path

import sympy

from .cache import cached_text
from .exact import CycRational, QSeries, SeriesError

DENOM = 72


class CharacterError(ValueError):
    pass


# --- eta quotients -------------------------------------------------------------

@dataclass(frozen=True)
class EtaQuotientSpec:
    """prod eta(q^t)^r over ``factors`` = ((t, r), ...)."""

    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((Fraction(t), int(r)) for t, r in self.factors))
        for t, _ in self.factors:
            if t <= 0:
                raise CharacterError("eta scale must be positive")
            if (t * DENOM).denominator != 1:
                raise CharacterError(f"scale {t} is incompatible with the exponent grid")

    @property
    def leading_exponent(self):
        return sum((t * r for t, r in self.factors), Fraction(0)) / 24


def euler_power(r, n_terms):
    """Coefficients of prod_{n>=1} (1 - x^n)^r up to x^(n_terms-1), exact integers."""
    if n_terms <= 0:
        return []
    e = [0] * n_terms
    # prod (1 - x^n) by direct multiplication
    e[0] = 1
    for n in range(1, n_terms):
        for k in range(n_terms - 1, n - 1, -1):
            e[k] -= e[k - n]
    # g = e^r through g' e = r e' g, i.e. k g_k = sum_j ((r + 1) j - k) e_j g_{k-j}
    g = [0] * n_terms
    g[0] = 1
    for k in range(1, n_terms):
        s = 0
        for j in range(1, k + 1):
            if e[j]:
                s += ((r + 1) * j - k) * e[j] * g[k - j]
        if s % k:
            raise CharacterError("non-integral power-series coefficient")
        g[k] = s // k
    return g


def eta_quotient(spec, order):
    """Expansion of the eta quotient up to q^order (inclusive)."""
    order = Fraction(order)
    lead = spec.leading_exponent
    if (lead * DENOM).denominator != 1:
        raise SeriesError("leading exponent leaves the denominator grid")
    span = order - lead
    result = QSeries.monomial(0, 1, trunc=span, denom=DENOM)
    for t, r in spec.factors:
        n_terms = int(math.floor(span / t)) + 1 if span >= 0 else 0
        coeffs = euler_power(r, n_terms)
        part = QSeries({k * t: c for k, c in enumerate(coeffs) if c}, trunc=span, denom=DENOM)
        result = result * part
    result = result.shift(lead)
    return result.with_trunc(order)


def pentagonal_eta24(order):
    """eta(q)^24 from the pentagonal number theorem (independent of eta_quotient)."""
    n = int(order)
    e = [0] * (n + 1)
    k = 0
    while True:
        done = True
        for m in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if m <= n - 1:
                e[m] = (-1) ** (k % 2)
                done = False
        if done and k > 0:
            break
        k += 1
    series = QSeries({i: c for i, c in enumerate(e[:n]) if c}, trunc=n - 1, denom=DENOM)
    return series.pow_int(24).shift(1).with_trunc(order)


# --- classical forms -------------------------------------------------------------

def eisenstein_E4(order):
    n = int(math.floor(Fraction(order)))
    terms = {0: 1}
    for k in range(1, n + 1):
        terms[k] = 240 * int(sympy.divisor_sigma(k, 3))
    return QSeries(terms, trunc=n, denom=DENOM)


def delta(order):
    return eta_quotient(EtaQuotientSpec(((1, 24),)), order)


def j_series(order):
    """J = E4^3/Delta - 744, coefficients up to q^order."""
    n = int(math.floor(Fraction(order)))
    e4 = eisenstein_E4(n + 1)
    d = delta(n + 2)
    j = (e4 * e4 * e4) * d.inverse()
    return (j - 744).with_trunc(n)


def leech_theta_oracle(order):
    """E4^3 - 720 Delta, the theta series of an even unimodular rank-24 lattice without roots."""
    e4 = eisenstein_E4(order)
    return (e4 * e4 * e4 - delta(order) * 720).with_trunc(order)


# --- twisted Fock spaces ---------------------------------------------------------

@dataclass(frozen=True)
class TwistProfile:
    """Multiplicity of each eigenvalue class xi^j of an order-p isometry."""

    mult: tuple = ((0, 0), (1, 12), (2, 12))
    p: int = 3

    def multiplicity(self, j):
        return dict(self.mult).get(j % self.p, 0)

    @property
    def rank(self):
        return sum(m for _, m in self.mult)

    @property
    def vacuum_weight(self):
        p = self.p
        return Fraction(sum(j * (p - j) * m for j, m in self.mult), 4 * p * p)


LEECH_PROFILE = TwistProfile()
UNTWISTED_24 = TwistProfile(((0, 24), (1, 0), (2, 0)))


def fock_counts(profile, levels):
    """Number of coloured multisets of parts n/p with total n_total/p, for n_total < levels.

    Part n/p comes in ``mult(n mod p)`` colours.  Counting is a plain
    unbounded-knapsack over (part, colour) pairs; no product formulas.
    """
    counts = [0] * levels
    counts[0] = 1
    for n in range(1, levels):
        for _ in range(profile.multiplicity(n)):
            for k in range(n, levels):
                counts[k] += counts[k - n]
    return counts


def fock_enumerate(profile, level):
    """Brute-force count of coloured multisets at one level (for small cross-checks)."""
    items = [(n, c) for n in range(1, level + 1) for c in range(profile.multiplicity(n))]
    out = 0

    def rec(i, remaining):
        nonlocal out
        if remaining == 0:
            out += 1
            return
        if i == len(items):
            return
        n, _ = items[i]
        for k in range(remaining // n + 1):
            rec(i + 1, remaining - k * n)

    rec(0, level)
    return out


def fock_character(profile, order):
    """sum_k counts_k q^(k/p + vacuum_weight - 1) up to q^order."""
    order = Fraction(order)
    shift = profile.vacuum_weight - 1
    levels = int(math.floor((order - shift) * profile.p)) + 1
    counts = fock_counts(profile, max(levels, 0))
    terms = {Fraction(k, profile.p) + shift: c for k, c in enumerate(counts) if c}
    return QSeries(terms, trunc=order, denom=DENOM)


def tau_trace_oracle(order):
    """q^-1 prod_n (1 - xi q^n)^-12 (1 - xi^2 q^n)^-12 expanded over Q(xi); returns QSeries."""
    n = int(order) + 1  # exponents of the product run 0..n
    xi = CycRational.xi(1)
    xi2 = CycRational.xi(2)
    poly = [CycRational(1)] + [CycRational(0)] * n
    for m in range(1, n + 1):
        for root in (xi, xi2):
            for _ in range(12):
                # multiply by 1/(1 - root q^m) = sum root^k q^{mk}
                for k in range(m, n + 1):
                    poly[k] = poly[k] + root * poly[k - m]
    terms = {}
    for k, c in enumerate(poly):
        if not c.is_real():
            raise CharacterError("tau-trace coefficient is not rational")
        if c.re:
            terms[k - 1] = c.re
    return QSeries(terms, trunc=order, denom=DENOM)


# --- the orbifold character --------------------------------------------------------

def defect_factor(tau_matrix):
    """sqrt(det(1 - tau)) on the lattice; the twisted-sector multiplicity."""
    m = sympy.Matrix(tau_matrix.tolist() if hasattr(tau_matrix, "tolist") else tau_matrix)
    d = int((sympy.eye(m.shape[0]) - m).det())
    r = math.isqrt(d)
    if r * r != d:
        raise CharacterError("det(1 - tau) is not a square")
    return r


@dataclass
class VsharpCharacters:
    fixed: QSeries
    twisted_integral: QSeries
    total: QSeries
    twisted_full: QSeries = field(repr=False, default=None)
    tau_trace: QSeries = field(repr=False, default=None)
    theta_over_eta: QSeries = field(repr=False, default=None)


def ch_vsharp_components(order, theta, defect=3 ** 6):
    """Characters of the fixed-point part, one integral twisted part, and their total.

    ``theta`` is the theta series of the lattice (coefficient of q^(n/2) =
    number of norm-n vectors), known at least to q^(order+1).
    """
    order = Fraction(order)
    eta24 = eta_quotient(EtaQuotientSpec(((1, 24),)), order + 2)
    theta_part = (theta.with_trunc(order + 1) * eta24.inverse()).with_trunc(order)
    tau = eta_quotient(EtaQuotientSpec(((1, 12), (3, -12))), order)
    fixed = ((theta_part + tau * 2) * Fraction(1, 3)).with_trunc(order)
    for e, c in fixed.items():
        if c.denominator != 1 or c < 0:
            raise CharacterError(f"fixed-point character has coefficient {c} at q^{e}")
    twisted = eta_quotient(EtaQuotientSpec(((1, 12), (Fraction(1, 3), -12))), order) * defect
    integral = twisted.integer_exponent_part().to_denom(DENOM)
    total = fixed + integral * 2
    return VsharpCharacters(fixed, integral, total, twisted, tau, theta_part)


# --- cache ----------------------------------------------------------------------------

def cached_series(cache_dir, name, builder):
    """Load ``name`` from ``cache_dir/series`` or build and store it; corrupt files are rebuilt."""
    path = None if cache_dir is None else Path(cache_dir) / "series" / f"{name}.txt"
    return cached_text(path, builder, QSeries.from_text, QSeries.to_text)
