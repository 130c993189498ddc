"""Factored group orders and the order arithmetic behind the 3-local subgroups."""

from functools import reduce

import sympy

from .report import make_check


class FactoredInteger:
    """A positive integer kept as {prime: exponent}."""

    def __init__(self, value=1):
        if isinstance(value, dict):
            f = {int(p): int(e) for p, e in value.items() if e}
            if any(e < 0 for e in f.values()):
                raise ValueError("negative exponent")
            if any(not sympy.isprime(p) for p in f):
                raise ValueError("factor base contains a non-prime")
            self.f = dict(sorted(f.items()))
        else:
            n = int(value)
            if n <= 0:
                raise ValueError("only positive integers are factored")
            self.f = dict(sorted(sympy.factorint(n).items()))

    @property
    def value(self):
        return reduce(lambda a, pe: a * pe[0] ** pe[1], self.f.items(), 1)

    def __int__(self):
        return self.value

    def __mul__(self, other):
        other = other if isinstance(other, FactoredInteger) else FactoredInteger(other)
        f = dict(self.f)
        for p, e in other.f.items():
            f[p] = f.get(p, 0) + e
        return FactoredInteger(f)

    __rmul__ = __mul__

    def divides(self, other):
        other = other if isinstance(other, FactoredInteger) else FactoredInteger(other)
        return all(other.f.get(p, 0) >= e for p, e in self.f.items())

    def __truediv__(self, other):
        other = other if isinstance(other, FactoredInteger) else FactoredInteger(other)
        if not other.divides(self):
            raise ValueError("inexact division")
        f = dict(self.f)
        for p, e in other.f.items():
            f[p] -= e
        return FactoredInteger(f)

    def __pow__(self, k):
        return FactoredInteger({p: e * k for p, e in self.f.items()})

    def p_part(self, p):
        return FactoredInteger({p: self.f.get(p, 0)})

    def exponent(self, p):
        return self.f.get(p, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other
        return isinstance(other, FactoredInteger) and self.f == other.f

    def __hash__(self):
        return hash(tuple(self.f.items()))

    def __str__(self):
        if not self.f:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.f.items())

    def __repr__(self):
        return f"FactoredInteger({self})"


SUZ = FactoredInteger({2: 13, 3: 7, 5: 2, 7: 1, 11: 1, 13: 1})
PSU4_3 = FactoredInteger({2: 7, 3: 6, 5: 1, 7: 1})


def orthogonal_order(m, q, kind):
    """|O^eps_{2m}(q)| = 2 q^{m(m-1)} (q^m - eps) prod_{i<m} (q^{2i} - 1), q odd."""
    eps = {"plus": 1, "minus": -1}[kind]
    n = 2 * q ** (m * (m - 1)) * (q ** m - eps)
    for i in range(1, m):
        n *= q ** (2 * i) - 1
    return FactoredInteger(n)


def odd_orthogonal_order(m, q):
    """|O_{2m+1}(q)| = 2 q^{m^2} prod_{i<=m} (q^{2i} - 1), q odd."""
    n = 2 * q ** (m * m)
    for i in range(1, m + 1):
        n *= q ** (2 * i) - 1
    return FactoredInteger(n)


def orthogonal_group_order(n, q=3, kind=None):
    if n == 0:
        return FactoredInteger(1)
    if n == 1:
        return FactoredInteger(2)
    if n % 2:
        return odd_orthogonal_order(n // 2, q)
    return orthogonal_order(n // 2, q, kind)


def singular_vector_count(m, q, kind):
    """Nonzero singular vectors of a non-degenerate 2m-dimensional space."""
    eps = {"plus": 1, "minus": -1}[kind]
    return (q ** m - eps) * (q ** (m - 1) + eps)


def omega_minus_8_3():
    return orthogonal_order(4, 3, "minus") / 4


def shape_arithmetic_suite():
    omega = omega_minus_8_3()
    h1 = FactoredInteger(3) ** 13 * 4 * SUZ
    h2 = FactoredInteger(3) ** 8 * 2 * omega
    h12 = FactoredInteger(3) ** 8 * FactoredInteger(3) ** 6 * 8 * PSU4_3
    lhs = 2 * omega
    rhs = FactoredInteger(1066) * 729 * 8 * PSU4_3
    checks = [
        make_check("grp-suz-order", "|Suz| from its factorisation", "order of Suz, 2^13.3^7.5^2.7.11.13",
                   SUZ.value, 448345497600),
        make_check("grp-psu43-order", "|PSU4(3)| from its factorisation", "|PSU(4,3)| = 2^7.3^6.5.7",
                   PSU4_3.value, 3265920),
        make_check("grp-omega-order", "|Omega^-_8(3)| = |O^-_8(3)|/4", "the commutator subgroup Omega^-_8(3)",
                   omega.value, 10151968619520),
        make_check("grp-H1-3part", "3-part of |H1| = 3^13 * 4|Suz|", "Sylow 3-subgroup of H1 has order 3^20",
                   str(h1.p_part(3)), "3^20"),
        make_check("grp-H2-3part", "3-part of |H2| = 3^8 * 2|Omega^-_8(3)|", "H2 of shape 3^8.Omega^-_8(3).2",
                   str(h2.p_part(3)), "3^20"),
        make_check("grp-H12-3part", "3-part of |H1 cap H2| = 3^8 * 3^6 * 8|PSU4(3)|",
                   "intersection of shape 3^8.(3^6.(2 PSU4(3).2^2))", str(h12.p_part(3)), "3^20"),
        make_check("grp-H12-divides-H1", "|H1 cap H2| divides |H1|", "intersection is a subgroup of H1",
                   h12.divides(h1), True),
        make_check("grp-H12-divides-H2", "|H1 cap H2| divides |H2|", "intersection is a subgroup of H2",
                   h12.divides(h2), True),
        make_check("grp-stabilizer-identity", "2|Omega^-_8(3)| = 1066 * 3^6 * 8|PSU4(3)|",
                   "stabiliser of a singular point in Omega^-_8(3).2", lhs.value, rhs.value),
        make_check("grp-roundtrip", "factored orders survive expansion and refactorisation",
                   "exact factored bookkeeping",
                   all(FactoredInteger(x.value) == x for x in (SUZ, PSU4_3, omega, h1, h2, h12)), True),
    ]
    return checks


def dimension_sums():
    return [
        make_check("grp-dim-2A", "1 + 1 + 4371 + 96255 + 96256", "weight-2 decomposition under a 2A centraliser",
                   1 + 1 + 4371 + 96255 + 96256, 196884),
        make_check("grp-dim-2B", "1 + 299 + 98280 + 98304", "weight-2 decomposition under a 2B centraliser",
                   1 + 299 + 98280 + 98304, 196884),
        make_check("grp-ising-mod3", "496 mod 3", "496 Ising vectors cannot be permuted freely by an element of order 3",
                   496 % 3, 1),
    ]
