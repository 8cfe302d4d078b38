"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Values are polynomials in zeta_N reduced modulo the N-th cyclotomic
polynomial, with Fraction coefficients; the canonical form (remainder of
degree < phi(N)) makes equality a coefficient comparison.  Mixed-conductor
arithmetic lifts both operands to the lcm conductor first.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=128)
def cyclotomic_poly(n):
    "Integer coefficient tuple (little-endian, monic) of the n-th cyclotomic polynomial."
    # x^n - 1 divided by the product of cyclotomic polynomials of proper divisors
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_exact_div(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _poly_exact_div(a, b):
    "Exact division of integer polynomial lists (little-endian)."
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        coef = a[i + len(b) - 1] // b[-1]
        out[i] = coef
        if coef:
            for j, bc in enumerate(b):
                a[i + j] -= coef * bc
    assert not any(a), "non-exact polynomial division"
    return out


def _phi(n):
    out = n
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            out -= out // f
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        out -= out // m
    return out


class Cyclotomic:
    """An element of Q(zeta_N) in canonical reduced form."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        self.n = n
        deg = _phi(n)
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > deg:
            coeffs = _reduce_mod_cyclotomic(coeffs, n)
        coeffs += [Fraction(0)] * (deg - len(coeffs))
        self.coeffs = tuple(coeffs)

    @classmethod
    def integer(cls, v):
        return cls(1, [Fraction(v)])

    @classmethod
    def rational(cls, v):
        return cls(1, [Fraction(v)])

    @classmethod
    def zeta(cls, n, k=1):
        k %= n
        poly = [Fraction(0)] * (k + 1)
        poly[k] = Fraction(1)
        return cls(n, poly)

    def lift(self, m):
        "The same value viewed in Q(zeta_m), n | m."
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError("conductor %d does not divide %d" % (self.n, m))
        step = m // self.n
        poly = [Fraction(0)] * (len(self.coeffs) * step)
        for k, c in enumerate(self.coeffs):
            if c:
                poly[k * step] = c
        return Cyclotomic(m, poly)

    def _common(self, other):
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.integer(other)
        m = self.n * other.n // gcd(self.n, other.n)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        a, b = self._common(other)
        return Cyclotomic(a.n, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Cyclotomic) else Cyclotomic.integer(-other))

    def __rsub__(self, other):
        return Cyclotomic.integer(other) - self

    def __mul__(self, other):
        a, b = self._common(other)
        out = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[i + j] += x * y
        return Cyclotomic(a.n, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Cyclotomic):
            raise TypeError("division only by rational scalars")
        return Cyclotomic(self.n, [c / Fraction(other) for c in self.coeffs])

    def galois(self, i):
        "Apply zeta_n -> zeta_n^i, gcd(i, n) = 1."
        if gcd(i, self.n) != 1:
            raise ValueError("galois exponent not coprime to conductor")
        out = [Fraction(0)] * self.n
        for k, c in enumerate(self.coeffs):
            if c:
                out[(k * i) % self.n] += c
        return Cyclotomic(self.n, out)

    def conj(self):
        "Complex conjugation zeta -> zeta^-1."
        if self.n == 1:
            return self
        return self.galois(self.n - 1)

    def norm_abs2(self):
        "The value times its conjugate (|value|^2 for character values)."
        return self * self.conj()

    def is_rational(self):
        return not any(self.coeffs[1:])

    def is_rational_integer(self):
        return self.is_rational() and self.coeffs[0].denominator == 1

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError("value is not rational: %r" % (self,))
        return self.coeffs[0]

    def to_int(self):
        f = self.to_fraction()
        if f.denominator != 1:
            raise ValueError("value is not an integer: %r" % (self,))
        return int(f)

    def is_zero(self):
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Cyclotomic.integer(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # hash at the current conductor; values compared across conductors
        # should be lifted explicitly first
        return hash((self.n, self.coeffs))

    def __repr__(self):
        if self.is_rational():
            f = self.coeffs[0]
            return str(f) if f.denominator != 1 else str(int(f))
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                terms.append("%s*z%d^%d" % (c, self.n, k))
        return " + ".join(terms)


def _reduce_mod_cyclotomic(coeffs, n):
    phi_n = list(cyclotomic_poly(n))
    deg = len(phi_n) - 1
    coeffs = list(coeffs)
    # first fold exponents >= n using zeta^n = 1
    if len(coeffs) > n:
        folded = [Fraction(0)] * n
        for k, c in enumerate(coeffs):
            folded[k % n] += c
        coeffs = folded
    while len(coeffs) > deg:
        if not coeffs[-1]:
            coeffs.pop()
            continue
        lead = coeffs[-1]
        shift = len(coeffs) - 1 - deg
        for j, pc in enumerate(phi_n):
            coeffs[shift + j] -= lead * pc
        coeffs.pop()
    return coeffs
