"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are rational polynomials in zeta = exp(2 pi i / N) reduced modulo
the N-th cyclotomic polynomial, so equality is coefficientwise.  The heavy
lifting is done by python-flint's ``fmpq_poly``.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from flint import fmpq, fmpq_poly, fmpz_poly


@dataclass(frozen=True)
class FieldParams:
    """Root order r (odd), label denominator D and the conductor N.

    Labels live in (1/D)Z, halved labels in (1/2D)Z.  R-matrix coefficients
    multiply a halved label by a label, so exponents of q reach (1/2D^2)Z;
    N = r * lcm(4, 2 D^2) covers those together with i and sqrt(r).
    """

    r: int
    D: int

    def __post_init__(self):
        if self.r < 3 or self.r % 2 == 0:
            raise ValueError(f"r must be odd and >= 3, got {self.r}")
        if self.D < 1:
            raise ValueError(f"D must be positive, got {self.D}")

    @property
    def rprime(self) -> int:
        return self.r // gcd(2, self.r)

    @property
    def N(self) -> int:
        return self.r * lcm(4, 2 * self.D * self.D)

    @property
    def exponent_denominator(self) -> int:
        """Largest denominator allowed for an exponent e in q^e."""
        return self.N // self.r


class CycField:
    """The field Q(zeta_N) attached to some FieldParams."""

    def __init__(self, params: FieldParams):
        self.params = params
        self.N = params.N
        self.modulus = fmpq_poly(fmpz_poly.cyclotomic(self.N))
        self.degree = self.modulus.degree()
        self._zeta = [self._reduce(fmpq_poly([0] * k + [1])) for k in range(self.N)]
        self._sqrt = None
        self.zero = CycScalar(self, fmpq_poly([]))
        self.one = CycScalar(self, fmpq_poly([1]))

    def __repr__(self) -> str:
        return f"CycField(r={self.params.r}, D={self.params.D}, N={self.N})"

    def _reduce(self, p: fmpq_poly) -> fmpq_poly:
        if p.degree() >= self.degree:
            return p % self.modulus
        return p

    def __call__(self, value) -> "CycScalar":
        if isinstance(value, CycScalar):
            if value.field is not self:
                raise ValueError("scalar belongs to a different field")
            return value
        if isinstance(value, Fraction):
            value = fmpq(value.numerator, value.denominator)
        return CycScalar(self, fmpq_poly([value]))

    def zeta_power(self, k: int) -> "CycScalar":
        return CycScalar(self, self._zeta[k % self.N])

    def q_power(self, e) -> "CycScalar":
        """q^e = exp(2 pi i e / r) for rational e."""
        e = Fraction(e)
        k = e * (self.N // self.params.r)
        if k.denominator != 1:
            raise ValueError(
                f"q^{e} is outside the field (exponent denominator must divide "
                f"{self.params.exponent_denominator})"
            )
        return CycScalar(self, self._zeta[int(k) % self.N])

    def sqrt_rprime(self) -> "CycScalar":
        """The square root of r' that is positive in the standard embedding."""
        if self._sqrt is None:
            r = self.params.r
            # quadratic Gauss sum: sum_k q^{k^2} = sqrt(r) or i sqrt(r)
            g = self.zero
            for k in range(r):
                g = g + self.q_power(k * k)
            if r % 4 == 3:
                g = g * self.zeta_power(-self.N // 4)
            if g.to_complex().real < 0:
                g = -g
            if g * g != self(self.params.rprime):
                raise ArithmeticError("Gauss sum did not produce sqrt(r')")
            self._sqrt = g
        return self._sqrt

    def bracket(self, a) -> "CycScalar":
        """{a} = q^a - q^-a."""
        return self.q_power(a) - self.q_power(-Fraction(a))

    def qint(self, k: int) -> "CycScalar":
        """[k] = {k}/{1}."""
        return self.bracket(k) / self.bracket(1)

    def qfactorial(self, k: int) -> "CycScalar":
        out = self.one
        for j in range(1, k + 1):
            out = out * self.qint(j)
        return out

    def qbinomial(self, n: int, k: int) -> "CycScalar":
        if k < 0 or k > n:
            return self.zero
        return self.qfactorial(n) / (self.qfactorial(k) * self.qfactorial(n - k))

    def falling_bracket(self, n, k: int) -> "CycScalar":
        """{n; k} = prod_{j<k} {n - j}."""
        out = self.one
        n = Fraction(n)
        for j in range(k):
            out = out * self.bracket(n - j)
        return out


@lru_cache(maxsize=None)
def get_field(r: int, D: int) -> CycField:
    return CycField(FieldParams(r, D))


class CycScalar:
    """An immutable element of a CycField."""

    __slots__ = ("field", "poly")

    def __init__(self, field: CycField, poly: fmpq_poly):
        self.field = field
        self.poly = poly

    def _lift(self, other):
        if isinstance(other, CycScalar):
            if other.field is not self.field:
                raise ValueError("mixing scalars of different fields")
            return other.poly
        if isinstance(other, Fraction):
            return fmpq_poly([fmpq(other.numerator, other.denominator)])
        if isinstance(other, int):
            return fmpq_poly([other])
        return NotImplemented

    def __add__(self, other):
        p = self._lift(other)
        if p is NotImplemented:
            return p
        return CycScalar(self.field, self.poly + p)

    __radd__ = __add__

    def __sub__(self, other):
        p = self._lift(other)
        if p is NotImplemented:
            return p
        return CycScalar(self.field, self.poly - p)

    def __rsub__(self, other):
        p = self._lift(other)
        if p is NotImplemented:
            return p
        return CycScalar(self.field, p - self.poly)

    def __neg__(self):
        return CycScalar(self.field, -self.poly)

    def __mul__(self, other):
        p = self._lift(other)
        if p is NotImplemented:
            return p
        return CycScalar(self.field, self.field._reduce(self.poly * p))

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        if self.poly.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        g, s, _ = self.poly.xgcd(self.field.modulus)
        # g is a nonzero constant because the modulus is irreducible
        return CycScalar(self.field, self.field._reduce(s / g[0]))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        if not isinstance(other, CycScalar):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = self.field.one, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, CycScalar):
            return self.field is other.field and self.poly == other.poly
        if isinstance(other, (int, Fraction)):
            return self.poly == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(str(c) for c in self.poly.coeffs()))

    def __bool__(self):
        return not self.poly.is_zero()

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def coefficients(self) -> list[Fraction]:
        """Power-basis coefficients, padded to the field degree."""
        cs = [Fraction(int(c.p), int(c.q)) for c in self.poly.coeffs()]
        return cs + [Fraction(0)] * (self.field.degree - len(cs))

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.field.N)
        out = 0j
        for c in reversed(self.poly.coeffs()):
            out = out * z + float(c.p) / float(c.q)
        return out

    def __repr__(self) -> str:
        return f"CycScalar({self.poly.str()})"
