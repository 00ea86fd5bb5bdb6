"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored as coefficient tuples of the residue modulo the N-th
cyclotomic polynomial, in the power basis 1, x, ..., x^(d-1) with
d = phi(N).  Coefficients are ints whenever possible and Fractions
otherwise, so integral matrices (the generator matrices of a Coxeter group
have entries in Z[zeta_N]) never pay for rational arithmetic.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import mpmath


def _poly_divmod_monic(num, den):
    """Divide polynomials (low-to-high coefficients) by a monic integer ``den``."""
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for j in range(dd + 1):
                num[k - dd + j] -= c * den[j]
    return quot, num[:dd]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial.

    Computed as (x^n - 1) divided exactly by every Phi_d with d a proper
    divisor of n.
    """
    if n < 1:
        raise ValueError(f"cyclotomic index must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_monic(poly, cyclotomic_polynomial(d))
            assert not any(rem), "inexact cyclotomic division"
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _normed(values) -> tuple:
    out = tuple(values)
    if all(c.__class__ is int for c in out):
        return out
    return tuple(_norm(c) for c in out)


class CyclotomicField:
    """The field Q(zeta_N) with its power-basis reduction tables."""

    def __init__(self, conductor: int):
        if conductor < 1:
            raise ValueError(f"conductor must be positive, got {conductor}")
        self.conductor = conductor
        self.modulus = cyclotomic_polynomial(conductor)
        self.degree = len(self.modulus) - 1
        d = self.degree
        # residues of x^k for d <= k <= 2d - 2, used to fold products back
        self._fold = []
        cur = [0] * d
        if d:
            cur = [-c for c in self.modulus[:d]]  # x^d
        for _ in range(max(d - 1, 0)):
            self._fold.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(d):
                    cur[j] -= top * self.modulus[j]
        self._angles = [2 * math.pi * k / conductor for k in range(d)]
        self.zero = CycloNumber(self, (0,) * d)
        self.one = self.from_rational(1)

    def __repr__(self):
        return f"CyclotomicField({self.conductor})"

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.conductor == self.conductor

    def __hash__(self):
        return hash(("CyclotomicField", self.conductor))

    def reduce(self, coeffs) -> tuple:
        """Reduce an arbitrary-length coefficient list modulo Phi_N."""
        d = self.degree
        out = list(coeffs[:d]) + [0] * max(0, d - len(coeffs))
        extra = coeffs[d:]
        if len(extra) > len(self._fold):
            _, rem = _poly_divmod_monic(coeffs, self.modulus)
            out = list(rem) + [0] * (d - len(rem))
        else:
            for k, c in enumerate(extra):
                if c:
                    for j, f in enumerate(self._fold[k]):
                        if f:
                            out[j] += c * f
        return _normed(out)

    def from_rational(self, q) -> "CycloNumber":
        coeffs = [0] * self.degree
        coeffs[0] = _norm(Fraction(q))
        return CycloNumber(self, tuple(coeffs))

    def zeta(self, k: int = 1) -> "CycloNumber":
        """The power zeta_N^k, exponent taken mod N."""
        k %= self.conductor
        coeffs = [0] * (k + 1)
        coeffs[k] = 1
        return CycloNumber(self, self.reduce(coeffs))

    def cos_pi_over(self, m: int) -> "CycloNumber":
        """cos(pi/m) = (zeta_2m + zeta_2m^-1) / 2; requires 2m | N."""
        if self.conductor % (2 * m):
            raise ValueError(f"cos(pi/{m}) does not lie in Q(zeta_{self.conductor})")
        step = self.conductor // (2 * m)
        return (self.zeta(step) + self.zeta(-step)) * Fraction(1, 2)


@lru_cache(maxsize=None)
def cyclotomic_field(conductor: int) -> CyclotomicField:
    return CyclotomicField(conductor)


class CycloNumber:
    """An exact element of Q(zeta_N)."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: CyclotomicField, coeffs: tuple):
        if len(coeffs) != field.degree:
            raise ValueError(
                f"expected {field.degree} coefficients for {field!r}, got {len(coeffs)}"
            )
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            if other.field.conductor != self.field.conductor:
                raise ValueError(
                    f"mixed fields: Q(zeta_{self.field.conductor}) and Q(zeta_{other.field.conductor})"
                )
            return other
        if isinstance(other, (int, Rational)):
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        if other.__class__ is not CycloNumber or other.field is not self.field:
            other = self._coerce(other)
            if other is NotImplemented:
                return other
        return CycloNumber(self.field, _normed(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNumber(self.field, _normed(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CycloNumber(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if other.__class__ is not CycloNumber:
            if isinstance(other, (int, Rational)) and not isinstance(other, bool):
                q = _norm(Fraction(other))
                return CycloNumber(self.field, _normed(a * q for a in self.coeffs))
            other = self._coerce(other)
            if other is NotImplemented:
                return other
        elif other.field is not self.field:
            other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        d = len(a)
        prod = [0] * (2 * d - 1) if d else []
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycloNumber(self.field, self.field.reduce(prod))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, CycloNumber):
            return self.field.conductor == other.field.conductor and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs == self.field.from_rational(other).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.conductor, self.coeffs))
        return self._hash

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        return complex(
            sum(float(c) * math.cos(t) for c, t in zip(self.coeffs, self.field._angles)),
            sum(float(c) * math.sin(t) for c, t in zip(self.coeffs, self.field._angles)),
        )

    def __float__(self):
        """Real part; callers are responsible for the element being real."""
        return complex(self).real

    def sign(self) -> int:
        """Sign of a real element: -1, 0 or 1, decided exactly for zero.

        A float evaluation decides clearly nonzero values; values near zero
        are re-evaluated with mpmath at a precision scaled to the
        coefficient sizes.
        """
        if self.is_zero():
            return 0
        scale = 1.0 + sum(abs(float(c)) for c in self.coeffs)
        v = float(self)
        if abs(v) > 1e-9 * scale:
            return 1 if v > 0 else -1
        digits = 60 + int(math.log10(scale))
        with mpmath.workdps(digits):
            n = self.field.conductor
            w = mpmath.fsum(
                mpmath.mpf(c.numerator) / c.denominator * mpmath.cospi(mpmath.mpf(2 * k) / n)
                if isinstance(c, Fraction)
                else c * mpmath.cospi(mpmath.mpf(2 * k) / n)
                for k, c in enumerate(self.coeffs)
                if c
            )
            if abs(w) < mpmath.mpf(10) ** (-(digits - 15)):
                raise ArithmeticError(f"cannot separate {self!r} from zero at {digits} digits")
            return 1 if w > 0 else -1

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"<{body} in Q(zeta_{self.field.conductor})>"
