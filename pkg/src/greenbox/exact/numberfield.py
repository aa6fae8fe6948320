"""
Arithmetic in small number fields Q[t]/(f) for monic irreducible f.

Gram matrix ranks have to be evaluated at algebraic values of the loop
parameter (roots of Chebyshev-type polynomials), which never need fields
of degree more than six here.  Elements are polynomials over Q reduced
modulo f; inversion is the extended Euclidean algorithm.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import IntPoly, QPoly

MAX_FIELD_DEGREE = 6


class NumberField:
    """The field Q[t]/(modulus); modulus monic irreducible of degree <= 6."""

    def __init__(self, modulus: IntPoly):
        from .factor import factor_rational
        if modulus.degree < 1:
            raise ValueError("modulus must have positive degree")
        if modulus.degree > MAX_FIELD_DEGREE:
            raise ValueError(
                f"field degree {modulus.degree} exceeds supported bound "
                f"{MAX_FIELD_DEGREE}")
        factors = factor_rational(modulus)
        if len(factors) != 1 or factors[0][1] != 1:
            raise ValueError(f"modulus {modulus} is not irreducible over Q")
        self.modulus = QPoly.from_int_poly(modulus).monic()
        self.int_modulus = modulus.primitive()

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def __eq__(self, other):
        return (isinstance(other, NumberField)
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"NumberField({self.int_modulus})"

    def element(self, value) -> "NFElem":
        if isinstance(value, NFElem):
            if value.field != self:
                raise ValueError("element of a different field")
            return value
        if isinstance(value, (int, Fraction)):
            return NFElem(self, QPoly([value]))
        if isinstance(value, IntPoly):
            value = QPoly.from_int_poly(value)
        return NFElem(self, value % self.modulus)

    def zero(self) -> "NFElem":
        return self.element(0)

    def one(self) -> "NFElem":
        return self.element(1)

    def generator(self) -> "NFElem":
        """The image of t."""
        return self.element(QPoly.x())


class NFElem:
    """An element of a NumberField: a Q-polynomial of degree < deg(modulus)."""

    __slots__ = ("field", "value")

    def __init__(self, field: NumberField, value: QPoly):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value % field.modulus)

    def __setattr__(self, name, value):
        raise AttributeError("NFElem is immutable")

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def __hash__(self):
        return hash((self.field, self.value))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.element(other)
        return (isinstance(other, NFElem) and self.field == other.field
                and self.value == other.value)

    def __bool__(self):
        return not self.is_zero()

    def _coerce(self, other) -> "NFElem":
        if isinstance(other, NFElem):
            if other.field != self.field:
                raise ValueError("mixed number fields")
            return other
        return self.field.element(other)

    def __neg__(self):
        return NFElem(self.field, -self.value)

    def __add__(self, other):
        other = self._coerce(other)
        return NFElem(self.field, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return NFElem(self.field, self.value - other.value)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        return NFElem(self.field, self.value * other.value)

    __rmul__ = __mul__

    def inverse(self) -> "NFElem":
        """Extended Euclid against the modulus; x * x.inverse() == 1."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a number field")
        # Invariant: r0 = s0*value (mod modulus), r1 = s1*value (mod modulus).
        r0, r1 = self.field.modulus, self.value
        s0, s1 = QPoly(), QPoly.one()
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        lead = r0.lc  # r0 is a nonzero constant: modulus is irreducible
        if r0.degree != 0:
            raise ArithmeticError("modulus was not irreducible")
        inv = s0 * (1 / lead)
        return NFElem(self.field, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self):
        return f"NFElem({self.value} mod {self.field.int_modulus})"


def evaluate_poly_at(p: IntPoly, x: NFElem) -> NFElem:
    """Evaluate an integer polynomial at a number-field element."""
    acc = x.field.zero()
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc
