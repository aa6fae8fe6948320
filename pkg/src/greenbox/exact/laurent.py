"""
Laurent polynomials in the quantum parameter v, with integer coefficients.

This is the coefficient ring Z[v, v^-1] of Hecke algebras.  The quantum
integers live here:

    [a] = (v^a - v^-a) / (v - v^-1),      [2]_i = v^i + v^-i.

>>> str(quantum_int(2))
'v+v^-1'
>>> quantum_int(2) * quantum_int(2) == quantum_int(1) + quantum_int(3)
True
"""

from __future__ import annotations

from typing import Iterable


class LaurentInt:
    """Integer Laurent polynomial, stored as (lowest exponent, coefficients).

    The first and last stored coefficients are nonzero unless the element
    is zero, in which case ``coeffs`` is empty and ``low`` is 0.
    """

    __slots__ = ("low", "coeffs")

    def __init__(self, low: int = 0, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        shift = 0
        while shift < len(cs) and cs[shift] == 0:
            shift += 1
        cs = cs[shift:]
        object.__setattr__(self, "low", low + shift if cs else 0)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentInt is immutable")

    @staticmethod
    def zero() -> "LaurentInt":
        return LaurentInt()

    @staticmethod
    def one() -> "LaurentInt":
        return LaurentInt(0, [1])

    @staticmethod
    def const(c: int) -> "LaurentInt":
        return LaurentInt(0, [c])

    @staticmethod
    def v_power(k: int, c: int = 1) -> "LaurentInt":
        return LaurentInt(k, [c])

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        """Coefficient of v^k."""
        i = k - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentInt.const(other)
        return (isinstance(other, LaurentInt)
                and self.low == other.low and self.coeffs == other.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return LaurentInt(self.low, [-c for c in self.coeffs])

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentInt.const(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        out = [0] * (high - low + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - low + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - low + i] += c
        return LaurentInt(low, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentInt.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentInt(self.low, [other * c for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return LaurentInt.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentInt(self.low + other.low, out)

    __rmul__ = __mul__

    def bar(self) -> "LaurentInt":
        """The bar involution v -> v^-1."""
        return LaurentInt(-self.high, tuple(reversed(self.coeffs)))

    def eval_one(self) -> int:
        """Specialize v = 1."""
        return sum(self.coeffs)

    def nonneg(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __repr__(self):
        return f"LaurentInt({self.low}, {list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            k = self.low + i
            sign = "-" if c < 0 else ("+" if parts else "")
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                power = "v" if k == 1 else f"v^{k}"
                body = power if a == 1 else f"{a}*{power}"
            parts.append(sign + body)
        return "".join(parts)


def quantum_int(a: int) -> LaurentInt:
    """[a] = (v^a - v^-a)/(v - v^-1) = v^(a-1) + v^(a-3) + ... + v^(1-a)."""
    if a < 0:
        raise ValueError("quantum integer of a negative number")
    if a == 0:
        return LaurentInt.zero()
    return LaurentInt(1 - a, [1, 0] * (a - 1) + [1])


def bracket2(i: int) -> LaurentInt:
    """[2]_i = v^i + v^-i; in particular [2]_0 = 2."""
    if i < 0:
        raise ValueError("index must be nonnegative")
    if i == 0:
        return LaurentInt.const(2)
    return LaurentInt(-i, [1] + [0] * (2 * i - 1) + [1])
