"""
Dense univariate polynomials with exact integer coefficients.

These are the workhorses for the loop parameter delta: Gram matrix entries
are monomials ``d^k``, determinants are products like ``(d-1)^4*(d+1)^4*(d^2-2)``,
and ranks over Z[d] are computed by fraction-free elimination, so exact
integer coefficient arithmetic is all we ever need.  Coefficients are stored
lowest degree first with trailing zeros stripped.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


class IntPoly:
    """A polynomial in one variable over Z, immutable.

    >>> str(IntPoly([-2, 0, 1]))
    'd^2-2'
    >>> IntPoly.x() ** 2 - 2 == IntPoly([-2, 0, 1])
    True
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {c!r}")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly()

    @staticmethod
    def one() -> "IntPoly":
        return IntPoly([1])

    @staticmethod
    def x() -> "IntPoly":
        return IntPoly([0, 1])

    @staticmethod
    def const(c: int) -> "IntPoly":
        return IntPoly([c])

    @staticmethod
    def monomial(k: int, c: int = 1) -> "IntPoly":
        return IntPoly([0] * k + [c])

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def __hash__(self):
        return hash(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __add__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "IntPoly":
        return (-self) + other

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([other * c for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return IntPoly((0,) * k + self.coeffs)

    def divmod_exact(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Division with remainder, valid only when all quotient
        coefficients stay integral (e.g. monic divisor or known-exact
        division).  Raises if a coefficient quotient is not integral."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.coeffs
        q = [0] * max(0, len(rem) - len(d) + 1)
        while len(rem) >= len(d):
            c, r = divmod(rem[-1], d[-1])
            if r:
                raise ValueError("non-exact polynomial division")
            k = len(rem) - len(d)
            q[k] = c
            for i, di in enumerate(d):
                rem[k + i] -= c * di
            while rem and rem[-1] == 0:
                rem.pop()
        return IntPoly(q), IntPoly(rem)

    def divexact(self, other: "IntPoly") -> "IntPoly":
        q, r = self.divmod_exact(other)
        if not r.is_zero():
            raise ValueError("non-exact polynomial division")
        return q

    def pseudo_rem(self, other: "IntPoly") -> "IntPoly":
        """Pseudo-remainder: rem of lc(other)^(deg a - deg b + 1) * a by other."""
        if other.is_zero():
            raise ZeroDivisionError
        a = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        lb = b[-1]
        if len(a) - 1 < db:
            return self
        e = len(a) - len(b) + 1
        while len(a) - 1 >= db and any(a):
            la = a[-1]
            k = len(a) - len(b)
            a = [c * lb for c in a]
            for i, bi in enumerate(b):
                a[k + i] -= la * bi
            while a and a[-1] == 0:
                a.pop()
            e -= 1
        return IntPoly(a) * (lb ** max(e, 0))

    def content(self) -> int:
        """Gcd of the coefficients (nonnegative; 0 for the zero poly)."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly([c // g for c in self.coeffs])

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval_fraction(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_int(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "IntPoly") -> "IntPoly":
        acc = IntPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * other + IntPoly.const(c)
        return acc

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return poly_str(self)


def poly_str(p: IntPoly, var: str = "d") -> str:
    """Canonical ASCII rendering, highest power first: ``d^2-2``."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        a = abs(c)
        if k == 0:
            body = str(a)
        elif k == 1:
            body = var if a == 1 else f"{a}*{var}"
        else:
            body = f"{var}^{k}" if a == 1 else f"{a}*{var}^{k}"
        parts.append(sign + body)
    return "".join(parts)


def factored_str(factors: Sequence[tuple[IntPoly, int]], content: int = 1,
                 var: str = "d") -> str:
    """Render a factorization like ``(d-1)^4*(d+1)^4*(d^2-2)``."""
    parts = []
    if content != 1 or not factors:
        parts.append(str(content))
    for f, m in factors:
        base = poly_str(f, var)
        if f.degree >= 1 and (len(f.coeffs) > 1 or m > 1):
            base = f"({base})"
        parts.append(base if m == 1 else f"{base}^{m}")
    return "*".join(parts)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over Z via the subresultant pseudo-remainder sequence.

    The result is primitive with positive leading coefficient; gcd with 0
    returns the primitive part of the other argument.
    """
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    ca, cb = a.content(), b.content()
    g0 = gcd(ca, cb)
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = a.pseudo_rem(b)
        a, b = b, r.primitive() if not r.is_zero() else IntPoly.zero()
    h = a.primitive()
    if h.degree == 0:
        return IntPoly.const(g0) if g0 else IntPoly.one()
    return h


def chebyshev_u(k: int) -> IntPoly:
    """Normalized Chebyshev polynomial of the second kind.

    U_0 = 1, U_1 = X, U_k = X*U_{k-1} - U_{k-2}.

    >>> str(chebyshev_u(4))
    'd^4-3*d^2+1'
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    prev, cur = IntPoly.one(), IntPoly.x()
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, IntPoly.x() * cur - prev
    return cur


class QPoly:
    """A polynomial over Q, used for number-field values and the dihedral
    middle-cell polynomials.  Thin wrapper: list of Fractions, low degree
    first, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @staticmethod
    def from_int_poly(p: IntPoly) -> "QPoly":
        return QPoly(p.coeffs)

    @staticmethod
    def x() -> "QPoly":
        return QPoly([0, 1])

    @staticmethod
    def one() -> "QPoly":
        return QPoly([1])

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def monic(self) -> "QPoly":
        if self.is_zero():
            return self
        l = self.lc
        return QPoly([c / l for c in self.coeffs])

    def __hash__(self):
        return hash(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly([other])
        if isinstance(other, IntPoly):
            other = QPoly.from_int_poly(other)
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __neg__(self):
        return QPoly([-c for c in self.coeffs])

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return QPoly(out)

    __rmul__ = __mul__

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        if other.is_zero():
            raise ZeroDivisionError
        rem = list(self.coeffs)
        d = other.coeffs
        q = [Fraction(0)] * max(0, len(rem) - len(d) + 1)
        while len(rem) >= len(d):
            c = rem[-1] / d[-1]
            k = len(rem) - len(d)
            q[k] = c
            for i, di in enumerate(d):
                rem[k + i] -= c * di
            while rem and rem[-1] == 0:
                rem.pop()
        return QPoly(q), QPoly(rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def eval(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def clear_denominators(self) -> IntPoly:
        """Smallest positive integer multiple with integer coefficients."""
        from math import lcm
        denom = 1
        for c in self.coeffs:
            denom = lcm(denom, c.denominator)
        return IntPoly([int(c * denom) for c in self.coeffs])

    def __repr__(self):
        return f"QPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            a = abs(c)
            if k == 0:
                body = str(a)
            elif k == 1:
                body = "X" if a == 1 else f"{a}*X"
            else:
                body = f"X^{k}" if a == 1 else f"{a}*X^{k}"
            parts.append(sign + body)
        return "".join(parts)


def qpoly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic gcd over Q."""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()
