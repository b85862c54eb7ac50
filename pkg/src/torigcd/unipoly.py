"""Dense univariate polynomials over exact rationals.

Coefficients are fractions.Fraction values stored little-endian with no
trailing zeros, so two polynomials are equal iff their coefficient tuples
are equal.  The degree of the zero polynomial is the sentinel -1 (callers
that rely on deg(0) = -infinity semantics must special-case zero).  Gcd
computations clear denominators and run in the integer kernel.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from . import kernel

Scalar = Union[int, Fraction]


class UniPoly:
    """Immutable univariate polynomial over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @staticmethod
    def constant(c: Scalar) -> "UniPoly":
        return UniPoly((c,))

    @staticmethod
    def monomial(k: int, c: Scalar = 1) -> "UniPoly":
        """c * z^k."""
        return UniPoly([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 as the zero-polynomial sentinel."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __add__(self, other) -> "UniPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "UniPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "UniPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return UniPoly()
            return UniPoly(c * other for c in self.coeffs)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __divmod__(self, other: "UniPoly"):
        if not isinstance(other, UniPoly):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dg = other.degree
        glc = other.lc
        quot = [Fraction(0)] * max(len(rem) - dg, 1)
        while len(rem) - 1 >= dg and rem:
            q = rem[-1] / glc
            shift = len(rem) - 1 - dg
            quot[shift] = q
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= q * c
            while rem and rem[-1] == 0:
                rem.pop()
        return UniPoly(quot), UniPoly(rem)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def monic(self) -> "UniPoly":
        """Scale to leading coefficient 1; zero stays zero."""
        if self.is_zero() or self.lc == 1:
            return self
        return self * (Fraction(1) / self.lc)

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def evaluate(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_power(self, k: int) -> "UniPoly":
        """p(z^k)."""
        if k <= 0:
            raise ValueError("power substitution needs k >= 1")
        out = [Fraction(0)] * (len(self.coeffs) * k)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return UniPoly(out)

    def to_int_coeffs(self) -> "tuple[int, list[int]]":
        """Return (denominator, scaled integer coefficients) with denominator > 0."""
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return den, [int(c * den) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return format_unipoly(self)


def _coerce(value) -> "UniPoly | None":
    if isinstance(value, UniPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return UniPoly.constant(value)
    return None


ZERO = UniPoly()
ONE = UniPoly.constant(1)
Z = UniPoly.monomial(1)


def uni_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd of p and q; error when both are zero."""
    if p.is_zero() and q.is_zero():
        raise ZeroDivisionError("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    _, a = p.to_int_coeffs()
    _, b = q.to_int_coeffs()
    g = kernel.gcd(a, b)
    return UniPoly(g).monic()


def uni_gcd_list(ps: Sequence[UniPoly]) -> UniPoly:
    """Monic gcd of a nonempty family, ignoring zeros unless all are zero."""
    nonzero = [p for p in ps if not p.is_zero()]
    if not nonzero:
        raise ZeroDivisionError("gcd of an all-zero family")
    g = nonzero[0].monic()
    for p in nonzero[1:]:
        if g.is_constant():
            break
        g = uni_gcd(g, p)
    return g


def uni_lcm(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic lcm of two nonzero polynomials."""
    if p.is_zero() or q.is_zero():
        raise ZeroDivisionError("lcm with zero polynomial")
    return ((p * q) // uni_gcd(p, q)).monic()


def exact_div(p: UniPoly, q: UniPoly) -> UniPoly:
    """Quotient p/q when q divides p exactly; raise otherwise."""
    quot, rem = divmod(p, q)
    if not rem.is_zero():
        raise ValueError("exact_div with nonzero remainder")
    return quot


def is_squarefree(p: UniPoly) -> bool:
    """True iff p is nonconstant with no repeated factor."""
    if p.degree < 1:
        return False
    return uni_gcd(p, p.derivative()).is_constant()


def squarefree_parts(p: UniPoly) -> "list[UniPoly]":
    """Monic squarefree layers whose product is p up to a constant.

    Peels the radical repeatedly: each layer is squarefree and contains every
    irreducible factor still present, so multiplicities are preserved across
    the whole list (a factor of multiplicity e appears in e layers).
    """
    if p.is_zero():
        raise ZeroDivisionError("squarefree parts of the zero polynomial")
    p = p.monic()
    parts = []
    while p.degree > 0:
        reduced = uni_gcd(p, p.derivative())
        parts.append(exact_div(p, reduced))
        p = reduced
    return parts


def format_unipoly(p: UniPoly, var: str = "z") -> str:
    """Render in the CLI grammar: '+', '-', '*', '^', rationals as p/q."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            v = var if i == 1 else f"{var}^{i}"
            body = v if mag == 1 else f"{mag}*{v}"
        parts.append(sign + body)
    return "".join(parts)
