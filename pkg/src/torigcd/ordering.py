"""Monomial orderings: lexicographic, and weight orders with lex tie-break.

compare() returns -1/0/1.  Lex declares a >= b when the left-most nonzero
entry of a - b is positive, which coincides with tuple comparison; a weight
order compares u.a against u.b first and falls back to lex on ties.  Both are
total orders compatible with monomial multiplication and bounded below by the
constant monomial.
"""

from __future__ import annotations

from typing import Sequence, Tuple

from .errors import ParseError
from .multipoly import MultiPoly

Exponent = Tuple[int, ...]


class MonomialOrder:
    """Base class; instances are stateless and shareable."""

    arity: "int | None" = None

    def compare(self, a: Exponent, b: Exponent) -> int:
        raise NotImplementedError


class Lex(MonomialOrder):
    def compare(self, a: Exponent, b: Exponent) -> int:
        if len(a) != len(b):
            raise ValueError("exponent length mismatch")
        return (a > b) - (a < b)

    def __repr__(self) -> str:
        return "Lex()"

    def __str__(self) -> str:
        return "lex"

    def __eq__(self, other) -> bool:
        return isinstance(other, Lex)

    def __hash__(self) -> int:
        return hash("Lex")


class Weight(MonomialOrder):
    """Order by the dot product with u, ties broken by full lex."""

    def __init__(self, u: Sequence[int]):
        u = tuple(int(w) for w in u)
        if not u:
            raise ValueError("weight vector must be nonempty")
        if any(w < 0 for w in u):
            raise ValueError("weight vector entries must be nonnegative")
        self.u = u
        self.arity = len(u)

    def compare(self, a: Exponent, b: Exponent) -> int:
        if len(a) != len(b) or len(a) != len(self.u):
            raise ValueError("exponent length mismatch")
        wa = sum(w * x for w, x in zip(self.u, a))
        wb = sum(w * x for w, x in zip(self.u, b))
        if wa != wb:
            return 1 if wa > wb else -1
        return (a > b) - (a < b)

    def __repr__(self) -> str:
        return f"Weight({list(self.u)!r})"

    def __str__(self) -> str:
        return "weight:" + ",".join(str(w) for w in self.u)

    def __eq__(self, other) -> bool:
        return isinstance(other, Weight) and self.u == other.u

    def __hash__(self) -> int:
        return hash(("Weight", self.u))


LEX = Lex()


def compare(a: Exponent, b: Exponent, order: MonomialOrder) -> int:
    """-1, 0, or 1 as a is below, equal to, or above b."""
    return order.compare(tuple(a), tuple(b))


def trailing_monomial(F: MultiPoly, order: MonomialOrder) -> Exponent:
    """Smallest exponent vector of a nonzero polynomial under the order."""
    if F.is_zero():
        raise ValueError("trailing monomial of the zero polynomial")
    best = None
    for exp in F.terms:
        if best is None or order.compare(exp, best) < 0:
            best = exp
    return best


def parse_order(text: str, nvars: "int | None" = None) -> MonomialOrder:
    """Parse 'lex' or 'weight:3,2,1'; checks arity when nvars is given."""
    text = text.strip()
    if text == "lex":
        return LEX
    if text.startswith("weight:"):
        try:
            u = [int(part) for part in text[len("weight:") :].split(",")]
        except ValueError as exc:
            raise ParseError(f"bad weight vector in {text!r}") from exc
        try:
            order = Weight(u)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        if nvars is not None and order.arity != nvars:
            raise ParseError(
                f"weight vector length {order.arity} != variable count {nvars}"
            )
        return order
    raise ParseError(f"unknown order {text!r} (use lex or weight:a,b,...)")
