"""Graded slices of two-generator ideals: basis construction and verification.

For coprime homogeneous F1, F2 of equal degree d, the degree-m slice of the
ideal they generate has the explicit spanning family
B = (B1 \\ B1') u B2 with B1 = {F1 x^i : |i| = m-d}, B2 = {F2 x^i}, and
B1' = {F1 TM(F2) x^i : |i| = m-2d}, where TM is the trailing monomial of F2
in a fixed monomial order.  Its size is the closed form
M = 2 C(m+n-d, n) - C(m+n-2d, n); verification reduces both the family and
the full generating set to exact ranks.  All binomials with negative upper
index evaluate to 0, which makes the m < 2d edge (empty B1') uniform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from . import linalg
from .errors import HypothesisError
from .multipoly import MultiPoly, coprime_multivariate, format_multipoly
from .ordering import LEX, MonomialOrder, trailing_monomial

Exponent = Tuple[int, ...]


def binom(a: int, b: int) -> int:
    """C(a, b) with C(a, b) = 0 whenever a < 0 or b < 0 or b > a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def monomial_count(delta: int, n: int) -> int:
    """Number of degree-delta monomials in n+1 variables; 0 for delta < 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return binom(n + delta, n)


def monomials_of_degree(nvars: int, delta: int) -> "list[Exponent]":
    """All degree-delta exponent vectors, in descending lexicographic order."""
    if delta < 0:
        return []
    if nvars == 1:
        return [(delta,)]
    out = []
    for first in range(delta, -1, -1):
        for rest in monomials_of_degree(nvars - 1, delta - first):
            out.append((first, *rest))
    return out


@dataclass(frozen=True)
class SliceConstants:
    """The combinatorial constants attached to a slice shape (m, n, d).

    c = 2 C(m+n-d, n+1) - C(m+n-2d, n+1)
    M = 2 C(m+n-d, n)   - C(m+n-2d, n)
    Mprime = C(m+n, n) - M
    L = ceil(M(M-1) / (2c)), defined only when c > 0 (c vanishes at m = d).
    """

    m: int
    n: int
    d: int
    c: int
    M: int
    Mprime: int
    L: "int | None"


def slice_constants(m: int, n: int, d: int) -> SliceConstants:
    """Exact slice constants; requires m >= d >= 1 and n >= 1."""
    if d < 1 or n < 1:
        raise ValueError("need d >= 1 and n >= 1")
    if m < d:
        raise ValueError("need m >= d")
    c = 2 * binom(m + n - d, n + 1) - binom(m + n - 2 * d, n + 1)
    M = 2 * binom(m + n - d, n) - binom(m + n - 2 * d, n)
    Mprime = binom(m + n, n) - M
    if c > 0:
        L = (M * (M - 1) // 2 + c - 1) // c
    else:
        L = None
    return SliceConstants(m=m, n=n, d=d, c=c, M=M, Mprime=Mprime, L=L)


@dataclass(frozen=True)
class BasisSlice:
    """The constructed slice family, with the multiplier monomials retained."""

    m: int
    n: int
    d: int
    order: MonomialOrder
    F1: MultiPoly
    F2: MultiPoly
    swapped: bool
    tm_tie: bool
    tm2: Exponent
    B1: Tuple[MultiPoly, ...]
    B2: Tuple[MultiPoly, ...]
    B1prime: Tuple[MultiPoly, ...]
    B: Tuple[MultiPoly, ...]
    B1_exps: Tuple[Exponent, ...]
    B2_exps: Tuple[Exponent, ...]
    B1prime_exps: Tuple[Exponent, ...]


def build_basis_slice(
    F1: MultiPoly, F2: MultiPoly, m: int, order: MonomialOrder = LEX
) -> BasisSlice:
    """Construct B = (B1 \\ B1') u B2 for the degree-m slice of (F1, F2).

    The generators are indexed so that TM(F2) <= TM(F1) under the order;
    violating inputs are swapped internally and the swap recorded.  Exact
    ties keep the caller's second generator as F2.
    """
    F1._check_arity(F2)
    nvars = F1.nvars
    if nvars < 2:
        raise HypothesisError("need at least two variables for a graded slice")
    n = nvars - 1
    d = F1.total_degree()
    if F1.is_zero() or F2.is_zero():
        raise HypothesisError("slice generators must be nonzero")
    if not (F1.is_homogeneous() and F2.is_homogeneous()):
        raise HypothesisError(
            "slice generators must be homogeneous",
            {"F1": format_multipoly(F1), "F2": format_multipoly(F2)},
        )
    if F2.total_degree() != d or d < 1:
        raise HypothesisError(
            "slice generators must share one positive degree",
            {"deg_F1": d, "deg_F2": F2.total_degree()},
        )
    if m < d:
        raise HypothesisError("need m >= d", {"m": m, "d": d})
    if order.arity is not None and order.arity != nvars:
        raise ValueError("order arity does not match the variable count")
    if not coprime_multivariate(F1, F2):
        raise HypothesisError(
            "slice generators must be coprime",
            {"F1": format_multipoly(F1), "F2": format_multipoly(F2)},
        )
    t1 = trailing_monomial(F1, order)
    t2 = trailing_monomial(F2, order)
    swapped = order.compare(t2, t1) > 0
    if swapped:
        F1, F2 = F2, F1
        t1, t2 = t2, t1
    tie = t1 == t2
    b1_exps = tuple(monomials_of_degree(nvars, m - d))
    b1p_exps = tuple(monomials_of_degree(nvars, m - 2 * d))
    B1 = tuple(F1.mul_monomial(e) for e in b1_exps)
    B2 = tuple(F2.mul_monomial(e) for e in b1_exps)
    B1prime = tuple(
        F1.mul_monomial(tuple(a + b for a, b in zip(t2, e))) for e in b1p_exps
    )
    dropped = set(B1prime)
    B = tuple(p for p in B1 if p not in dropped) + B2
    return BasisSlice(
        m=m,
        n=n,
        d=d,
        order=order,
        F1=F1,
        F2=F2,
        swapped=swapped,
        tm_tie=tie,
        tm2=t2,
        B1=B1,
        B2=B2,
        B1prime=B1prime,
        B=B,
        B1_exps=b1_exps,
        B2_exps=b1_exps,
        B1prime_exps=b1p_exps,
    )


def coefficient_matrix(
    polys: Sequence[MultiPoly], nvars: int, degree: int
) -> "list[list[Fraction]]":
    """Rows = polynomials, columns = degree-m monomials in descending lex order."""
    columns = {e: i for i, e in enumerate(monomials_of_degree(nvars, degree))}
    rows = []
    for p in polys:
        row = [Fraction(0)] * len(columns)
        for e, c in p.terms.items():
            row[columns[e]] = c
        rows.append(row)
    return rows


@dataclass(frozen=True)
class BasisReport:
    """Rank verification of a constructed slice family."""

    m: int
    n: int
    d: int
    M: int
    size: int
    rank_B: int
    span_dim: int
    passed: bool


def verify_basis(s: BasisSlice) -> BasisReport:
    """Check |B| = rank(B) = span-dim(B1 u B2) = M by exact row reduction."""
    nvars = s.n + 1
    M = slice_constants(s.m, s.n, s.d).M
    rank_B = linalg.rank(coefficient_matrix(s.B, nvars, s.m))
    span_dim = linalg.rank(coefficient_matrix(s.B1 + s.B2, nvars, s.m))
    size = len(s.B)
    return BasisReport(
        m=s.m,
        n=s.n,
        d=s.d,
        M=M,
        size=size,
        rank_B=rank_B,
        span_dim=span_dim,
        passed=(size == M and rank_B == M and span_dim == M),
    )


@dataclass(frozen=True)
class SumFormulaRow:
    family: str
    var_index: int
    total: int
    expected: int


@dataclass(frozen=True)
class SumFormulaReport:
    rows: Tuple[SumFormulaRow, ...]
    passed: bool


def verify_sum_formulas(s: BasisSlice) -> SumFormulaReport:
    """Check the two order-sum identities of the slice family, per variable.

    For j = 1, 2:  sum over B_j of ord_{x_i}(s / F_j) = C(m+n-d, n+1), and
    over B1': sum = C(m+n-2d, n+1) + C(m+n-2d, n) * ord_{x_i} TM(F2),
    where each s / F_j is the multiplier monomial recorded at construction.
    """
    m, n, d = s.m, s.n, s.d
    rows: List[SumFormulaRow] = []
    ok = True
    for i in range(n + 1):
        expected = binom(m + n - d, n + 1)
        for family, exps in (("B1", s.B1_exps), ("B2", s.B2_exps)):
            total = sum(e[i] for e in exps)
            rows.append(SumFormulaRow(family, i, total, expected))
            ok = ok and total == expected
        expected_p = binom(m + n - 2 * d, n + 1) + binom(m + n - 2 * d, n) * s.tm2[i]
        total_p = sum(s.tm2[i] + e[i] for e in s.B1prime_exps)
        rows.append(SumFormulaRow("B1prime", i, total_p, expected_p))
        ok = ok and total_p == expected_p
    return SumFormulaReport(rows=tuple(rows), passed=ok)


@dataclass(frozen=True)
class ResidualSummary:
    """Boundedness evidence for one scaled residual sequence."""

    name: str
    anchor_m: int
    anchor_value: Fraction
    max_value: Fraction
    argmax_m: int
    bounded_by_anchor: bool


@dataclass(frozen=True)
class AsymptoticRow:
    m: int
    c: int
    M: int
    Mprime: int
    res_c: Fraction
    res_M: Fraction
    res_Mprime: Fraction


@dataclass(frozen=True)
class AsymptoticReport:
    n: int
    d: int
    anchor_m: int
    rows: Tuple[AsymptoticRow, ...]
    summaries: Tuple[ResidualSummary, ...]
    passed: bool


def asymptotic_check(n: int, d: int, m_max: int, anchor: int = 10) -> AsymptoticReport:
    """Scaled residuals of c, M, Mprime against their leading-term expansions.

    For m = 2d..m_max the sequences |c - m^(n+1)/(n+1)! - m^n/(2(n-1)!)| / m^(n-1),
    |M - m^n/n!| / m^(n-1), and Mprime / m^(n-2) are computed exactly.  Each is
    summarized by its maximum and checked against its value at the anchor
    (bounded for m >= anchor by the anchor value).  For n = 1 the third
    sequence is Mprime itself, which is eventually constant.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if m_max < 4 * d:
        raise ValueError("need m_max >= 4d for meaningful evidence")
    lead_den = math.factorial(n + 1)
    second_den = 2 * math.factorial(n - 1)
    rows: List[AsymptoticRow] = []
    for m in range(2 * d, m_max + 1):
        sc = slice_constants(m, n, d)
        res_c = abs(
            Fraction(sc.c)
            - Fraction(m ** (n + 1), lead_den)
            - Fraction(m**n, second_den)
        ) / m ** (n - 1)
        res_M = abs(Fraction(sc.M) - Fraction(m**n, math.factorial(n))) / m ** (n - 1)
        if n >= 2:
            res_Mp = Fraction(sc.Mprime, m ** (n - 2))
        else:
            res_Mp = Fraction(sc.Mprime)
        rows.append(AsymptoticRow(m, sc.c, sc.M, sc.Mprime, res_c, res_M, res_Mp))
    anchor_m = max(2 * d, min(anchor, m_max))
    summaries = []
    passed = True
    for name, values in (
        ("res_c", [(r.m, r.res_c) for r in rows]),
        ("res_M", [(r.m, r.res_M) for r in rows]),
        ("res_Mprime", [(r.m, r.res_Mprime) for r in rows]),
    ):
        anchor_value = next(v for m, v in values if m == anchor_m)
        max_value = max(v for _, v in values)
        argmax_m = next(m for m, v in values if v == max_value)
        bounded = all(v <= anchor_value for m, v in values if m >= anchor_m)
        summaries.append(
            ResidualSummary(name, anchor_m, anchor_value, max_value, argmax_m, bounded)
        )
        passed = passed and bounded
    return AsymptoticReport(
        n=n,
        d=d,
        anchor_m=anchor_m,
        rows=tuple(rows),
        summaries=tuple(summaries),
        passed=passed,
    )
