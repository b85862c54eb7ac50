"""Wronskians of rational tuples and the two local inequality checks.

The Wronskian of (f_1, ..., f_M) is det(d^j f_i / dz^j).  Small
determinants (M <= 3) expand by cofactors directly in rational-function
arithmetic; larger ones clear each column i by q_i^M, run fraction-free
elimination over the polynomial ring, and divide the product back out.
Both routes are exposed so they can cross-check each other.

The local checks are exact valuation inequalities at one place:
  ordw_check:  sum_j v+(eta_j) - M(M-1)/2  <=  v+(W(eta))
  bs_check:    the basis-slice counting inequality for a coprime pair
               F, G composed with zero-free polynomial tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import HypothesisError
from .idealslice import binom, build_basis_slice, slice_constants
from .multipoly import MultiPoly, evaluate_poly, format_multipoly
from .ordering import Weight
from .ratfunc import Place, RationalFunction, format_ratfunc, valuation
from .unipoly import UniPoly, exact_div, format_unipoly, uni_gcd, uni_gcd_list


def _poly_det(m: "list[list[UniPoly]]") -> UniPoly:
    """Fraction-free determinant of a square polynomial matrix."""
    n = len(m)
    m = [row[:] for row in m]
    sign = 1
    prev = UniPoly.constant(1)
    for c in range(n - 1):
        piv = next((r for r in range(c, n) if not m[r][c].is_zero()), None)
        if piv is None:
            return UniPoly()
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        for r in range(c + 1, n):
            for j in range(c + 1, n):
                m[r][j] = exact_div(m[c][c] * m[r][j] - m[r][c] * m[c][j], prev)
            m[r][c] = UniPoly()
        prev = m[c][c]
    det = m[n - 1][n - 1]
    return det * (-1) if sign < 0 else det


def _rf_det(m: "list[list[RationalFunction]]") -> RationalFunction:
    """Cofactor expansion along the first row."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = RationalFunction.constant(0)
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in m[1:]]
        term = m[0][j] * _rf_det(minor)
        total = total - term if j % 2 else total + term
    return total


def _derivative_rows(fs: Sequence[RationalFunction]) -> "list[list[RationalFunction]]":
    rows = [list(fs)]
    for _ in range(len(fs) - 1):
        rows.append([f.derivative() for f in rows[-1]])
    return rows


def wronskian(fs: Sequence[RationalFunction]) -> RationalFunction:
    """W(f_1, ..., f_M); zero exactly when the tuple is linearly dependent."""
    M = len(fs)
    if M == 0:
        raise ValueError("need at least one function")
    rows = _derivative_rows(fs)
    if M <= 3:
        return _rf_det(rows)
    # clear column i by q_i^M: every entry d^j f_i has denominator dividing
    # q_i^(j+1) with j+1 <= M, so the scaled matrix is polynomial
    clear = [RationalFunction(f.den**M) for f in fs]
    poly_m: "list[list[UniPoly]]" = []
    for row in rows:
        prow = []
        for entry, c in zip(row, clear):
            scaled = entry * c
            if not scaled.is_polynomial():
                raise AssertionError("column clearing left a denominator")
            prow.append(scaled.num)
        poly_m.append(prow)
    det = _poly_det(poly_m)
    den = UniPoly.constant(1)
    for f in fs:
        den = den * f.den**M
    return RationalFunction(det, den)


def vanish_order(f: RationalFunction, pl: Place) -> int:
    """Valuation of f at the place; positive at zeros, negative at poles."""
    return valuation(f, pl)


def _vplus(f: RationalFunction, pl: Place) -> int:
    return max(0, valuation(f, pl))


@dataclass(frozen=True)
class LocalCheckReport:
    """One exact local inequality: pass iff lhs <= rhs at the place."""

    check: str
    place: Place
    lhs: int
    rhs: int
    passed: bool
    vacuous: bool = False
    info: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "place": str(self.place),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "passed": self.passed,
            "vacuous": self.vacuous,
            "info": self.info,
        }


def ordw_check(etas: Sequence[RationalFunction], pl: Place) -> LocalCheckReport:
    """Check sum_j v+(eta_j) - M(M-1)/2 <= v+(W) at one place.

    Linearly dependent tuples have W = 0; the inequality says nothing there
    and the report is marked vacuous (and passing).
    """
    M = len(etas)
    if M == 0:
        raise ValueError("need at least one function")
    for f in etas:
        if f.is_zero():
            raise ZeroDivisionError("local data of the zero function")
    lhs = sum(_vplus(f, pl) for f in etas) - M * (M - 1) // 2
    W = wronskian(etas)
    if W.is_zero():
        return LocalCheckReport(
            check="ordw",
            place=pl,
            lhs=lhs,
            rhs=0,
            passed=True,
            vacuous=True,
            info={"wronskian": "0", "M": M},
        )
    rhs = _vplus(W, pl)
    return LocalCheckReport(
        check="ordw",
        place=pl,
        lhs=lhs,
        rhs=rhs,
        passed=lhs <= rhs,
        info={"wronskian": format_ratfunc(W), "M": M},
    )


def bs_check(
    F: MultiPoly,
    G: MultiPoly,
    m: int,
    gs: Sequence[UniPoly],
    pl: Place,
) -> LocalCheckReport:
    """The local counting inequality over a degree-m slice at a finite place.

    With u_i = v_pl(g_i) and the slice family B built for the weight order
    induced by u, h = gcd(F(g), G(g)) and eta_j = B_j(g)/h:

        c * sum_i v+(g_i)  -  C(m+n-2d, n) * min_{i in I} u . i
            <=  sum_j v+(eta_j)

    where I indexes the monomials of F and G.  Hypothesis violations (shared
    factors, common zeros of the g's, vanishing compositions, the place at
    infinity) are rejected with certificates rather than checked around.
    """
    if pl.is_infinite():
        raise HypothesisError("the local inequality is checked at finite places")
    nvars = F.nvars
    n = nvars - 1
    if len(gs) != nvars:
        raise HypothesisError(
            "need one polynomial per variable", {"nvars": nvars, "given": len(gs)}
        )
    for g in gs:
        if g.is_zero():
            raise HypothesisError("base polynomials must be nonzero")
    if uni_gcd_list(list(gs)).degree > 0:
        raise HypothesisError(
            "base polynomials must have no common zero",
            {"common_factor": format_unipoly(uni_gcd_list(list(gs)))},
        )
    u = tuple(_vplus(RationalFunction(g), pl) for g in gs)
    order = Weight(u)
    s = build_basis_slice(F, G, m, order)
    d = s.d
    consts = slice_constants(m, n, d)
    fg = evaluate_poly(s.F1, list(gs))
    gg = evaluate_poly(s.F2, list(gs))
    if fg.is_zero() or gg.is_zero():
        raise HypothesisError(
            "a composed polynomial vanishes identically",
            {"F1(g)": format_unipoly(fg), "F2(g)": format_unipoly(gg)},
        )
    h = uni_gcd(fg, gg)
    etas = []
    for beta in s.B:
        val = evaluate_poly(beta, list(gs))
        if val.is_zero():
            raise HypothesisError(
                "a slice element vanishes under composition",
                {"element": format_multipoly(beta)},
            )
        etas.append(RationalFunction(val, h))
    exps = set(s.F1.terms) | set(s.F2.terms)
    min_ui = min(sum(a * b for a, b in zip(u, e)) for e in exps)
    lhs = consts.c * sum(u) - binom(m + n - 2 * d, n) * min_ui
    rhs = sum(_vplus(eta, pl) for eta in etas)
    return LocalCheckReport(
        check="bs",
        place=pl,
        lhs=lhs,
        rhs=rhs,
        passed=lhs <= rhs,
        info={
            "m": m,
            "n": n,
            "d": d,
            "c": consts.c,
            "M": consts.M,
            "u": list(u),
            "swapped": s.swapped,
            "tm_tie": s.tm_tie,
            "h": format_unipoly(h),
            "min_weighted_exponent": min_ui,
        },
    )
