"""Degree-level value distribution for rational functions.

For a reduced rational function the growth characteristic is a slope: the
coefficient of log r.  Everything here is that exactly computable shadow:
characteristic / counting / proximity slopes, the gcd-counting slope, a
multiplicative-independence certificate built from divisor exponent
matrices over a gcd-free basis, and the power sweep
k -> deg gcd(F(g1^k, ..), G(g1^k, ..)) whose normalized ratio collapses
for multiplicatively independent g's.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .errors import HypothesisError
from .multipoly import (
    MultiPoly,
    coprime_multivariate,
    format_multipoly,
    substitute,
)
from .ratfunc import (
    INFINITY,
    RationalFunction,
    coprime_basis,
    divisor_exponents,
    format_ratfunc,
    valuation,
)
from .unipoly import ONE, UniPoly, exact_div, format_unipoly, uni_gcd, uni_gcd_list, uni_lcm


def char_slope(f: RationalFunction) -> int:
    """Slope of the Nevanlinna characteristic: max(deg num, deg den)."""
    if f.is_zero():
        return 0
    return max(f.num.degree, f.den.degree)


def _reduced_rep(fs: Sequence[RationalFunction], include_one: bool) -> "list[UniPoly]":
    """Clear denominators by their lcm, then divide out the overall gcd."""
    den = ONE
    for f in fs:
        den = uni_lcm(den, f.den)
    entries = [den] if include_one else []
    for f in fs:
        entries.append(f.num * exact_div(den, f.den))
    nonzero = [e for e in entries if not e.is_zero()]
    if not nonzero:
        raise ZeroDivisionError("no nonzero coordinate in the representation")
    g = uni_gcd_list(nonzero)
    return [exact_div(e, g) if not e.is_zero() else e for e in entries]


def map_char_slope(gs: Sequence[RationalFunction]) -> int:
    """Characteristic slope of the map [1 : g1 : ... : gn]."""
    rep = _reduced_rep(gs, include_one=True)
    return max(e.degree for e in rep if not e.is_zero())


def ngcd_slope(f: RationalFunction, g: RationalFunction) -> int:
    """Slope of the gcd counting function: common zeros with min multiplicity.

    Reducedness makes every common zero of f and g a common root of the two
    numerators with matching min multiplicity, so this is one exact gcd.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroDivisionError("gcd counting of the zero function")
    return uni_gcd(f.num, g.num).degree


def mgcd_slope(f: RationalFunction, g: RationalFunction) -> int:
    """Slope of the gcd proximity function: only infinity contributes."""
    if f.is_zero() or g.is_zero():
        raise ZeroDivisionError("gcd proximity of the zero function")
    return max(0, min(valuation(f, INFINITY), valuation(g, INFINITY)))


def tgcd_slope(f: RationalFunction, g: RationalFunction) -> int:
    """Slope of T_[1:f:g] - T_[f:g], the gcd characteristic."""
    if f.is_zero() and g.is_zero():
        raise ZeroDivisionError("gcd characteristic of the zero pair")
    with_one = max(e.degree for e in _reduced_rep((f, g), True) if not e.is_zero())
    without = max(e.degree for e in _reduced_rep((f, g), False) if not e.is_zero())
    return with_one - without


@dataclass(frozen=True)
class SlopeReport:
    """Slope-level gcd quantities for one pair, labels included for reports."""

    label: str
    T_f: int
    T_g: int
    N_gcd: int
    m_gcd: int
    T_gcd: int


def gcd_slope_report(
    f: RationalFunction, g: RationalFunction, label: str = ""
) -> SlopeReport:
    return SlopeReport(
        label=label,
        T_f=char_slope(f),
        T_g=char_slope(g),
        N_gcd=ngcd_slope(f, g),
        m_gcd=mgcd_slope(f, g),
        T_gcd=tgcd_slope(f, g),
    )


def fmt_decomposition(f: RationalFunction, a: Fraction) -> Tuple[int, int]:
    """Counting and proximity slopes of f at the value a; they sum to T."""
    if f.is_constant():
        raise ValueError("decomposition needs a nonconstant function")
    N = (f.num - f.den * Fraction(a)).degree
    T = char_slope(f)
    return N, T - N


@dataclass(frozen=True)
class DivisorVector:
    """Exponent vector of one function over a shared gcd-free basis + Infinity."""

    basis: Tuple[UniPoly, ...]
    exponents: Tuple[int, ...]

    def degree_weighted_sum(self) -> int:
        finite = sum(e * b.degree for e, b in zip(self.exponents, self.basis))
        return finite + self.exponents[-1]


def divisor_vector(f: RationalFunction, basis: Sequence[UniPoly]) -> DivisorVector:
    finite, at_inf = divisor_exponents(f, basis)
    return DivisorVector(basis=tuple(basis), exponents=tuple(finite) + (at_inf,))


@dataclass(frozen=True)
class IndependenceCertificate:
    """Outcome of the multiplicative-independence test over a divisor matrix.

    Independent inputs carry the rank-n pivot profile; dependent inputs carry
    a primitive integer witness w with prod g_i^{w_i} constant, re-verified
    by substitution before the certificate is issued.
    """

    independent: bool
    n: int
    basis: Tuple[UniPoly, ...]
    matrix: Tuple[Tuple[int, ...], ...]
    pivot_columns: Tuple[int, ...]
    witness: Optional[Tuple[int, ...]]

    def to_json(self) -> dict:
        return {
            "independent": self.independent,
            "n": self.n,
            "basis": [format_unipoly(b) for b in self.basis] + ["inf"],
            "matrix": [list(row) for row in self.matrix],
            "pivot_columns": list(self.pivot_columns),
            "witness": list(self.witness) if self.witness is not None else None,
        }


def _witness_is_constant(
    gs: Sequence[RationalFunction], witness: Sequence[int]
) -> bool:
    prod = RationalFunction.constant(1)
    for g, e in zip(gs, witness):
        prod = prod * g**e
    return prod.is_constant()


def mult_independent(gs: Sequence[RationalFunction]) -> IndependenceCertificate:
    """Certify whether no nontrivial power product of the gs is constant.

    The divisor exponent matrix over the joint gcd-free basis (Infinity
    column included) has rank n exactly when the gs are multiplicatively
    independent; a primitive left-kernel vector otherwise exhibits the
    constant power product.
    """
    n = len(gs)
    for g in gs:
        if g.is_zero():
            raise ZeroDivisionError("independence of the zero function")
    basis = coprime_basis([p for g in gs for p in (g.num, g.den)])
    rows = []
    for g in gs:
        finite, at_inf = divisor_exponents(g, basis)
        rows.append(tuple(finite) + (at_inf,))
    frac_rows = [[Fraction(x) for x in row] for row in rows]
    rank = linalg.rank(frac_rows) if rows else 0
    if rank == n:
        _, pivots = linalg.rref(frac_rows)
        return IndependenceCertificate(
            independent=True,
            n=n,
            basis=basis,
            matrix=tuple(rows),
            pivot_columns=tuple(pivots),
            witness=None,
        )
    kernel = linalg.left_nullspace(frac_rows)
    witness = linalg.primitive_integer_vector(kernel[0])
    if not _witness_is_constant(gs, witness):
        raise AssertionError("dependence witness failed verification")
    return IndependenceCertificate(
        independent=False,
        n=n,
        basis=basis,
        matrix=tuple(rows),
        pivot_columns=(),
        witness=tuple(witness),
    )


@dataclass(frozen=True)
class SweepConfig:
    """Inputs of the power sweep: coprime F, G and the base functions."""

    F: MultiPoly
    G: MultiPoly
    gs: Tuple[RationalFunction, ...]
    k_min: int = 1
    k_max: int = 60
    k_step: int = 1
    epsilon: Fraction = Fraction(1, 10)


@dataclass(frozen=True)
class SweepRow:
    k: int
    gcd_degree: int
    scale: int
    ratio: Fraction


@dataclass(frozen=True)
class SweepResult:
    track: str
    rows: Tuple[SweepRow, ...]
    epsilon: Fraction
    first_below: Optional[int]
    stays_below: bool
    threshold_k: Optional[int]

    def to_summary(self) -> dict:
        return {
            "track": self.track,
            "epsilon": str(self.epsilon),
            "rows": len(self.rows),
            "first_below": self.first_below,
            "stays_below": self.stays_below,
            "threshold_k": self.threshold_k,
        }


def _sweep_gates(cfg: SweepConfig, track: str) -> None:
    nvars = cfg.F.nvars
    if cfg.G.nvars != nvars or len(cfg.gs) != nvars:
        raise HypothesisError(
            "need one base function per variable",
            {"nvars": nvars, "given": len(cfg.gs)},
        )
    if cfg.F.is_zero() or cfg.G.is_zero():
        raise HypothesisError("sweep polynomials must be nonzero")
    if cfg.k_min < 1 or cfg.k_step < 1 or cfg.k_max < cfg.k_min:
        raise ValueError("need 1 <= k_min <= k_max and k_step >= 1")
    if cfg.epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if not coprime_multivariate(cfg.F, cfg.G):
        raise HypothesisError(
            "sweep polynomials must be coprime",
            {"F": format_multipoly(cfg.F, 1), "G": format_multipoly(cfg.G, 1)},
        )
    cert = mult_independent(cfg.gs)
    if not cert.independent:
        raise HypothesisError(
            "base functions are multiplicatively dependent",
            {"certificate": cert.to_json()},
        )
    if track == "t":
        for g in cfg.gs:
            if not g.is_polynomial():
                raise HypothesisError(
                    "the characteristic track needs polynomial base functions",
                    {"g": format_ratfunc(g)},
                )
        if cfg.F.constant_term() == 0 and cfg.G.constant_term() == 0:
            raise HypothesisError(
                "the characteristic track needs F, G not both zero at the origin"
            )


def _run_sweep(cfg: SweepConfig, track: str) -> SweepResult:
    _sweep_gates(cfg, track)
    scale_unit = max(char_slope(g) for g in cfg.gs)
    rows: List[SweepRow] = []
    for k in range(cfg.k_min, cfg.k_max + 1, cfg.k_step):
        f = substitute(cfg.F, cfg.gs, k)
        g = substitute(cfg.G, cfg.gs, k)
        if f.is_zero() or g.is_zero():
            raise HypothesisError(
                "a composed function vanishes identically", {"k": k}
            )
        deg = ngcd_slope(f, g) if track == "n" else tgcd_slope(f, g)
        scale = k * scale_unit
        rows.append(SweepRow(k=k, gcd_degree=deg, scale=scale, ratio=Fraction(deg, scale)))
    first_below = next((r.k for r in rows if r.ratio < cfg.epsilon), None)
    stays_below = False
    threshold_k = None
    if first_below is not None:
        tail = [r for r in rows if r.k >= first_below]
        stays_below = all(r.ratio < cfg.epsilon for r in tail)
        above = [i for i, r in enumerate(rows) if r.ratio >= cfg.epsilon]
        nxt = above[-1] + 1 if above else 0
        if nxt < len(rows):
            threshold_k = rows[nxt].k
    return SweepResult(
        track=track,
        rows=tuple(rows),
        epsilon=cfg.epsilon,
        first_below=first_below,
        stays_below=stays_below,
        threshold_k=threshold_k,
    )


def gcd_sweep(cfg: SweepConfig) -> SweepResult:
    """deg gcd of the composed pair against k times the largest base slope."""
    return _run_sweep(cfg, "n")


def tgcd_sweep(cfg: SweepConfig) -> SweepResult:
    """Same sweep with the gcd characteristic slope in place of the gcd degree."""
    return _run_sweep(cfg, "t")
