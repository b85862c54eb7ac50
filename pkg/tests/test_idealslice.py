"""Slice bases of the ideal (F1, F2) in one graded piece: counts and sums."""

import dataclasses
import random
from fractions import Fraction

import pytest

from torigcd.errors import HypothesisError
from torigcd.idealslice import (
    asymptotic_check,
    binom,
    build_basis_slice,
    coefficient_matrix,
    monomial_count,
    monomials_of_degree,
    slice_constants,
    verify_basis,
    verify_sum_formulas,
)
from torigcd.linalg import rank
from torigcd.ordering import LEX, Weight
from torigcd.parsing import parse_multipoly
from torigcd.randgen import random_coprime_pair, random_order


def mp(text, nvars):
    return parse_multipoly(text, nvars)


def test_binom_edges():
    assert binom(4, 2) == 6
    assert binom(3, 0) == 1
    assert binom(2, 3) == 0
    assert binom(-1, 2) == 0
    assert binom(5, -1) == 0


def test_monomials_of_degree():
    ms = monomials_of_degree(3, 2)
    assert len(ms) == monomial_count(2, 2) == binom(4, 2) == 6
    assert all(sum(e) == 2 and len(e) == 3 for e in ms)
    assert len(set(ms)) == len(ms)
    # descending lex
    assert ms == sorted(ms, reverse=True)
    assert monomials_of_degree(2, 0) == [(0, 0)]


def test_slice_constants_examples():
    s = slice_constants(2, 2, 1)
    assert (s.c, s.M, s.Mprime) == (2, 5, 1)
    assert s.L == 5  # ceil(M(M-1)/2 / c) = ceil(10/2)
    s = slice_constants(1, 1, 1)
    assert s.M == 2 and s.c == 0 and s.L is None
    for n in (1, 2, 3):
        for d in (1, 2, 3):
            assert slice_constants(d, n, d).M == 2


def test_slice_constants_consistency():
    for m, n, d in ((3, 2, 1), (4, 2, 2), (5, 3, 2), (7, 1, 1)):
        s = slice_constants(m, n, d)
        assert s.M + s.Mprime == binom(m + n, n)
        assert s.c >= 0 and s.M >= 2
        if s.c:
            # smallest L with L*c >= M(M-1)/2
            assert s.L * s.c >= s.M * (s.M - 1) // 2 > (s.L - 1) * s.c


def test_build_example_quadrics():
    F1 = mp("x0^2+x1*x2", 3)
    F2 = mp("x1^2-x0*x2", 3)
    s = build_basis_slice(F1, F2, 3)
    assert len(s.B) == 6 == slice_constants(3, 2, 2).M
    assert verify_basis(s).passed
    assert verify_sum_formulas(s).passed


def test_build_linear_forms():
    s = build_basis_slice(mp("x0", 2), mp("x1", 2), 2)
    consts = slice_constants(2, 1, 1)
    assert len(s.B) == consts.M == 3
    assert verify_basis(s).passed and verify_sum_formulas(s).passed


def test_swap_gives_same_span():
    F1 = mp("x0^2+x1*x2", 3)
    F2 = mp("x1^2-x0*x2", 3)
    a = build_basis_slice(F1, F2, 4)
    b = build_basis_slice(F2, F1, 4)
    assert len(a.B) == len(b.B)
    nvars = 3
    ra = coefficient_matrix(list(a.B), nvars, 4)
    rb = coefficient_matrix(list(b.B), nvars, 4)
    assert rank(ra) == rank(rb) == rank(ra + rb)  # identical span


def test_tm_swap_bookkeeping():
    # under lex, TM(x1^2) < TM(x0^2), so the pair is reordered
    s = build_basis_slice(mp("x1^2", 2), mp("x0^2", 2), 2)
    assert s.swapped
    t = build_basis_slice(mp("x0^2", 2), mp("x1^2", 2), 2)
    assert not t.swapped


def test_corrupted_slice_fails_verification():
    s = build_basis_slice(mp("x0", 2), mp("x1", 2), 2)
    dup = s.B[:-1] + (s.B[0],)
    broken = dataclasses.replace(s, B=dup)
    assert not verify_basis(broken).passed


def test_hypothesis_gates():
    with pytest.raises(HypothesisError):
        build_basis_slice(mp("x0*x1", 2), mp("x1^2", 2), 1)  # m < d
    with pytest.raises(HypothesisError):
        build_basis_slice(mp("x0^2", 2), mp("x0*x1", 2), 2)  # shared factor
    with pytest.raises(HypothesisError):
        build_basis_slice(mp("x0+x1", 2), mp("x1^2", 2), 2)  # unequal degrees
    with pytest.raises(HypothesisError):
        build_basis_slice(mp("x0+1", 2), mp("x1", 2), 1)  # not homogeneous
    with pytest.raises(HypothesisError):
        build_basis_slice(mp("0", 2), mp("x1", 2), 1)
    with pytest.raises(ValueError):
        # order arity mismatch is a usage error, not a hypothesis failure
        build_basis_slice(mp("x0", 2), mp("x1", 2), 1, order=Weight((1, 2, 3)))


def test_univariate_pair_rejected():
    z0 = parse_multipoly("x0", 1)
    with pytest.raises(HypothesisError):
        build_basis_slice(z0, z0, 1)


def test_random_slices_verify():
    rng = random.Random(42)
    for _ in range(20):
        n = rng.randint(1, 3)
        d = rng.randint(1, 2)
        m = rng.randint(d, d + 3)
        F1, F2 = random_coprime_pair(rng, n + 1, d)
        order = random_order(rng, n + 1)
        s = build_basis_slice(F1, F2, m, order=order)
        assert verify_basis(s).passed
        assert verify_sum_formulas(s).passed
        assert len(s.B1) == len(s.B2) == monomial_count(m - d, n)
        assert len(s.B1prime) == monomial_count(m - 2 * d, n)


def test_weight_order_changes_nothing_about_counts():
    F1 = mp("x0^2+x1*x2", 3)
    F2 = mp("x1^2-x0*x2", 3)
    for order in (LEX, Weight((3, 2, 1)), Weight((1, 1, 5))):
        s = build_basis_slice(F1, F2, 4, order=order)
        assert len(s.B) == slice_constants(4, 2, 2).M
        assert verify_basis(s).passed


def test_asymptotic_check_degree_one_bounded():
    rep = asymptotic_check(2, 1, 30)
    assert rep.passed
    assert rep.anchor_m == 10
    assert all(s.bounded_by_anchor for s in rep.summaries)


def test_asymptotic_check_degree_two_unbounded():
    rep = asymptotic_check(2, 2, 30)
    assert not rep.passed
    names = {s.name: s for s in rep.summaries}
    assert not names["res_c"].bounded_by_anchor
    assert names["res_c"].argmax_m == 30  # still climbing at the cutoff


def test_asymptotic_anchor_clamped_to_range():
    rep = asymptotic_check(1, 2, 8)  # m runs 4..8, anchor pulled back to 8
    assert rep.anchor_m == 8
    with pytest.raises(ValueError):
        asymptotic_check(1, 2, 6)  # below the 4d floor
