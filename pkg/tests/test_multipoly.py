"""Sparse multivariate polynomials: ring laws, gcd, substitution devices."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torigcd.multipoly import (
    MultiPoly,
    coprime_multivariate,
    dehomogenize,
    equalize_degrees,
    evaluate_poly,
    format_multipoly,
    homogenize,
    mv_exact_div,
    mv_gcd,
    power_vars,
    substitute,
)
from torigcd.parsing import parse_multipoly, parse_ratfunc, parse_unipoly

NVARS = 3


def mp(text, nvars=NVARS, first_index=0):
    return parse_multipoly(text, nvars, first_index=first_index)


exponents = st.tuples(*(st.integers(0, 3) for _ in range(NVARS)))
terms = st.dictionaries(
    exponents, st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4)), max_size=4
)
mpolys = terms.map(lambda t: MultiPoly(NVARS, t))


def test_add_examples():
    assert mp("x1") + mp("0-x1") == mp("0")
    assert mp("x0^2+x1") + mp("x1") == mp("x0^2+2*x1")
    assert mp("3/2*x0*x1") + mp("1/2*x0*x1") == mp("2*x0*x1")


def test_mul_examples():
    assert mp("x0") * mp("x1") == mp("x0*x1")
    assert mp("x0+x1") ** 2 == mp("x0^2+2*x0*x1+x1^2")
    assert mp("0") * mp("x0^2-x1") == mp("0")


@given(mpolys, mpolys, mpolys)
@settings(max_examples=120, deadline=None)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_arity_mismatch_rejected():
    with pytest.raises(ValueError):
        mp("x0", 2) + mp("x0", 3)


def test_homogenize_examples():
    F = parse_multipoly("x1-1", 1, first_index=1)
    assert homogenize(F, 1) == parse_multipoly("x1-x0", 2)
    G = parse_multipoly("x1*x2+x1+1", 2, first_index=1)
    assert homogenize(G, 2) == parse_multipoly("x1*x2+x0*x1+x0^2", 3)
    assert homogenize(parse_multipoly("1", 2, first_index=1), 3) == parse_multipoly(
        "x0^3", 3
    )
    with pytest.raises(ValueError):
        homogenize(G, 1)


def test_homogenize_dehomogenize_round_trip():
    rng = random.Random(7)
    for _ in range(40):
        terms = {
            (rng.randint(0, 2), rng.randint(0, 2)): Fraction(rng.randint(-3, 3))
            for _ in range(rng.randint(1, 4))
        }
        F = MultiPoly(2, terms)
        if F.is_zero():
            continue
        d = F.total_degree() + rng.randint(0, 2)
        H = homogenize(F, d)
        assert H.is_homogeneous() and H.total_degree() == d
        assert dehomogenize(H) == F


def test_equalize_degrees():
    F = parse_multipoly("x1-1", 2, first_index=1)
    G = parse_multipoly("x2^2-2", 2, first_index=1)
    Fe, Gh = equalize_degrees(F, G)
    assert Fe == F**2 and Gh == G
    assert Fe.total_degree() == Gh.total_degree() == 2
    H = parse_multipoly("x1", 2, first_index=1)
    assert equalize_degrees(H, H) == (H, H)
    with pytest.raises(ValueError):
        equalize_degrees(F, parse_multipoly("3", 2, first_index=1))


def test_substitute_examples():
    F = parse_multipoly("x1-1", 1, first_index=1)
    assert substitute(F, [parse_ratfunc("z")], 3) == parse_ratfunc("z^3-1")
    G = parse_multipoly("x1*x2", 2, first_index=1)
    assert substitute(G, [parse_ratfunc("z"), parse_ratfunc("(1)/(z)")], 2) == parse_ratfunc("1")
    H = parse_multipoly("x1+x2", 2, first_index=1)
    assert substitute(H, [parse_ratfunc("z"), parse_ratfunc("z+1")], 1) == parse_ratfunc("2*z+1")


def test_substitute_two_routes_agree():
    rng = random.Random(11)
    gs = [parse_ratfunc("(z^2-1)/(z)"), parse_ratfunc("z+2"), parse_ratfunc("(1)/(z-3)")]
    for _ in range(25):
        terms = {
            tuple(rng.randint(0, 2) for _ in range(3)): Fraction(rng.randint(-3, 3))
            for _ in range(rng.randint(1, 4))
        }
        F = MultiPoly(3, terms)
        k = rng.randint(1, 3)
        assert substitute(F, gs, k) == substitute(power_vars(F, k), gs, 1)


def test_evaluate_poly_matches_substitute():
    F = mp("x0^2-x1*x2+1/2*x2")
    gs = [parse_unipoly("z"), parse_unipoly("z^2-1"), parse_unipoly("2*z+3")]
    val = evaluate_poly(F, gs)
    via_rf = substitute(F, [parse_ratfunc(str(g)) for g in gs], 1)
    assert via_rf.is_polynomial()
    assert via_rf.num == val


def test_coprime_examples():
    A = parse_multipoly("x1-1", 2, first_index=1)
    B = parse_multipoly("x2-1", 2, first_index=1)
    assert coprime_multivariate(A, B)
    C = parse_multipoly("x1*x2-x1", 2, first_index=1)
    assert not coprime_multivariate(C, B)
    D = parse_multipoly("x1^2+x2^2", 2, first_index=1)
    E = parse_multipoly("x1^2-x2^2", 2, first_index=1)
    assert coprime_multivariate(D, E)
    with pytest.raises(ZeroDivisionError):
        coprime_multivariate(A, parse_multipoly("0", 2, first_index=1))


def test_mv_gcd_pulls_out_common_factor():
    rng = random.Random(13)
    trials = 0
    while trials < 30:
        def rand_poly():
            terms = {
                tuple(rng.randint(0, 2) for _ in range(2)): Fraction(rng.randint(-3, 3))
                for _ in range(rng.randint(1, 3))
            }
            return MultiPoly(2, terms)

        H, A, B = rand_poly(), rand_poly(), rand_poly()
        if H.is_zero() or A.is_zero() or B.is_zero():
            continue
        trials += 1
        g = mv_gcd(A * H, B * H)
        expected = mv_gcd(A, B) * H
        # both normalized: lex-leading coefficient one
        quot = mv_exact_div(g, expected)
        assert quot.is_constant()


def test_mv_exact_div_detects_nondivisor():
    with pytest.raises(ValueError):
        mv_exact_div(mp("x0^2+x1"), mp("x0+1"))
    assert mv_exact_div(mp("x0^2-x1^2"), mp("x0-x1")) == mp("x0+x1")


def test_format_round_trip():
    rng = random.Random(17)
    for _ in range(40):
        terms = {
            tuple(rng.randint(0, 3) for _ in range(NVARS)): Fraction(
                rng.randint(-5, 5), rng.randint(1, 3)
            )
            for _ in range(rng.randint(1, 4))
        }
        F = MultiPoly(NVARS, terms)
        assert mp(format_multipoly(F)) == F
