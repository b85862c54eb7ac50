"""Dense integer polynomial kernel, pure-Python backend.

A polynomial is a list of ints, index = exponent, with no trailing zeros;
the zero polynomial is the empty list.  These routines carry the hot loops
of the package: high-degree univariate gcd sweeps (primitive pseudo-remainder
sequences, contents stripped at every step) and fraction-free rank
elimination.  torigcd.kernel._intpoly is a compiled twin with the same
signatures.
"""

from __future__ import annotations

import math
from typing import List

IntPoly = List[int]


def normalize(a: IntPoly) -> IntPoly:
    """Strip trailing zero coefficients in place and return the list."""
    while a and a[-1] == 0:
        a.pop()
    return a


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """Schoolbook product of two normalized polynomials."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def content(a: IntPoly) -> int:
    """Nonnegative gcd of all coefficients; 0 for the zero polynomial."""
    g = 0
    for c in a:
        if c:
            g = math.gcd(g, c)
            if g == 1:
                break
    return g


def primitive_part(a: IntPoly) -> IntPoly:
    """a divided by its content, sign-normalized to a positive leading coefficient."""
    if not a:
        return []
    c = content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return list(a)
    return [x // c for x in a]


def pseudo_rem(f: IntPoly, g: IntPoly) -> IntPoly:
    """Pseudo-remainder prem(f, g) = lc(g)^(deg f - deg g + 1) * f mod g."""
    if not g:
        raise ZeroDivisionError("pseudo_rem by zero polynomial")
    r = list(f)
    dg = len(g) - 1
    lg = g[-1]
    e = len(f) - len(g) + 1
    while len(r) > dg:
        s = r[-1]
        for i in range(len(r)):
            r[i] *= lg
        shift = len(r) - 1 - dg
        for i in range(dg + 1):
            r[shift + i] -= s * g[i]
        r.pop()
        normalize(r)
        e -= 1
    if e > 0:
        m = lg**e
        r = [c * m for c in r]
    return r


def gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd (positive leading coefficient) via the primitive PRS."""
    a = primitive_part(f)
    b = primitive_part(g)
    if not a and not b:
        raise ZeroDivisionError("gcd of two zero polynomials")
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = primitive_part(pseudo_rem(a, b))
        a, b = b, r
    return a


def bareiss_rank(rows: List[List[int]]) -> int:
    """Exact rank by fraction-free elimination, pivoting on the first nonzero entry per column."""
    m = [list(row) for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    prev = 1
    pr = 0
    for pc in range(nc):
        piv = -1
        for r in range(pr, nr):
            if m[r][pc] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != pr:
            m[pr], m[piv] = m[piv], m[pr]
        p = m[pr][pc]
        for r in range(pr + 1, nr):
            row = m[r]
            head = row[pc]
            for c in range(pc + 1, nc):
                row[c] = (p * row[c] - head * m[pr][c]) // prev
            row[pc] = 0
        prev = p
        rank += 1
        pr += 1
        if pr == nr:
            break
    return rank
