"""Dense integer polynomial kernel, compiled backend.

Same contracts as torigcd.kernel.intpoly_py: lists of ints without trailing
zeros, zero polynomial = [].  Coefficients stay arbitrary-precision Python
ints; the compilation removes the interpreter overhead of the inner loops.
"""

import math


def normalize(list a):
    """Strip trailing zero coefficients in place and return the list."""
    while a and a[-1] == 0:
        a.pop()
    return a


def mul(list a, list b):
    """Schoolbook product of two normalized polynomials."""
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    for i in range(na):
        x = a[i]
        if x != 0:
            for j in range(nb):
                out[i + j] = out[i + j] + x * b[j]
    return out


def content(list a):
    """Nonnegative gcd of all coefficients; 0 for the zero polynomial."""
    cdef Py_ssize_t i, n = len(a)
    g = 0
    for i in range(n):
        c = a[i]
        if c != 0:
            g = math.gcd(g, c)
            if g == 1:
                break
    return g


def primitive_part(list a):
    """a divided by its content, sign-normalized to a positive leading coefficient."""
    cdef Py_ssize_t i, n = len(a)
    if n == 0:
        return []
    c = content(a)
    if a[n - 1] < 0:
        c = -c
    if c == 1:
        return list(a)
    return [a[i] // c for i in range(n)]


def pseudo_rem(list f, list g):
    """Pseudo-remainder prem(f, g) = lc(g)^(deg f - deg g + 1) * f mod g."""
    cdef Py_ssize_t dg, shift, i, nr
    cdef list r
    if not g:
        raise ZeroDivisionError("pseudo_rem by zero polynomial")
    r = list(f)
    dg = len(g) - 1
    lg = g[dg]
    e = len(f) - len(g) + 1
    while len(r) > dg:
        nr = len(r)
        s = r[nr - 1]
        for i in range(nr):
            r[i] = r[i] * lg
        shift = nr - 1 - dg
        for i in range(dg + 1):
            r[shift + i] = r[shift + i] - s * g[i]
        r.pop()
        normalize(r)
        e -= 1
    if e > 0:
        m = lg**e
        r = [c * m for c in r]
    return r


def gcd(list f, list g):
    """Primitive gcd (positive leading coefficient) via the primitive PRS."""
    cdef list a = primitive_part(f)
    cdef list b = primitive_part(g)
    cdef list r
    if not a and not b:
        raise ZeroDivisionError("gcd of two zero polynomials")
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = primitive_part(pseudo_rem(a, b))
        a, b = b, r
    return a


def bareiss_rank(rows):
    """Exact rank by fraction-free elimination, pivoting on the first nonzero entry per column."""
    cdef list m = [list(row) for row in rows]
    cdef Py_ssize_t nr = len(m)
    cdef Py_ssize_t nc = len(m[0]) if nr else 0
    cdef Py_ssize_t rank = 0, pr = 0, pc, r, c, piv
    cdef list row, prow
    prev = 1
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
        prow = m[pr]
        p = prow[pc]
        for r in range(pr + 1, nr):
            row = m[r]
            head = row[pc]
            for c in range(pc + 1, nc):
                row[c] = (p * row[c] - head * prow[c]) // prev
            row[pc] = 0
        prev = p
        rank += 1
        pr += 1
        if pr == nr:
            break
    return rank
