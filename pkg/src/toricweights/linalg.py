"""Exact linear algebra over the rationals.

Dense routines (reduced row echelon form, kernel bases, products) work on
lists of Fraction rows and are meant for small systems.  Rank of larger
matrices goes through a fraction-free integer elimination on sparse rows,
so no denominators ever appear and no tolerance is involved anywhere.
"""

from fractions import Fraction
from math import gcd


def frac_rows(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows, ncols):
    """Reduced row echelon form.  Returns (reduced rows, pivot columns)."""
    m = frac_rows(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows, ncols):
    """Canonical kernel basis of the row system, from the RREF.

    Returns a list of Fraction vectors of length ncols; each has a 1 in
    its free column, so the basis is reproducible.
    """
    red, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red[r][free]
        basis.append(v)
    return basis


def rank(rows, ncols=None):
    """Exact rank via fraction-free elimination on sparse integer rows."""
    sparse = []
    for row in rows:
        d = {}
        denom = 1
        for x in row:
            f = Fraction(x)
            denom = denom * f.denominator // gcd(denom, f.denominator)
        for j, x in enumerate(row):
            f = Fraction(x)
            if f:
                d[j] = int(f * denom)
        if d:
            sparse.append(d)
    return sparse_int_rank(sparse)


def sparse_int_rank(rows):
    """Rank of an integer matrix given as sparse {column: value} rows.

    Bareiss-style cross-multiplication keeps everything integral; rows are
    reduced by their gcd after each step to control growth.
    """
    rows = [dict(r) for r in rows if r]
    rk = 0
    while rows:
        piv = min(range(len(rows)), key=lambda i: (len(rows[i]), min(rows[i])))
        prow = rows.pop(piv)
        c = min(prow)
        a = prow[c]
        rk += 1
        nxt = []
        for r in rows:
            b = r.get(c)
            if b is None:
                nxt.append(r)
                continue
            new = {}
            for j, v in r.items():
                if j == c:
                    continue
                w = v * a - prow.get(j, 0) * b
                if w:
                    new[j] = w
            for j, v in prow.items():
                if j != c and j not in r:
                    w = -v * b
                    if w:
                        new[j] = w
            if new:
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    new = {j: v // g for j, v in new.items()}
                nxt.append(new)
        rows = nxt
    return rk


def mat_mul(a, b):
    """Product of two dense Fraction matrices (lists of rows)."""
    if not a or not b:
        return []
    nb = len(b[0])
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def dot(u, v):
    return sum(Fraction(x) * Fraction(y) for x, y in zip(u, v))


def scale_to_int(vec):
    """Clear denominators and divide by the gcd; returns a tuple of ints."""
    fr = [Fraction(x) for x in vec]
    denom = 1
    for f in fr:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(f * denom) for f in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)
