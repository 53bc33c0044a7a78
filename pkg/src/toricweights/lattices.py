"""Integer lattice utilities.

Diagonalization of an integer matrix by unimodular row and column
operations (a Smith-style normal form without the divisibility chain),
tracking the column transform so that saturated span bases and quotient
projections of Z^n come out exactly.
"""

from math import gcd

from .errors import NonPrimitiveRay


def xgcd(a, b):
    """Return (g, x, y) with x*a + y*b == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def primitivize(vec):
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g == 0:
        raise NonPrimitiveRay("zero vector cannot be primitivized")
    return tuple(x // g for x in vec)


def integer_diagonalize(rows, ncols):
    """Diagonalize an integer matrix A by unimodular operations.

    Returns (diag, T, Tinv, r) with T, Tinv unimodular ncols x ncols,
    r = rank(A), and A = S @ D @ T for some unimodular S (not tracked),
    D diagonal with entries ``diag``.  Consequences used elsewhere:

    - the first r rows of T are a basis of the saturation of the row
      space of A inside Z^ncols (i.e. of Z^ncols intersected with the
      rational row span);
    - for x in Z^ncols, the last ncols-r coordinates of x @ Tinv are the
      coordinates of x in the quotient lattice Z^ncols / saturation.
    """
    m = [list(row) for row in rows]
    nrows = len(m)
    T = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    Tinv = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def col_op(j1, j2, a, b, c, d):
        # columns (j1, j2) <- (a*j1 + c*j2, b*j1 + d*j2); det must be +-1
        det = a * d - b * c
        for row in m:
            x, y = row[j1], row[j2]
            row[j1], row[j2] = a * x + c * y, b * x + d * y
        # T <- E^{-1} T acts on rows j1, j2; Tinv <- Tinv E on columns
        ia, ib, ic, id_ = d * det, -b * det, -c * det, a * det
        r1, r2 = T[j1], T[j2]
        T[j1] = [ia * x + ib * y for x, y in zip(r1, r2)]
        T[j2] = [ic * x + id_ * y for x, y in zip(r1, r2)]
        for row in Tinv:
            x, y = row[j1], row[j2]
            row[j1], row[j2] = a * x + c * y, b * x + d * y

    def row_op(i1, i2, a, b, c, d):
        r1, r2 = m[i1], m[i2]
        m[i1] = [a * x + b * y for x, y in zip(r1, r2)]
        m[i2] = [c * x + d * y for x, y in zip(r1, r2)]

    def clear_col_entry(t, i):
        # zero m[i][t]; keeps the pivot row when the pivot divides
        a, b = m[t][t], m[i][t]
        if b % a == 0:
            q = b // a
            m[i] = [u - q * v for u, v in zip(m[i], m[t])]
        else:
            g, x, y = xgcd(a, b)
            row_op(t, i, x, y, -(b // g), a // g)

    def clear_row_entry(t, j):
        a, b = m[t][t], m[t][j]
        if b % a == 0:
            q = b // a
            col_op(t, j, 1, -q, 0, 1)
        else:
            g, x, y = xgcd(a, b)
            col_op(t, j, x, -(b // g), y, a // g)

    t = 0
    while t < min(nrows, ncols):
        # move a nonzero entry to (t, t)
        pos = next(((i, j) for i in range(t, nrows) for j in range(t, ncols)
                    if m[i][j]), None)
        if pos is None:
            break
        i, j = pos
        if i != t:
            m[t], m[i] = m[i], m[t]
        if j != t:
            col_op(t, j, 0, 1, 1, 0)
        while True:
            for i in range(t + 1, nrows):
                if m[i][t]:
                    clear_col_entry(t, i)
            dirty = False
            for j in range(t + 1, ncols):
                if m[t][j]:
                    clear_row_entry(t, j)
                    dirty = True
            if not dirty and all(m[i][t] == 0 for i in range(t + 1, nrows)):
                break
        t += 1

    diag = [m[i][i] for i in range(min(nrows, ncols)) if i < t]
    return diag, T, Tinv, t


def span_saturation_basis(vectors, ncols):
    """Basis of Z^ncols intersected with the rational span of ``vectors``.

    Returns (basis rows, Tinv, rank); coordinates of a lattice point x of
    the span in this basis are the first ``rank`` entries of x @ Tinv.
    """
    diag, T, Tinv, r = integer_diagonalize(vectors, ncols)
    return [tuple(T[i]) for i in range(r)], Tinv, r


def quotient_coordinates(vectors, ncols):
    """Projection data for Z^ncols modulo the saturated span of ``vectors``.

    Returns (Tinv, rank); the image of x is the last ncols-rank entries of
    x @ Tinv, a coordinate vector in the quotient lattice.
    """
    _, _, Tinv, r = integer_diagonalize(vectors, ncols)
    return Tinv, r


def apply_matrix(vec, mat):
    """Row vector times matrix, all integers."""
    return tuple(sum(vec[i] * mat[i][j] for i in range(len(vec)))
                 for j in range(len(mat[0]) if mat else 0))


def lattice_index(vectors, ncols):
    """Index of the sublattice spanned by ``vectors`` inside its saturation.

    1 exactly when the vectors extend to a basis of Z^ncols (unimodularity).
    """
    diag, _, _, r = integer_diagonalize(vectors, ncols)
    if r < len(vectors):
        return 0
    idx = 1
    for d in diag:
        idx *= abs(d)
    return idx
