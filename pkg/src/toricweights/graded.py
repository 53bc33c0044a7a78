"""Graded pieces of symmetric algebras and exact maps between them.

Monomial bases are ordered once and for all (descending lexicographic on
exponent vectors) so every matrix produced here is reproducible.
"""

from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import DimensionMismatch, NotAComplex
from . import linalg


def monomial_exponents(nvars, degree):
    """All exponent vectors of the given total degree, descending lex."""
    if nvars == 0:
        return ((),) if degree == 0 else ()
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), degree, nvars)
    return tuple(out)


class SymBasis:
    """Monomial basis of the degree-k piece of Sym(Q^nvars)."""

    def __init__(self, nvars, degree):
        if nvars < 0 or degree < 0:
            raise DimensionMismatch("nvars and degree must be nonnegative")
        self.vars = nvars
        self.degree = degree
        self.monomials = monomial_exponents(nvars, degree)
        self.index = {m: i for i, m in enumerate(self.monomials)}

    @property
    def size(self):
        return len(self.monomials)

    def __repr__(self):
        return f"SymBasis(vars={self.vars}, degree={self.degree}, size={self.size})"


class LinearMapQ:
    """Dense matrix over Q with exact entries.

    ``entries[i][j]`` is the coefficient of target basis vector i in the
    image of source basis vector j (column-per-source convention).
    """

    def __init__(self, rows, cols, entries):
        entries = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise DimensionMismatch(
                f"expected {rows}x{cols} entries, got "
                f"{len(entries)}x{len(entries[0]) if entries else 0}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, rows, columns):
        entries = [[columns[j][i] for j in range(len(columns))] for i in range(rows)]
        return cls(rows, len(columns), entries)

    def __matmul__(self, other):
        if not isinstance(other, LinearMapQ):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}")
        prod = linalg.mat_mul([list(r) for r in self.entries],
                              [list(r) for r in other.entries])
        if not prod:
            prod = [[]] * self.rows if other.cols == 0 else []
        return LinearMapQ(self.rows, other.cols,
                          prod if prod else [[0] * other.cols for _ in range(self.rows)])

    def rank(self):
        if self.rows == 0 or self.cols == 0:
            return 0
        return linalg.rank(self.entries, self.cols)

    def is_zero(self):
        return all(not x for row in self.entries for x in row)

    def apply(self, vector):
        if len(vector) != self.cols:
            raise DimensionMismatch("vector length does not match columns")
        return [sum(r[j] * Fraction(vector[j]) for j in range(self.cols))
                for r in self.entries]

    def __eq__(self, other):
        return (isinstance(other, LinearMapQ) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"LinearMapQ({self.rows}x{self.cols})"


def _poly_mul(p, linear):
    """Multiply an exponent->coeff dict by a linear form (coeff list)."""
    out = {}
    for mono, c in p.items():
        for i, a in enumerate(linear):
            if not a:
                continue
            m2 = list(mono)
            m2[i] += 1
            m2 = tuple(m2)
            out[m2] = out.get(m2, Fraction(0)) + c * a
    return {m: c for m, c in out.items() if c}


def restrict_sym(ambient_vars, degree, substitution):
    """Map on degree-k symmetric powers induced by a linear substitution.

    ``substitution[i]`` lists the coefficients of the new variables in the
    image of old variable i.  The result sends Sym^k(ambient_vars) to
    Sym^k(target_vars) and is functorial in the substitution.
    """
    sub = [[Fraction(x) for x in row] for row in substitution]
    if len(sub) != ambient_vars:
        raise DimensionMismatch(
            f"substitution has {len(sub)} rows, expected {ambient_vars}")
    target_vars = len(sub[0]) if sub else 0
    if any(len(r) != target_vars for r in sub):
        raise DimensionMismatch("ragged substitution matrix")
    source = SymBasis(ambient_vars, degree)
    target = SymBasis(target_vars, degree)
    columns = []
    for mono in source.monomials:
        acc = {(0,) * target_vars: Fraction(1)}
        for i, e in enumerate(mono):
            for _ in range(e):
                acc = _poly_mul(acc, sub[i])
        col = [Fraction(0)] * target.size
        for m, c in acc.items():
            col[target.index[m]] = c
        columns.append(col)
    if not columns:
        return LinearMapQ.zero(target.size, 0)
    return LinearMapQ.from_columns(target.size, columns)


def multiply_by_form(nvars, degree, form):
    """Multiplication Sym^k -> Sym^{k+1} by a linear form; injective iff
    the form is nonzero."""
    form = [Fraction(x) for x in form]
    if len(form) != nvars:
        raise DimensionMismatch(f"form has {len(form)} entries, expected {nvars}")
    source = SymBasis(nvars, degree)
    target = SymBasis(nvars, degree + 1)
    entries = [[Fraction(0)] * source.size for _ in range(target.size)]
    for j, mono in enumerate(source.monomials):
        for i, a in enumerate(form):
            if not a:
                continue
            m2 = list(mono)
            m2[i] += 1
            entries[target.index[tuple(m2)]][j] += a
    return LinearMapQ(target.size, source.size, entries)


def homology_dims(d_in, d_out):
    """dim ker(d_out) - rank(d_in) for a two-step complex at the middle term.

    Raises NotAComplex unless d_out composed with d_in vanishes.
    """
    if d_in.rows != d_out.cols:
        raise DimensionMismatch(
            f"middle dimensions disagree: {d_in.rows} vs {d_out.cols}")
    if d_in.cols and d_out.rows and not (d_out @ d_in).is_zero():
        raise NotAComplex("composite of consecutive differentials is nonzero")
    return (d_out.cols - d_out.rank()) - d_in.rank()


def sym_dim(nvars, degree):
    if degree < 0:
        return 0
    if nvars == 0:
        return 1 if degree == 0 else 0
    return comb(nvars + degree - 1, degree)


def wedge_subsets(n, b):
    """Basis of the degree-b exterior power: b-subsets of range(n), lex."""
    return tuple(combinations(range(n), b))
