"""Koszul complexes on equivariant classes and the weight table.

The full Koszul complex of the degree-graded equivariant model tensored
with the exterior algebra of the dual Lie algebra splits into weight
subcomplexes: the piece of weight index l has, in cohomological degree k,
the term PP^{k-l} (x) Lambda^{2l-k}, with differential
d(x (x) xi) = sum_j (x * u_j) (x) contraction_j(xi) over the coordinate
covectors u_j.  The k-th cohomology of the weight-l piece is the l-th
graded piece of the weight filtration on the k-th (intersection)
cohomology group of the variety.
"""

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ValidationError
from .graded import LinearMapQ, homology_dims, wedge_subsets
from .piecewise import module_action, pp_basis


class KoszulComplex:
    """One weight subcomplex: terms and differentials by total degree."""

    def __init__(self, fan, weight_index, terms, differentials):
        self.fan = fan
        self.weight_index = weight_index
        self.terms = terms            # k -> (pp_degree, wedge_degree, dim)
        self.differentials = differentials  # k -> LinearMapQ from term k to k+1
        ks = sorted(terms)
        self.k_min = ks[0] if ks else 0
        self.k_max = ks[-1] if ks else -1

    def term_dim(self, k):
        info = self.terms.get(k)
        return info[2] if info else 0

    def differential(self, k):
        d = self.differentials.get(k)
        if d is None:
            return LinearMapQ.zero(self.term_dim(k + 1), self.term_dim(k))
        return d

    def homology_dim(self, k):
        if self.term_dim(k) == 0:
            return 0
        return homology_dims(self.differential(k - 1), self.differential(k))

    def __repr__(self):
        return (f"KoszulComplex(weight={self.weight_index}, "
                f"degrees {self.k_min}..{self.k_max})")


def _differential(fan, pp_deg, wedge_deg):
    """Matrix of the Koszul differential out of PP^pp_deg (x) Lambda^wedge_deg."""
    n = fan.rank
    source_pp = pp_basis(fan, pp_deg)
    target_pp = pp_basis(fan, pp_deg + 1)
    mults = [module_action(source_pp, [int(i == j) for i in range(n)])
             for j in range(n)]
    src_sets = wedge_subsets(n, wedge_deg)
    tgt_sets = wedge_subsets(n, wedge_deg - 1)
    tgt_index = {s: i for i, s in enumerate(tgt_sets)}
    rows = target_pp.dim * len(tgt_sets)
    cols = source_pp.dim * len(src_sets)
    entries = [[Fraction(0)] * cols for _ in range(rows)]
    for si, subset in enumerate(src_sets):
        base_col = si * source_pp.dim
        for pos, j in enumerate(subset):
            sign = -1 if pos % 2 else 1
            reduced = subset[:pos] + subset[pos + 1:]
            base_row = tgt_index[reduced] * target_pp.dim
            mat = mults[j].entries
            for r in range(target_pp.dim):
                row = entries[base_row + r]
                mrow = mat[r]
                for c in range(source_pp.dim):
                    if mrow[c]:
                        row[base_col + c] += sign * mrow[c]
    return LinearMapQ(rows, cols, entries)


def build_koszul(fan, weight_index, degree_cap=None):
    """Assemble the weight subcomplex; verifies d(d(x)) = 0 while building.

    ``degree_cap`` limits the top total degree (the full complex reaches
    2*weight_index).
    """
    if weight_index < 0:
        raise ValidationError("weight index must be nonnegative")
    n = fan.rank
    l = weight_index
    k_lo = max(l, 2 * l - n)
    k_hi = 2 * l
    if degree_cap is not None:
        k_hi = min(k_hi, degree_cap)
    terms = {}
    for k in range(k_lo, k_hi + 1):
        pp_deg, wedge_deg = k - l, 2 * l - k
        dim = pp_basis(fan, pp_deg).dim * len(wedge_subsets(n, wedge_deg))
        terms[k] = (pp_deg, wedge_deg, dim)
    differentials = {}
    prev = None
    for k in range(k_lo, k_hi):
        d = _differential(fan, k - l, 2 * l - k)
        differentials[k] = d
        if prev is not None and d.cols and prev.rows:
            assert (d @ prev).is_zero(), "differential squares to nonzero"
        prev = d
    return KoszulComplex(fan, l, terms, differentials)


class WeightTable:
    """Nonzero dimensions of the weight-graded cohomology pieces.

    ``entries[(k, l)]`` is the dimension of the weight-2l piece of the
    k-th group; absent pairs are zero.
    """

    def __init__(self, rank, fan_key, entries):
        self.rank = rank
        self.fan_key = fan_key
        self.entries = {kl: d for kl, d in entries.items() if d}

    def entry(self, k, l):
        return self.entries.get((k, l), 0)

    def betti(self, k):
        return sum(d for (kk, _), d in self.entries.items() if kk == k)

    def betti_list(self):
        return [self.betti(k) for k in range(2 * self.rank + 1)]

    def rows(self):
        """Sorted (k, l, dim, weight) tuples."""
        return [(k, l, d, 2 * l)
                for (k, l), d in sorted(self.entries.items())]

    def __eq__(self, other):
        return (isinstance(other, WeightTable) and self.rank == other.rank
                and self.entries == other.entries)

    def __repr__(self):
        return f"WeightTable(rank={self.rank}, entries={dict(sorted(self.entries.items()))})"


def _fan_key(fan):
    digest = hashlib.sha256(repr(fan.canonical_key()).encode()).hexdigest()
    return digest[:12]


@lru_cache(maxsize=None)
def weight_table(fan):
    """Weight-graded cohomology dimensions for a simplicial fan.

    Computes the cohomology of every weight subcomplex in all total
    degrees up to twice the rank, which covers every nonzero group.
    """
    n = fan.rank
    entries = {}
    for l in range(0, 2 * n + 1):
        if max(l, 2 * l - n) > 2 * n:
            continue
        complex_ = build_koszul(fan, l, degree_cap=min(2 * l, 2 * n) + 1)
        for k in range(complex_.k_min, min(2 * l, 2 * n) + 1):
            h = complex_.homology_dim(k)
            if h:
                entries[(k, l)] = h
    return WeightTable(n, _fan_key(fan), entries)


def pure_part(fan, k):
    """Dimension of the lowest-weight piece of the k-th group.

    For even k this is the cokernel of multiplication
    PP^{k/2-1} (x) t* -> PP^{k/2}; odd-degree groups have no pure part.
    """
    if k < 0:
        raise ValidationError("degree must be nonnegative")
    if k % 2:
        return 0
    m = k // 2
    target = pp_basis(fan, m)
    if m == 0:
        return target.dim
    source = pp_basis(fan, m - 1)
    n = fan.rank
    stacked = []
    for j in range(n):
        mat = module_action(source, [int(i == j) for i in range(n)])
        stacked.append(mat)
    entries = [[x for mat in stacked for x in mat.entries[r]]
               for r in range(target.dim)]
    combined = LinearMapQ(target.dim, n * source.dim, entries)
    return target.dim - combined.rank()


@dataclass(frozen=True)
class TwistedRow:
    k: int
    l: int
    dim: int
    eigenvalue: int


def twisted_dims(table, p):
    """Attach the eigenvalue p^l to every weight-table entry."""
    if p <= 1:
        raise ValidationError("prime power must exceed 1")
    return [TwistedRow(k, l, d, p ** l) for (k, l, d, _) in table.rows()]
