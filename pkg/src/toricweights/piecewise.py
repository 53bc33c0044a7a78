"""Cone-wise polynomial functions on a simplicial fan.

The degree-k piece models the 2k-th equivariant cohomology group of the
associated variety.  On a simplicial cone the primitive ray generators
are a basis of its span, and in those coordinates the restriction of a
monomial to a face either kills it (an exponent off the face) or keeps
it verbatim.  The face-agreement system therefore identifies matching
monomial coefficients across maximal cones, and its solution space has a
canonical basis indexed by monomials on the ray universe whose support
spans a cone of the fan.  That combinatorial solution is cross-checked
against a dense constraint-matrix kernel in the test suite.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import (IncompatibleRayUniverse, NotSimplicial, ValidationError)
from .fan import classify, subfan_intersection, subfan_union
from .graded import LinearMapQ


def _positive_exponents(total, slots):
    """Exponent tuples of length ``slots`` with all entries >= 1 summing
    to ``total``, via stars and bars."""
    if slots == 0:
        return [()] if total == 0 else []
    if total < slots:
        return []
    out = []
    for cuts in combinations(range(1, total), slots - 1):
        prev = 0
        parts = []
        for c in list(cuts) + [total]:
            parts.append(c - prev)
            prev = c
        out.append(tuple(parts))
    return out


class PPSpace:
    """Basis of the continuous cone-wise polynomials of one degree.

    ``monomials`` lists exponent vectors over the whole ray universe;
    each basis function restricts on a maximal cone either to the same
    monomial in that cone's ray coordinates or to zero.
    """

    def __init__(self, fan, degree, monomials):
        self.fan = fan
        self.degree = degree
        self.monomials = tuple(monomials)
        self.index = {m: i for i, m in enumerate(self.monomials)}

    @property
    def dim(self):
        return len(self.monomials)

    @property
    def basis(self):
        """Per maximal cone, each basis element as {local exponents: coeff}."""
        out = []
        for mono in self.monomials:
            support = frozenset(i for i, e in enumerate(mono) if e)
            per_cone = []
            for cone in self.fan.maximal_cones:
                if support <= set(cone.rays):
                    local = tuple(mono[i] for i in cone.rays)
                    per_cone.append({local: Fraction(1)})
                else:
                    per_cone.append({})
            out.append(tuple(per_cone))
        return tuple(out)

    def __repr__(self):
        return f"PPSpace(degree={self.degree}, dim={self.dim})"


@lru_cache(maxsize=None)
def pp_basis(fan, degree):
    """Degree-k piecewise polynomial space of a simplicial fan.

    Raises NotSimplicial for fans with non-simplicial cones; degree must
    be nonnegative.
    """
    if degree < 0:
        raise ValidationError("degree must be nonnegative")
    if not classify(fan).is_simplicial:
        raise NotSimplicial("cone-wise polynomial model needs a simplicial fan")
    monomials = []
    for cone in fan.cones:
        for expo in _positive_exponents(degree, len(cone.rays)):
            vec = [0] * len(fan.rays)
            for i, e in zip(cone.rays, expo):
                vec[i] = e
            monomials.append(tuple(vec))
    monomials.sort(reverse=True)
    return PPSpace(fan, degree, monomials)


def module_action(pp, form):
    """Multiplication by a global linear form, degree k -> k+1.

    ``form`` is a covector on the ambient space; its value on each
    primitive ray generator gives the matrix entries directly.
    """
    fan = pp.fan
    if len(form) != fan.rank:
        raise ValidationError(f"form must have {fan.rank} entries")
    form = [Fraction(x) for x in form]
    target = pp_basis(fan, pp.degree + 1)
    values = [sum(f * v for f, v in zip(form, ray)) for ray in fan.rays]
    entries = [[Fraction(0)] * pp.dim for _ in range(target.dim)]
    for j, mono in enumerate(pp.monomials):
        for i in range(len(fan.rays)):
            if not values[i]:
                continue
            bumped = list(mono)
            bumped[i] += 1
            row = target.index.get(tuple(bumped))
            if row is not None:
                entries[row][j] += values[i]
    return LinearMapQ(target.dim, pp.dim, entries)


def restriction_to_subfan(pp, sub_pp):
    """Restriction matrix from a fan's space to a subfan's space.

    A basis monomial survives exactly when its support cone belongs to
    the subfan.
    """
    entries = [[Fraction(0)] * pp.dim for _ in range(sub_pp.dim)]
    for j, mono in enumerate(pp.monomials):
        row = sub_pp.index.get(mono)
        if row is not None:
            entries[row][j] = Fraction(1)
    return LinearMapQ(sub_pp.dim, pp.dim, entries)


@dataclass(frozen=True)
class MayerVietorisReport:
    injective_left: bool
    exact_middle: bool
    surjective_right: bool
    dims: tuple  # (union, part1, part2, intersection)


def mayer_vietoris_check(f1, f2, degree):
    """Exactness of 0 -> PP(union) -> PP(f1) + PP(f2) -> PP(meet) -> 0.

    All three booleans are decided by exact rank computations."""
    if f1.rays != f2.rays:
        raise IncompatibleRayUniverse("fans do not share a ray universe")
    union = subfan_union(f1, f2)
    meet = subfan_intersection(f1, f2)
    p_u = pp_basis(union, degree)
    p_1 = pp_basis(f1, degree)
    p_2 = pp_basis(f2, degree)
    p_m = pp_basis(meet, degree)
    r1 = restriction_to_subfan(p_u, p_1)
    r2 = restriction_to_subfan(p_u, p_2)
    left = LinearMapQ(p_1.dim + p_2.dim, p_u.dim,
                      [list(r) for r in r1.entries] + [list(r) for r in r2.entries])
    s1 = restriction_to_subfan(p_1, p_m)
    s2 = restriction_to_subfan(p_2, p_m)
    right_entries = [list(a) + [-x for x in b]
                     for a, b in zip(s1.entries, s2.entries)]
    right = LinearMapQ(p_m.dim, p_1.dim + p_2.dim, right_entries)
    assert (right @ left).is_zero()
    rank_left = left.rank()
    rank_right = right.rank()
    return MayerVietorisReport(
        injective_left=rank_left == p_u.dim,
        exact_middle=rank_left + rank_right == p_1.dim + p_2.dim,
        surjective_right=rank_right == p_m.dim,
        dims=(p_u.dim, p_1.dim, p_2.dim, p_m.dim),
    )


@dataclass(frozen=True)
class FrobeniusAction:
    """Diagonal action on the degree-k piece: multiplication by p^k."""
    prime_power: int
    degree: int
    scalar: int


def frobenius_action(p, degree):
    if p <= 1:
        raise ValidationError("prime power must exceed 1")
    return FrobeniusAction(p, degree, p ** degree)
