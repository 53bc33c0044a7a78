"""Virtual Poincare polynomials of toric varieties via the cone recursion.

The weighted Euler characteristic IP(X) = sum (-1)^k dim Gr^W_{2l} q^l is
additive over fan decompositions and satisfies

    IP(X_Delta) = sum over cones  dIP(X_link(cone)) * (1-q)^(n - dim cone),

where the zero cone contributes (1-q)^n and dIP truncates (q-1)*IP below
half the complex dimension of the link variety.  Purity of equivariant
intersection cohomology makes the equivariant series the expansion of
IP/(1-q)^n, with nonnegative coefficients.
"""

from dataclasses import dataclass
from math import comb

from .errors import (NegativeDimension, PurityViolation, ValidationError,
                     ZeroCone)
from .fan import link_fan, subfan_intersection, subfan_union


class QPolynomial:
    """Polynomial in q with exact integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        for e, c in (coeffs or {}).items():
            if c:
                data[int(e)] = int(c)
        self.coeffs = data

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def q(cls):
        return cls({1: 1})

    def coeff(self, e):
        return self.coeffs.get(e, 0)

    def degree(self):
        return max(self.coeffs, default=-1)

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return QPolynomial(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) - c
        return QPolynomial(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial({e: c * other for e, c in self.coeffs.items()})
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = QPolynomial.one()
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, value):
        return sum(c * value ** e for e, c in self.coeffs.items())

    def __eq__(self, other):
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def truncate_above(self, threshold_twice):
        """Keep monomials of degree e with 2e > threshold_twice."""
        return QPolynomial({e: c for e, c in self.coeffs.items()
                            if 2 * e > threshold_twice})

    def coefficient_list(self, upto):
        return [self.coeff(e) for e in range(upto + 1)]

    def render(self):
        """Text form like ``1 + 2q - q^2`` (ascending degrees)."""
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"QPolynomial({self.render()})"


ONE_MINUS_Q = QPolynomial({0: 1, 1: -1})


class QSeries:
    """Truncated power series in q with exact integer coefficients."""

    __slots__ = ("coeffs", "cutoff")

    def __init__(self, coeffs, cutoff):
        coeffs = list(coeffs)
        if len(coeffs) != cutoff + 1:
            raise ValidationError("series needs cutoff+1 coefficients")
        self.coeffs = [int(c) for c in coeffs]
        self.cutoff = cutoff

    def coeff(self, e):
        if e > self.cutoff:
            raise ValidationError(f"coefficient {e} is beyond the cutoff")
        return self.coeffs[e]

    def __add__(self, other):
        cut = min(self.cutoff, other.cutoff)
        return QSeries([self.coeffs[i] + other.coeffs[i] for i in range(cut + 1)], cut)

    def __sub__(self, other):
        cut = min(self.cutoff, other.cutoff)
        return QSeries([self.coeffs[i] - other.coeffs[i] for i in range(cut + 1)], cut)

    def mul_poly(self, poly):
        out = [0] * (self.cutoff + 1)
        for e, c in poly.coeffs.items():
            for i in range(self.cutoff + 1 - e):
                out[i + e] += c * self.coeffs[i]
        return QSeries(out, self.cutoff)

    def truncated(self, cutoff):
        if cutoff > self.cutoff:
            raise ValidationError("cannot extend a series by truncation")
        return QSeries(self.coeffs[:cutoff + 1], cutoff)

    def as_polynomial(self):
        return QPolynomial({e: c for e, c in enumerate(self.coeffs)})

    def __eq__(self, other):
        return (isinstance(other, QSeries) and self.cutoff == other.cutoff
                and self.coeffs == other.coeffs)

    def render(self):
        return ", ".join(str(c) for c in self.coeffs) + f" (cutoff {self.cutoff})"

    def __repr__(self):
        return f"QSeries({self.render()})"


def d_ip(ip, complex_dim):
    """Boundary operator on virtual Poincare polynomials.

    Multiplies by (q-1) and keeps only monomials of degree strictly
    greater than complex_dim/2.  Normalization: the fan of a point gives
    d_ip(1, 0) = q, forced by IP(affine line) = 1.
    """
    if complex_dim < 0:
        raise NegativeDimension("complex dimension must be nonnegative")
    flipped = ip * QPolynomial({1: 1, 0: -1})
    return flipped.truncate_above(complex_dim)


_IP_CACHE = {}


def ip_cld(fan):
    """Virtual Poincare polynomial of the fan's variety, by cone recursion.

    Valid for arbitrary fans; each cone contributes the boundary operator
    of its link's polynomial times (1-q)^codimension, the zero cone
    contributing (1-q)^rank.
    """
    key = fan.canonical_key()
    cached = _IP_CACHE.get(key)
    if cached is not None:
        return cached
    n = fan.rank
    total = QPolynomial.zero()
    for cone in fan.cones:
        if cone.dim == 0:
            contribution = ONE_MINUS_Q ** n
        else:
            link = link_fan(fan, cone)
            contribution = d_ip(ip_cld(link), cone.dim - 1) * ONE_MINUS_Q ** (n - cone.dim)
        total = total + contribution
    _IP_CACHE[key] = total
    return total


def _expand_over_unit_denominator(poly, n, cutoff):
    """Coefficients of poly/(1-q)^n up to the cutoff."""
    out = []
    for l in range(cutoff + 1):
        if n == 0:
            out.append(poly.coeff(l))
        else:
            out.append(sum(poly.coeff(j) * comb(n - 1 + l - j, n - 1)
                           for j in range(l + 1)))
    return out


def ip_equivariant_series(fan, cutoff):
    """Equivariant Betti series: expansion of ip_cld/(1-q)^rank.

    Purity forces every coefficient to be a dimension; a negative
    coefficient is reported as PurityViolation (a bug, not a value).
    """
    if cutoff < 0:
        raise ValidationError("cutoff must be nonnegative")
    coeffs = _expand_over_unit_denominator(ip_cld(fan), fan.rank, cutoff)
    for l, c in enumerate(coeffs):
        if c < 0:
            raise PurityViolation(
                f"equivariant series coefficient {c} < 0 at degree {l}")
    return QSeries(coeffs, cutoff)


def affine_ih_betti(fan, cone):
    """Intersection-cohomology Betti numbers of the affine variety of a cone.

    With the link variety complete of complex dimension d-1 and Betti
    numbers b (pure, so read off ip_cld of the link fan), the affine cone
    has dim IH^k = b_k - b_{k-2} for k <= d-1 and 0 above; the returned
    list covers degrees 0..d-1 (odd entries are 0).
    """
    if cone.dim == 0:
        raise ZeroCone("the zero cone's variety is the torus, not a cone")
    d = cone.dim
    link = link_fan(fan, cone)
    ip = ip_cld(link)
    out = [0] * d
    for i in range(0, (d - 1) // 2 + 1):
        out[2 * i] = ip.coeff(i) - ip.coeff(i - 1)
    return out


@dataclass(frozen=True)
class AdditivityReport:
    polynomial_ok: bool
    series_ok: bool
    union_ip: QPolynomial
    combined_ip: QPolynomial


def additivity_check(f1, f2, cutoff=12):
    """Verify IP(union) = IP(f1) + IP(f2) - IP(intersection), and the same
    identity for the equivariant series to the cutoff."""
    union = subfan_union(f1, f2)
    meet = subfan_intersection(f1, f2)
    lhs = ip_cld(union)
    rhs = ip_cld(f1) + ip_cld(f2) - ip_cld(meet)
    lhs_series = ip_equivariant_series(union, cutoff)
    rhs_series = (ip_equivariant_series(f1, cutoff)
                  + ip_equivariant_series(f2, cutoff)
                  - ip_equivariant_series(meet, cutoff))
    return AdditivityReport(lhs == rhs, lhs_series == rhs_series, lhs, rhs)
