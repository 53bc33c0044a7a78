"""Exact polyhedral cone geometry at desk scale.

Facets are enumerated by brute force over (d-1)-subsets of generators,
which is complete for polyhedral cones and entirely rational; everything
downstream (strong convexity, extremality of generators, face recursion,
intersection of two cones) reduces to small exact kernel computations.
"""

from fractions import Fraction
from itertools import combinations

from . import linalg
from .errors import NotStronglyConvex


class ConeGeometry:
    """Facet description of the cone generated by a list of vectors.

    ``facets`` are integral ambient covectors, nonnegative on the cone;
    ``incidence[f]`` is the frozenset of generator indices on facet f.
    """

    def __init__(self, generators, ambient_dim):
        self.generators = [tuple(v) for v in generators]
        self.ambient_dim = ambient_dim
        if not self.generators:
            self.dim = 0
            self.span_rows, self.span_pivots = [], []
            self.coords = []
            self.facets = []
            self.incidence = []
            return
        rows, pivots = linalg.rref(self.generators, ambient_dim)
        self.span_rows, self.span_pivots = rows, pivots
        self.dim = len(pivots)
        # coordinates of each generator in the row-echelon span basis:
        # x = sum_t x[pivot_t] * rows[t] for x in the span
        self.coords = [tuple(Fraction(v[p]) for p in pivots) for v in self.generators]
        self.facets, self.incidence = self._facet_normals()

    def _facet_normals(self):
        d = self.dim
        coords = self.coords
        seen = {}
        for subset in combinations(range(len(coords)), d - 1):
            sub = [coords[i] for i in subset]
            kernel = linalg.nullspace(sub, d)
            if len(kernel) != 1:
                continue
            w = kernel[0]
            vals = [linalg.dot(w, y) for y in coords]
            if all(v >= 0 for v in vals):
                pass
            elif all(v <= 0 for v in vals):
                w = [-x for x in w]
                vals = [-v for v in vals]
            else:
                continue
            key = linalg.scale_to_int(w)
            if key not in seen:
                seen[key] = frozenset(i for i, v in enumerate(vals) if v == 0)
        facets = []
        for key in sorted(seen):
            facets.append(self._lift_covector(key))
        incidence = [seen[key] for key in sorted(seen)]
        return facets, incidence

    def _lift_covector(self, w_span):
        # covector on span coordinates -> ambient covector agreeing on the span
        amb = [0] * self.ambient_dim
        for t, p in enumerate(self.span_pivots):
            amb[p] = w_span[t]
        return tuple(amb)

    def is_pointed(self):
        if self.dim == 0:
            return True
        keys = [tuple(Fraction(f[p]) for p in self.span_pivots) for f in self.facets]
        if not keys:
            return False
        return linalg.rank(keys, self.dim) == self.dim

    def extreme_flags(self):
        """Whether each generator spans an extreme ray (cone must be pointed)."""
        if not self.is_pointed():
            raise NotStronglyConvex("cone contains a line")
        n = len(self.generators)
        on_facet = [frozenset(j for j, inc in enumerate(self.incidence) if i in inc)
                    for i in range(n)]
        flags = []
        for i in range(n):
            face_gens = [self.coords[k] for k in range(n)
                         if on_facet[k] >= on_facet[i]]
            flags.append(linalg.rank(face_gens, self.dim) == 1)
        return flags

    def span_coords(self, vector):
        """Coordinates of an ambient vector in the span basis, or None."""
        y = [Fraction(vector[p]) for p in self.span_pivots]
        recon = [sum(y[t] * Fraction(self.span_rows[t][j]) for t in range(self.dim))
                 for j in range(self.ambient_dim)]
        if any(recon[j] != Fraction(vector[j]) for j in range(self.ambient_dim)):
            return None
        return y

    def contains(self, vector):
        y = self.span_coords(vector)
        if y is None:
            return False
        return all(linalg.dot(f, vector) >= 0 for f in self.facets)

    def annihilator(self):
        """Covectors vanishing on the span (equations cutting it out)."""
        return [linalg.scale_to_int(v)
                for v in linalg.nullspace(self.generators, self.ambient_dim)]


def facet_generator_sets(geometry):
    """Generator index sets of the facets, for face-lattice recursion."""
    return [sorted(inc) for inc in geometry.incidence]


def hcone_extreme_rays(ineqs, eqs, ambient_dim):
    """Extreme rays of {x : <a,x> >= 0 for all a, <e,x> = 0 for all e}.

    The cone must be pointed (which holds for intersections of pointed
    cones); returns primitive integer vectors, deduplicated.
    """
    if eqs:
        span = linalg.nullspace(eqs, ambient_dim)
    else:
        span = [[Fraction(int(i == j)) for j in range(ambient_dim)]
                for i in range(ambient_dim)]
    m = len(span)
    if m == 0:
        return []
    proj = [[linalg.dot(a, row) for row in span] for a in ineqs]
    lineality = m - (linalg.rank(proj, m) if proj else 0)
    if lineality:
        raise NotStronglyConvex("intersection cone contains a line")
    rays = {}
    for subset in combinations(range(len(proj)), m - 1):
        sub = [proj[i] for i in subset]
        kernel = linalg.nullspace(sub, m)
        if len(kernel) != 1:
            continue
        y = kernel[0]
        for sign in (1, -1):
            cand = [sign * c for c in y]
            if all(linalg.dot(p, cand) >= 0 for p in proj):
                amb = [sum(cand[t] * Fraction(span[t][j]) for t in range(m))
                       for j in range(ambient_dim)]
                rays[linalg.scale_to_int(amb)] = None
    return list(rays)
