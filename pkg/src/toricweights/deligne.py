"""First-page dimension table of the boundary spectral sequence.

For a smooth fan with a user-supplied smooth complete compactification
whose boundary is a union of toric divisors, the first page has, in
column -k and row l, the (l-2k)-th Betti number of the disjoint k-fold
boundary intersections, carrying a Tate twist by k; the total weight
along row l is l.  Betti numbers of the smooth complete strata come from
their h-vectors, a route independent of the Koszul computation, so the
per-weight Euler characteristics of the two tables can be compared.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import NotComplete, NotSimplicial, NotSmooth, ValidationError
from .fan import Fan, classify, fan_from_dict, fan_to_dict, h_vector, subfan, star_quotient_fan
from .koszul import weight_table


@dataclass(frozen=True)
class CompletionPair:
    """Smooth complete fan plus the ray set of an open subfan.

    The open subfan consists of the cones avoiding every boundary ray.
    ``empty_boundary`` flags the degenerate case of no boundary at all.
    """
    ambient: Fan
    open_ray_indices: tuple
    boundary_ray_indices: tuple
    open_fan: Fan

    @property
    def empty_boundary(self):
        return not self.boundary_ray_indices


def validate_completion(ambient, open_rays):
    """Check the ambient fan is smooth and complete and derive the pair."""
    cls = classify(ambient)
    if not cls.is_smooth:
        raise NotSmooth("ambient fan must be smooth")
    if not cls.is_complete:
        raise NotComplete("ambient fan must be complete")
    open_set = set(open_rays)
    for i in open_set:
        if not (isinstance(i, int) and 0 <= i < len(ambient.rays)):
            raise ValidationError(f"open ray index {i} out of range")
    boundary = tuple(i for i in range(len(ambient.rays)) if i not in open_set)
    open_cones = [c for c in ambient.cones
                  if not (set(c.rays) & set(boundary))]
    open_fan = subfan(ambient, open_cones)
    return CompletionPair(ambient, tuple(sorted(open_set)), boundary, open_fan)


def boundary_strata(pair, k):
    """Star-quotient fans of the cones spanned by k boundary rays.

    k = 0 returns the ambient fan itself; the list may be empty when no
    k boundary divisors meet.
    """
    if k < 0 or k > len(pair.boundary_ray_indices):
        raise ValidationError(
            f"stratum depth {k} outside 0..{len(pair.boundary_ray_indices)}")
    out = []
    for subset in combinations(pair.boundary_ray_indices, k):
        key = tuple(sorted(subset))
        if key in pair.ambient._dims:
            out.append(star_quotient_fan(pair.ambient, pair.ambient.cone_by_rays(key)))
    return out


def _stratum_betti(fan):
    """Betti numbers of a smooth complete fan's variety, by h-vector."""
    h = h_vector(fan)
    out = [0] * (2 * fan.rank + 1)
    for i, hi in enumerate(h):
        out[2 * i] = hi
    return out


@dataclass(frozen=True)
class E1Entry:
    dim: int
    tate_twist: int
    weight: int


class E1Table:
    """Dimensions of the first page, indexed by (column, row)."""

    def __init__(self, rank, n_boundary, entries):
        self.rank = rank
        self.n_boundary = n_boundary
        self.entries = dict(entries)

    def entry(self, col, row):
        return self.entries.get((col, row))

    def dim(self, col, row):
        e = self.entries.get((col, row))
        return e.dim if e else 0

    def rows(self):
        return range(0, 2 * self.rank + 1)

    def cols(self):
        return range(-self.n_boundary, 1)

    def total_euler(self):
        return sum((-1) ** (col + row) * e.dim
                   for (col, row), e in self.entries.items())

    def __repr__(self):
        cells = {key: e.dim for key, e in sorted(self.entries.items())}
        return f"E1Table({cells})"


def e1_table(pair):
    """Assemble the first-page table of a completion pair."""
    n = pair.ambient.rank
    entries = {}
    for k in range(0, len(pair.boundary_ray_indices) + 1):
        strata = boundary_strata(pair, k)
        if not strata:
            continue
        betti = [0] * (2 * (n - k) + 1)
        for stratum in strata:
            for j, b in enumerate(_stratum_betti(stratum)):
                betti[j] += b
        for j, b in enumerate(betti):
            if b:
                row = j + 2 * k
                entries[(-k, row)] = E1Entry(dim=b, tate_twist=k, weight=row)
    return E1Table(n, len(pair.boundary_ray_indices), entries)


@dataclass(frozen=True)
class WeightComparison:
    weight: int
    e1_side: int
    koszul_side: int

    @property
    def ok(self):
        return self.e1_side == self.koszul_side


def euler_consistency(pair, table=None):
    """Per-weight Euler characteristics of the first page against the
    weight table of the open fan (which must be simplicial).

    Returns one comparison per weight 2w, w = 0..rank; all are expected
    to agree exactly.
    """
    if not classify(pair.open_fan).is_simplicial:
        raise NotSimplicial("weight table needs a simplicial open fan")
    if table is None:
        table = weight_table(pair.open_fan)
    e1 = e1_table(pair)
    n = pair.ambient.rank
    out = []
    for w in range(n + 1):
        lhs = sum((-1) ** k * e1.dim(-k, 2 * w)
                  for k in range(len(pair.boundary_ray_indices) + 1))
        rhs = sum((-1) ** k * table.entry(k, w) for k in range(2 * n + 1))
        out.append(WeightComparison(2 * w, lhs, rhs))
    return out


def pair_to_dict(pair):
    return {"ambient": fan_to_dict(pair.ambient),
            "open_rays": list(pair.open_ray_indices)}


def pair_from_dict(data):
    if not isinstance(data, dict) or "ambient" not in data or "open_rays" not in data:
        raise ValidationError(
            "completion file must be an object with 'ambient' and 'open_rays'")
    ambient = fan_from_dict(data["ambient"])
    open_rays = data["open_rays"]
    if not isinstance(open_rays, list):
        raise ValidationError("open_rays must be a list of ray indices")
    return validate_completion(ambient, open_rays)
