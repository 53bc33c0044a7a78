"""Rational polyhedral fans: validation, faces, links, star quotients.

A Fan is immutable once built.  ``validate_fan`` is the only public
constructor from raw data; every other fan-producing operation funnels
through it (or through ``subfan``, which only selects cones of an
already validated fan).
"""

from dataclasses import dataclass
from math import gcd, comb

from . import linalg
from .errors import (DuplicateRay, IncompatibleRayUniverse, NonPrimitiveRay,
                     NotAFan, NotComplete, NotSimplicial, NotStronglyConvex,
                     RedundantGenerator, UnknownCone, ValidationError, ZeroCone)
from .lattices import (apply_matrix, integer_diagonalize, lattice_index,
                       primitivize, span_saturation_basis)
from .polyhedra import ConeGeometry, hcone_extreme_rays


@dataclass(frozen=True)
class Lattice:
    """Ambient lattice Z^rank (the cocharacter lattice of the torus)."""
    rank: int


@dataclass(frozen=True)
class Cone:
    """Cone of a fan, identified by its sorted extreme-ray indices."""
    rays: tuple
    dim: int

    def __lt__(self, other):
        return (self.dim, self.rays) < (other.dim, other.rays)


ZERO_KEY = ()


class Fan:
    """Validated fan: ray universe plus all cones, closed under faces."""

    def __init__(self, lattice, rays, cone_dims, faces):
        self.lattice = lattice
        self.rays = tuple(tuple(v) for v in rays)
        self._dims = dict(cone_dims)
        self._faces = {k: frozenset(v) for k, v in faces.items()}
        self._cones = {k: Cone(k, d) for k, d in self._dims.items()}
        keys = set(self._dims)
        maximal = [k for k in keys
                   if not any(k != o and set(k) <= set(o) for o in keys)]
        self.maximal_cones = tuple(self._cones[k] for k in sorted(maximal))
        self.cones = tuple(self._cones[k] for k in sorted(keys, key=lambda k: (self._dims[k], k)))
        self._key = (self.lattice.rank, self.rays, frozenset(keys))

    @property
    def rank(self):
        return self.lattice.rank

    def has_cone(self, cone):
        return cone.rays in self._dims

    def cone_by_rays(self, ray_indices):
        key = tuple(sorted(ray_indices))
        if key not in self._cones:
            raise UnknownCone(f"no cone with ray indices {key}")
        return self._cones[key]

    def faces_of(self, cone):
        if cone.rays not in self._faces:
            raise UnknownCone(f"cone {cone.rays} does not belong to the fan")
        return tuple(sorted((self._cones[k] for k in self._faces[cone.rays])))

    def ray_vectors(self, cone):
        return [self.rays[i] for i in cone.rays]

    def dim(self):
        return max((c.dim for c in self.cones), default=0)

    def f_vector(self):
        counts = [0] * (self.rank + 1)
        for c in self.cones:
            counts[c.dim] += 1
        return tuple(counts)

    def content_key(self):
        return self._key

    def canonical_key(self):
        """Content key invariant under reordering of the ray universe."""
        order = sorted(range(len(self.rays)), key=lambda i: self.rays[i])
        pos = {old: new for new, old in enumerate(order)}
        rays = tuple(self.rays[i] for i in order)
        keys = frozenset(tuple(sorted(pos[i] for i in k)) for k in self._dims)
        return (self.rank, rays, keys)

    def __eq__(self, other):
        return isinstance(other, Fan) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return (f"Fan(rank={self.rank}, rays={len(self.rays)}, "
                f"cones={len(self.cones)})")


def _validate_rays(rank, rays):
    out = []
    seen = {}
    for i, v in enumerate(rays):
        v = tuple(v)
        if len(v) != rank or not all(isinstance(x, int) for x in v):
            raise ValidationError(f"ray {i} is not an integer vector of length {rank}")
        g = 0
        for x in v:
            g = gcd(g, x)
        if g != 1:
            raise NonPrimitiveRay(f"ray {i} = {v} has coordinate gcd {g}")
        if v in seen:
            raise DuplicateRay(f"rays {seen[v]} and {i} are both {v}")
        seen[v] = i
        out.append(v)
    return tuple(out)


def _close_faces(key, geometries, rays, rank, faces, dims):
    if key in faces:
        return
    geo = geometries.get(key)
    if geo is None:
        geo = ConeGeometry([rays[i] for i in key], rank)
        geometries[key] = geo
    dims[key] = geo.dim
    collected = {key}
    for inc in geo.incidence:
        sub = tuple(sorted(key[i] for i in inc))
        _close_faces(sub, geometries, rays, rank, faces, dims)
        collected |= faces[sub]
    if not key:
        dims[key] = 0
    faces[key] = collected


def _check_pair(rank, rays, ray_index, key_a, geo_a, key_b, geo_b, faces):
    ineqs = list(geo_a.facets) + list(geo_b.facets)
    eqs = geo_a.annihilator() + geo_b.annihilator()
    try:
        vecs = hcone_extreme_rays(ineqs, eqs, rank)
    except NotStronglyConvex as exc:
        raise NotAFan(f"cones {key_a} and {key_b} intersect badly") from exc
    idx = []
    for v in vecs:
        if v not in ray_index:
            raise NotAFan(
                f"cones {key_a} and {key_b} meet in a cone with ray {v} "
                f"that is not a ray of either")
        idx.append(ray_index[v])
    meet = tuple(sorted(idx))
    if meet not in faces[key_a] or meet not in faces[key_b]:
        raise NotAFan(
            f"intersection {meet} of cones {key_a} and {key_b} is not a "
            f"common face")


def validate_fan(rank, rays, maximal_cones):
    """Build a Fan from a ray list and maximal-cone index sets.

    The full face closure is computed; the listed generators of every cone
    must be exactly its extreme rays, and all pairwise intersections must
    be common faces.  Errors: NonPrimitiveRay, DuplicateRay,
    RedundantGenerator, NotStronglyConvex, NotAFan.
    """
    if rank < 0:
        raise ValidationError("rank must be nonnegative")
    rays = _validate_rays(rank, rays)
    ray_index = {v: i for i, v in enumerate(rays)}

    keys = []
    for cone in maximal_cones:
        idx = list(cone)
        if len(set(idx)) != len(idx):
            raise RedundantGenerator(f"cone {cone} lists a ray twice")
        for i in idx:
            if not (isinstance(i, int) and 0 <= i < len(rays)):
                raise ValidationError(f"cone {cone} has invalid ray index {i}")
        key = tuple(sorted(idx))
        if key not in keys:
            keys.append(key)

    geometries = {}
    for key in keys:
        geo = ConeGeometry([rays[i] for i in key], rank)
        geometries[key] = geo
        if key:
            if not geo.is_pointed():
                raise NotStronglyConvex(f"cone {key} contains a line")
            flags = geo.extreme_flags()
            for local, ok in enumerate(flags):
                if not ok:
                    raise RedundantGenerator(
                        f"ray {key[local]} is not an extreme ray of cone {key}")

    faces, dims = {}, {}
    _close_faces(ZERO_KEY, geometries, rays, rank, faces, dims)
    for key in keys:
        _close_faces(key, geometries, rays, rank, faces, dims)

    for a in range(len(keys)):
        for b in range(a + 1, len(keys)):
            _check_pair(rank, rays, ray_index, keys[a], geometries[keys[a]],
                        keys[b], geometries[keys[b]], faces)

    all_faces = {k: faces[k] for k in dims}
    return Fan(Lattice(rank), rays, dims, all_faces)


def face_lattice(fan, cone):
    """All faces of a cone of the fan, sorted by dimension."""
    return fan.faces_of(cone)


def subfan(fan, cones):
    """The subfan generated by the given cones of ``fan`` (face closure)."""
    keys = {ZERO_KEY}
    for c in cones:
        if not fan.has_cone(c):
            raise UnknownCone(f"cone {c.rays} does not belong to the fan")
        keys |= fan._faces[c.rays]
    dims = {k: fan._dims[k] for k in keys}
    faces = {k: fan._faces[k] for k in keys}
    return Fan(fan.lattice, fan.rays, dims, faces)


def subfan_union(f1, f2):
    """Union of two subfans of a common fan (checked pairwise)."""
    if f1.rays != f2.rays or f1.rank != f2.rank:
        raise IncompatibleRayUniverse("fans do not share a ray universe")
    keys = set(f1._dims) | set(f2._dims)
    dims = {}
    faces = {}
    for k in keys:
        src = f1 if k in f1._dims else f2
        dims[k] = src._dims[k]
        faces[k] = src._faces[k]
    ray_index = {v: i for i, v in enumerate(f1.rays)}
    maximal = [k for k in keys if not any(k != o and set(k) <= set(o) for o in keys)]
    geos = {k: ConeGeometry([f1.rays[i] for i in k], f1.rank) for k in maximal}
    for a in range(len(maximal)):
        for b in range(a + 1, len(maximal)):
            _check_pair(f1.rank, f1.rays, ray_index, maximal[a], geos[maximal[a]],
                        maximal[b], geos[maximal[b]], faces)
    return Fan(f1.lattice, f1.rays, dims, faces)


def subfan_intersection(f1, f2):
    """Intersection of two subfans of a common fan, as cone sets."""
    if f1.rays != f2.rays or f1.rank != f2.rank:
        raise IncompatibleRayUniverse("fans do not share a ray universe")
    keys = set(f1._dims) & set(f2._dims)
    dims = {k: f1._dims[k] for k in keys}
    faces = {k: f1._faces[k] & keys for k in keys}
    return Fan(f1.lattice, f1.rays, dims, faces)


def subfan_ops(f1, f2):
    return {"union": subfan_union(f1, f2), "intersection": subfan_intersection(f1, f2)}


@dataclass(frozen=True)
class Classification:
    is_simplicial: bool
    is_smooth: bool
    is_complete: bool
    f_vector: tuple


def classify(fan):
    """Simpliciality, smoothness, completeness and the f-vector.

    Completeness is decided combinatorially: there is at least one
    top-dimensional cone, every (n-1)-cone borders exactly two of them,
    and the top-dimensional cones are connected through shared facets.
    """
    simplicial = all(len(c.rays) == c.dim for c in fan.cones)
    smooth = simplicial and all(
        lattice_index(fan.ray_vectors(c), fan.rank) == 1
        for c in fan.cones if c.dim > 0)
    n = fan.rank
    if n == 0:
        complete = True
    else:
        top = [c for c in fan.cones if c.dim == n]
        if not top:
            complete = False
        else:
            ridge_ok = True
            adjacency = {c.rays: set() for c in top}
            for r in (c for c in fan.cones if c.dim == n - 1):
                owners = [c for c in top if set(r.rays) <= set(c.rays)]
                if len(owners) != 2:
                    ridge_ok = False
                    break
                adjacency[owners[0].rays].add(owners[1].rays)
                adjacency[owners[1].rays].add(owners[0].rays)
            complete = ridge_ok
            if complete:
                seen = {top[0].rays}
                stack = [top[0].rays]
                while stack:
                    for nb in adjacency[stack.pop()]:
                        if nb not in seen:
                            seen.add(nb)
                            stack.append(nb)
                complete = len(seen) == len(top)
    return Classification(simplicial, smooth, complete, fan.f_vector())


def h_vector(fan):
    """h-vector of a complete simplicial fan from its f-vector.

    The entries are the even Betti numbers of the associated variety
    (Jurkiewicz-Danilov).
    """
    cls = classify(fan)
    if not cls.is_simplicial:
        raise NotSimplicial("h-vector needs a simplicial fan")
    if not cls.is_complete:
        raise NotComplete("h-vector needs a complete fan")
    n = fan.rank
    f = fan.f_vector()
    return tuple(sum((-1) ** (i - j) * comb(n - j, i - j) * f[j]
                     for j in range(i + 1)) for i in range(n + 1))


def link_fan(fan, cone):
    """Complete fan of dimension dim(cone)-1 made of the images of the
    proper faces of ``cone`` under projection along an interior vector.

    The interior vector is the sum of the primitive ray generators; the
    quotient lattice is (N meet span cone)/(N meet its line), computed by
    integer normal form.  A ray maps to the rank-0 fan (a point's fan).
    """
    if not fan.has_cone(cone):
        raise UnknownCone(f"cone {cone.rays} does not belong to the fan")
    if cone.dim == 0:
        raise ZeroCone("the link of the zero cone is undefined")
    if cone.dim == 1:
        return validate_fan(0, [], [])
    d = cone.dim
    vectors = fan.ray_vectors(cone)
    basis, tinv, r = span_saturation_basis(vectors, fan.rank)
    assert r == d
    local = {i: apply_matrix(fan.rays[i], tinv)[:d] for i in cone.rays}
    alpha = primitivize(tuple(sum(col) for col in zip(*local.values())))
    _, _, t2inv, r2 = integer_diagonalize([alpha], d)
    assert r2 == 1
    image = {i: primitivize(apply_matrix(local[i], t2inv)[1:]) for i in cone.rays}
    new_rays = []
    new_index = {}
    for i in cone.rays:
        v = image[i]
        if v not in new_index:
            new_index[v] = len(new_rays)
            new_rays.append(v)
    facets = [f for f in fan.faces_of(cone) if f.dim == d - 1]
    max_cones = [sorted({new_index[image[i]] for i in f.rays}) for f in facets]
    return validate_fan(d - 1, new_rays, max_cones)


def star_quotient_fan(fan, cone):
    """Fan of the orbit closure: images in N/(N meet span cone) of the
    cones containing ``cone``; extreme rays of images are recomputed."""
    if not fan.has_cone(cone):
        raise UnknownCone(f"cone {cone.rays} does not belong to the fan")
    if cone.dim == 0:
        return fan
    vectors = fan.ray_vectors(cone)
    _, tinv, r = span_saturation_basis(vectors, fan.rank)
    n_new = fan.rank - r
    star_max = [c for c in fan.maximal_cones if set(cone.rays) <= set(c.rays)]
    new_rays = []
    new_index = {}
    max_cones = []
    for c in star_max:
        gens = [primitivize(apply_matrix(fan.rays[i], tinv)[r:])
                for i in c.rays if i not in cone.rays]
        gens = list(dict.fromkeys(gens))
        if gens:
            geo = ConeGeometry(gens, n_new)
            flags = geo.extreme_flags()
            gens = [g for g, ok in zip(gens, flags) if ok]
        cone_idx = []
        for g in gens:
            if g not in new_index:
                new_index[g] = len(new_rays)
                new_rays.append(g)
            cone_idx.append(new_index[g])
        max_cones.append(sorted(cone_idx))
    return validate_fan(n_new, new_rays, max_cones)


def star_subdivision(fan, cone):
    """Subdivide a simplicial cone at the sum of its primitive rays."""
    if not fan.has_cone(cone):
        raise UnknownCone(f"cone {cone.rays} does not belong to the fan")
    if cone.dim == 0:
        raise ZeroCone("cannot subdivide the zero cone")
    if len(cone.rays) != cone.dim:
        raise NotSimplicial("star subdivision requires a simplicial cone")
    rho = primitivize(tuple(sum(col) for col in zip(*fan.ray_vectors(cone))))
    rays = list(fan.rays) + [rho]
    rho_idx = len(fan.rays)
    max_cones = []
    for c in fan.maximal_cones:
        if set(cone.rays) <= set(c.rays):
            for r in cone.rays:
                max_cones.append(sorted((set(c.rays) - {r}) | {rho_idx}))
        else:
            max_cones.append(list(c.rays))
    return validate_fan(fan.rank, rays, max_cones)


def fan_to_dict(fan):
    """JSON-ready description: rank, ray universe, maximal cones."""
    return {
        "rank": fan.rank,
        "rays": [list(v) for v in fan.rays],
        "maximal_cones": [list(c.rays) for c in fan.maximal_cones],
    }


def fan_from_dict(data):
    """Validate a fan read from its JSON form (rejects malformed input)."""
    if not isinstance(data, dict):
        raise ValidationError("fan file must contain a JSON object")
    for field in ("rank", "rays", "maximal_cones"):
        if field not in data:
            raise ValidationError(f"fan object is missing the field {field!r}")
    rank = data["rank"]
    if not isinstance(rank, int):
        raise ValidationError("rank must be an integer")
    rays = data["rays"]
    cones = data["maximal_cones"]
    if not isinstance(rays, list) or not all(isinstance(v, list) for v in rays):
        raise ValidationError("rays must be a list of integer vectors")
    if not isinstance(cones, list) or not all(isinstance(c, list) for c in cones):
        raise ValidationError("maximal_cones must be a list of index lists")
    return validate_fan(rank, [tuple(v) for v in rays], cones)
