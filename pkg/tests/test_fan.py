import random

import pytest

from toricweights import (DuplicateRay, IncompatibleRayUniverse, NonPrimitiveRay,
                          NotAFan, NotStronglyConvex, RedundantGenerator,
                          UnknownCone, UnknownExample, ZeroCone, builtin_example,
                          classify, face_lattice, fan_from_dict, fan_to_dict,
                          h_vector, link_fan, star_quotient_fan,
                          star_subdivision, subfan, subfan_intersection,
                          subfan_ops, subfan_union, validate_fan)
from conftest import p3_fan, random_subfan


def quadrant(rays, cone):
    return validate_fan(2, rays, [cone])


class TestValidation:
    def test_p2_valid(self):
        fan = validate_fan(2, [(1, 0), (0, 1), (-1, -1)], [[0, 1], [1, 2], [2, 0]])
        cls = classify(fan)
        assert cls.is_smooth and cls.is_complete and cls.is_simplicial
        assert cls.f_vector == (1, 3, 3)

    def test_two_quarters_valid_noncomplete(self):
        fan = validate_fan(2, [(1, 0), (0, 1), (-1, 0), (0, -1)], [[0, 1], [2, 3]])
        cls = classify(fan)
        assert cls.is_smooth and not cls.is_complete
        assert cls.f_vector == (1, 4, 2)

    def test_overlapping_cones_rejected(self):
        with pytest.raises(NotAFan):
            validate_fan(2, [(1, 0), (1, 2), (2, 1)], [[0, 1], [0, 2]])

    def test_nonprimitive_ray(self):
        with pytest.raises(NonPrimitiveRay):
            validate_fan(2, [(2, 4)], [[0]])

    def test_zero_ray(self):
        with pytest.raises(NonPrimitiveRay):
            validate_fan(2, [(0, 0)], [[0]])

    def test_duplicate_ray(self):
        with pytest.raises(DuplicateRay):
            validate_fan(2, [(1, 0), (1, 0)], [[0], [1]])

    def test_redundant_generator(self):
        with pytest.raises(RedundantGenerator):
            validate_fan(2, [(1, 0), (0, 1), (1, 1)], [[0, 1, 2]])

    def test_repeated_index_in_cone(self):
        with pytest.raises(RedundantGenerator):
            validate_fan(2, [(1, 0), (0, 1)], [[0, 0, 1]])

    def test_not_strongly_convex(self):
        with pytest.raises(NotStronglyConvex):
            validate_fan(2, [(1, 0), (-1, 0)], [[0, 1]])

    def test_half_plane_not_strongly_convex(self):
        with pytest.raises(NotStronglyConvex):
            validate_fan(2, [(1, 0), (-1, 0), (0, 1)], [[0, 1, 2]])


class TestFaceLattice:
    def test_smooth_two_cone(self):
        fan = quadrant([(1, 0), (0, 1)], [0, 1])
        faces = face_lattice(fan, fan.cone_by_rays((0, 1)))
        assert [f.rays for f in faces] == [(), (0,), (1,), (0, 1)]

    def test_zero_cone(self):
        fan = builtin_example("torus(2)")
        faces = face_lattice(fan, fan.cone_by_rays(()))
        assert [f.rays for f in faces] == [()]

    def test_cone_over_square(self):
        fan = builtin_example("cone-over-square")
        faces = face_lattice(fan, fan.cone_by_rays((0, 1, 2, 3)))
        by_dim = {}
        for f in faces:
            by_dim.setdefault(f.dim, []).append(f.rays)
        assert len(by_dim[0]) == 1
        assert len(by_dim[1]) == 4
        assert sorted(by_dim[2]) == [(0, 2), (0, 3), (1, 2), (1, 3)]
        assert by_dim[3] == [(0, 1, 2, 3)]

    def test_unknown_cone(self):
        fan = builtin_example("p2")
        with pytest.raises(UnknownCone):
            fan.cone_by_rays((0, 7))


class TestLinkFan:
    def test_smooth_two_cone_gives_p1(self):
        fan = quadrant([(1, 0), (0, 1)], [0, 1])
        link = link_fan(fan, fan.cone_by_rays((0, 1)))
        assert link.rank == 1
        assert sorted(link.rays) == [(-1,), (1,)]
        assert classify(link).is_complete

    def test_cone_over_square_link(self):
        fan = builtin_example("cone-over-square")
        link = link_fan(fan, fan.cone_by_rays((0, 1, 2, 3)))
        cls = classify(link)
        assert link.rank == 2 and cls.is_complete
        assert cls.f_vector == (1, 4, 4)
        # combinatorially a square: every ray lies in exactly two 2-cones
        for ray in (c for c in link.cones if c.dim == 1):
            owners = [c for c in link.maximal_cones if set(ray.rays) <= set(c.rays)]
            assert len(owners) == 2

    def test_ray_gives_point_fan(self):
        fan = builtin_example("p2")
        link = link_fan(fan, fan.cone_by_rays((0,)))
        assert link.rank == 0 and link.f_vector() == (1,)

    def test_zero_cone_rejected(self):
        fan = builtin_example("p2")
        with pytest.raises(ZeroCone):
            link_fan(fan, fan.cone_by_rays(()))

    def test_links_always_complete(self, catalogue):
        for fan in catalogue.values():
            for cone in fan.cones:
                if cone.dim == 0:
                    continue
                link = link_fan(fan, cone)
                assert classify(link).is_complete, (fan, cone)


class TestStarQuotient:
    def test_zero_cone_identity(self):
        fan = builtin_example("p2")
        assert star_quotient_fan(fan, fan.cone_by_rays(())) is fan

    def test_maximal_cone_of_complete_fan(self):
        fan = builtin_example("p2")
        res = star_quotient_fan(fan, fan.cone_by_rays((0, 1)))
        assert res.rank == 0 and classify(res).is_complete

    def test_exceptional_ray_of_blowup(self):
        pair = builtin_example("example-prz-completion")
        amb = pair.ambient
        exceptional = pair.boundary_ray_indices[0]
        res = star_quotient_fan(amb, amb.cone_by_rays((exceptional,)))
        assert res.rank == 1 and classify(res).is_complete
        assert res.f_vector() == (1, 2)

    def test_quotient_composes_up_to_isomorphism(self):
        # compare iso-invariants of star(tau) and star of the image of tau
        fan = p3_fan()
        tau = fan.cone_by_rays((0, 1))
        direct = star_quotient_fan(fan, tau)
        once = star_quotient_fan(fan, fan.cone_by_rays((0,)))
        # image of ray 1 inside the quotient: the unique ray of the image cone
        candidates = [c for c in once.cones if c.dim == 1]
        matches = [c for c in candidates
                   if classify(star_quotient_fan(once, c)).f_vector
                   == classify(direct).f_vector]
        assert matches, "no ray of the quotient reproduces the direct star"


class TestClassify:
    def test_cone_over_square(self):
        cls = classify(builtin_example("cone-over-square"))
        assert not cls.is_simplicial and not cls.is_complete and not cls.is_smooth

    def test_two_quarters(self):
        cls = classify(builtin_example("example-prz"))
        assert cls.is_smooth and not cls.is_complete

    def test_singular_but_simplicial(self):
        fan = validate_fan(2, [(1, 0), (1, 2)], [[0, 1]])
        cls = classify(fan)
        assert cls.is_simplicial and not cls.is_smooth

    def test_rank2_complete_ray_count(self, catalogue):
        for fan in catalogue.values():
            cls = classify(fan)
            if fan.rank == 2 and cls.is_complete:
                assert cls.f_vector[1] == cls.f_vector[2]

    def test_smooth_fans_unimodular(self, catalogue):
        from toricweights.lattices import lattice_index
        for fan in catalogue.values():
            if classify(fan).is_smooth:
                for cone in fan.cones:
                    if cone.dim:
                        assert lattice_index(fan.ray_vectors(cone), fan.rank) == 1


class TestSubfanOps:
    def test_two_quadrants_union(self, prz_fan):
        f1 = subfan(prz_fan, [prz_fan.cone_by_rays((0, 1))])
        f2 = subfan(prz_fan, [prz_fan.cone_by_rays((2, 3))])
        ops = subfan_ops(f1, f2)
        assert ops["union"] == prz_fan
        assert [c.rays for c in ops["intersection"].cones] == [()]

    def test_union_intersection_idempotent(self, prz_fan):
        assert subfan_union(prz_fan, prz_fan) == prz_fan
        assert subfan_intersection(prz_fan, prz_fan) == prz_fan

    def test_adjacent_p2_cones(self):
        fan = builtin_example("p2")
        f1 = subfan(fan, [fan.cone_by_rays((0, 1))])
        f2 = subfan(fan, [fan.cone_by_rays((1, 2))])
        meet = subfan_intersection(f1, f2)
        assert {c.rays for c in meet.cones} == {(), (1,)}

    def test_incompatible_universe(self):
        f1 = builtin_example("p2")
        f2 = builtin_example("p1xp1")
        with pytest.raises(IncompatibleRayUniverse):
            subfan_union(f1, f2)


class TestCatalogue:
    def test_example_prz_structure(self, prz_fan):
        assert prz_fan.rays == ((1, 0), (0, 1), (-1, 0), (0, -1))
        assert [c.rays for c in prz_fan.maximal_cones] == [(0, 1), (2, 3)]

    def test_torus_fan(self):
        fan = builtin_example("torus(2)")
        assert fan.rank == 2 and [c.rays for c in fan.cones] == [()]

    def test_cone_over_square_valid(self):
        fan = builtin_example("cone-over-square")
        assert fan.f_vector() == (1, 4, 4, 1)

    def test_hirzebruch(self):
        fan = builtin_example("hirzebruch(3)")
        cls = classify(fan)
        assert cls.is_smooth and cls.is_complete and cls.f_vector == (1, 4, 4)

    def test_unknown_example(self):
        with pytest.raises(UnknownExample):
            builtin_example("p7")

    def test_completion_pair(self):
        pair = builtin_example("example-prz-completion")
        assert len(pair.ambient.rays) == 6
        assert classify(pair.ambient).is_smooth
        assert classify(pair.ambient).is_complete
        assert {c.rays for c in pair.open_fan.cones} == {
            (), (0,), (1,), (2,), (3,), (0, 1), (2, 3)}
        assert len(pair.boundary_ray_indices) == 2

    def test_round_trip_serialization(self, catalogue):
        for name, fan in catalogue.items():
            back = fan_from_dict(fan_to_dict(fan))
            assert back.canonical_key() == fan.canonical_key(), name


class TestStarSubdivision:
    def test_preserves_smooth_complete(self):
        fan = builtin_example("p1xp1")
        sub = star_subdivision(fan, fan.cone_by_rays((1, 2)))
        cls = classify(sub)
        assert cls.is_smooth and cls.is_complete
        assert len(sub.rays) == 5

    def test_builds_prz_ambient(self):
        fan = builtin_example("p1xp1")
        fan = star_subdivision(fan, fan.cone_by_rays((1, 2)))
        fan = star_subdivision(fan, fan.cone_by_rays((0, 3)))
        pair = builtin_example("example-prz-completion")
        assert fan.canonical_key() == pair.ambient.canonical_key()


class TestHVector:
    def test_p2(self):
        assert h_vector(builtin_example("p2")) == (1, 1, 1)

    def test_p1xp1(self):
        assert h_vector(builtin_example("p1xp1")) == (1, 2, 1)

    def test_blown_up(self):
        pair = builtin_example("example-prz-completion")
        assert h_vector(pair.ambient) == (1, 4, 1)


def test_random_subfans_valid(simplicial_subfan_corpus):
    for fan in simplicial_subfan_corpus:
        assert classify(fan).is_simplicial
        assert fan.cones[0].rays == ()


def test_subfan_of_random_selection_closed(catalogue):
    rng = random.Random(5)
    fan = catalogue["p1xp1"]
    for _ in range(20):
        sf = random_subfan(rng, fan)
        for cone in sf.cones:
            for face in face_lattice(sf, cone):
                assert sf.has_cone(face)
