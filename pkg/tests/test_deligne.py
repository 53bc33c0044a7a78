import pytest

from toricweights import (NotComplete, NotSimplicial, NotSmooth,
                          boundary_strata, builtin_example, classify,
                          e1_table, euler_consistency, pair_from_dict,
                          pair_to_dict, validate_completion, validate_fan,
                          weight_table)


@pytest.fixture(scope="module")
def prz_pair():
    return builtin_example("example-prz-completion")


class TestValidateCompletion:
    def test_prz_pair_valid(self, prz_pair):
        assert not prz_pair.empty_boundary
        assert len(prz_pair.boundary_ray_indices) == 2
        assert classify(prz_pair.open_fan).is_simplicial

    def test_empty_boundary_flagged(self):
        fan = builtin_example("p2")
        pair = validate_completion(fan, [0, 1, 2])
        assert pair.empty_boundary
        assert pair.open_fan == fan

    def test_nonsmooth_ambient_rejected(self):
        cos = builtin_example("cone-over-square")
        with pytest.raises(NotSmooth):
            validate_completion(cos, [0])

    def test_noncomplete_ambient_rejected(self):
        fan = builtin_example("example-prz")
        with pytest.raises(NotComplete):
            validate_completion(fan, [0, 1])

    def test_round_trip(self, prz_pair):
        back = pair_from_dict(pair_to_dict(prz_pair))
        assert back.ambient.canonical_key() == prz_pair.ambient.canonical_key()
        assert len(back.boundary_ray_indices) == 2


class TestBoundaryStrata:
    def test_depth_one_two_lines(self, prz_pair):
        strata = boundary_strata(prz_pair, 1)
        assert len(strata) == 2
        for s in strata:
            cls = classify(s)
            assert s.rank == 1 and cls.is_complete and cls.is_smooth

    def test_depth_two_empty(self, prz_pair):
        assert boundary_strata(prz_pair, 2) == []

    def test_depth_zero_is_ambient(self, prz_pair):
        strata = boundary_strata(prz_pair, 0)
        assert strata == [prz_pair.ambient]

    def test_strata_smooth_complete_everywhere(self, prz_pair):
        for k in range(len(prz_pair.boundary_ray_indices) + 1):
            for s in boundary_strata(prz_pair, k):
                cls = classify(s)
                assert cls.is_smooth and cls.is_complete


class TestE1Table:
    def test_prz_table_exact(self, prz_pair):
        table = e1_table(prz_pair)
        dims = {key: e.dim for key, e in table.entries.items()}
        assert dims == {(0, 0): 1, (0, 2): 4, (0, 4): 1,
                        (-1, 2): 2, (-1, 4): 2}
        assert table.entry(-1, 2).tate_twist == 1
        assert table.entry(-1, 4).tate_twist == 1
        assert table.entry(-1, 4).weight == 4
        assert all(table.dim(-2, row) == 0 for row in table.rows())

    def test_empty_boundary_single_column(self):
        pair = validate_completion(builtin_example("p2"), [0, 1, 2])
        table = e1_table(pair)
        dims = {key: e.dim for key, e in table.entries.items()}
        assert dims == {(0, 0): 1, (0, 2): 1, (0, 4): 1}

    def test_punctured_line_pair(self):
        # ambient P^1, open fan the torus: two boundary points
        pair = validate_completion(builtin_example("p1"), [])
        table = e1_table(pair)
        dims = {key: e.dim for key, e in table.entries.items()}
        assert dims == {(0, 0): 1, (0, 2): 1, (-1, 2): 2}
        assert table.entry(-1, 2).tate_twist == 1


class TestEulerConsistency:
    def test_prz_weights(self, prz_pair):
        rows = {r.weight: r for r in euler_consistency(prz_pair)}
        assert (rows[0].e1_side, rows[0].koszul_side) == (1, 1)
        assert (rows[2].e1_side, rows[2].koszul_side) == (2, 2)
        assert (rows[4].e1_side, rows[4].koszul_side) == (-1, -1)
        assert all(r.ok for r in rows.values())

    def test_punctured_line(self):
        pair = validate_completion(builtin_example("p1"), [])
        rows = {r.weight: r for r in euler_consistency(pair)}
        assert (rows[0].e1_side, rows[2].e1_side) == (1, -1)
        assert all(r.ok for r in rows.values())

    def test_all_smooth_open_catalogue_pairs(self):
        pairs = [builtin_example("example-prz-completion"),
                 validate_completion(builtin_example("p1"), []),
                 validate_completion(builtin_example("p2"), [0, 1, 2]),
                 validate_completion(builtin_example("p1xp1"), [0, 1, 2]),
                 validate_completion(builtin_example("p1xp1"), [0, 1]),
                 validate_completion(builtin_example("hirzebruch(2)"), [0, 1])]
        for pair in pairs:
            assert all(r.ok for r in euler_consistency(pair))

    def test_total_euler_matches_weight_table(self, prz_pair):
        table = e1_table(prz_pair)
        wt = weight_table(prz_pair.open_fan)
        chi = sum((-1) ** k * d for (k, _), d in wt.entries.items())
        assert table.total_euler() == chi

    def test_accepts_precomputed_table(self, prz_pair):
        wt = weight_table(prz_pair.open_fan)
        rows = euler_consistency(prz_pair, table=wt)
        assert all(r.ok for r in rows)
