import random
from math import comb

import pytest

from toricweights import (NotSimplicial, builtin_example, build_koszul,
                          classify, h_vector, ip_cld, pure_part, twisted_dims,
                          validate_fan, weight_table)
from toricweights.poincare import QPolynomial
from conftest import p3_fan, p1_cubed_fan, p1xp2_fan


class TestBuildKoszul:
    def test_torus_fan_terms(self):
        fan = builtin_example("torus(2)")
        for l in range(0, 3):
            complex_ = build_koszul(fan, l)
            nonzero = {k: d for k, (_, _, d) in complex_.terms.items() if d}
            # only the degree-0 functions survive, paired with the wedge factor
            assert nonzero == {l: comb(2, l)}
            for k in range(complex_.k_min, complex_.k_max):
                assert complex_.differential(k).is_zero()

    def test_two_quadrants_weight_one(self, prz_fan):
        complex_ = build_koszul(prz_fan, 1)
        assert complex_.term_dim(1) == 2
        assert complex_.term_dim(2) == 4
        assert complex_.differential(1).rank() == 2

    def test_two_quadrants_weight_two(self, prz_fan):
        complex_ = build_koszul(prz_fan, 2)
        assert [complex_.term_dim(k) for k in (2, 3, 4)] == [1, 8, 6]

    def test_differential_squares_to_zero(self, prz_fan):
        for l in range(0, 5):
            complex_ = build_koszul(prz_fan, l)
            for k in range(complex_.k_min, complex_.k_max - 1):
                d1 = complex_.differential(k)
                d2 = complex_.differential(k + 1)
                assert (d2 @ d1).is_zero()

    def test_rejects_nonsimplicial(self):
        with pytest.raises(NotSimplicial):
            build_koszul(builtin_example("cone-over-square"), 1)


class TestWeightTable:
    def test_two_quadrants(self, prz_fan):
        table = weight_table(prz_fan)
        assert table.entries == {(0, 0): 1, (2, 1): 2, (3, 2): 1}
        assert table.betti_list() == [1, 0, 2, 1, 0]

    def test_torus_rank_two(self):
        table = weight_table(builtin_example("torus(2)"))
        assert table.entries == {(0, 0): 1, (1, 1): 2, (2, 2): 1}

    def test_c2_minus_origin(self):
        table = weight_table(builtin_example("c2-minus-origin"))
        assert table.entries == {(0, 0): 1, (3, 2): 1}
        assert table.betti_list() == [1, 0, 0, 1, 0]

    def test_complete_smooth_catalogue(self, catalogue):
        known = {
            "p1": [1, 0, 1],
            "p2": [1, 0, 1, 0, 1],
            "p1xp1": [1, 0, 2, 0, 1],
            "hirzebruch(1)": [1, 0, 2, 0, 1],
            "hirzebruch(2)": [1, 0, 2, 0, 1],
        }
        for name, betti in known.items():
            assert weight_table(catalogue[name]).betti_list() == betti, name

    def test_affine_plane_trivial(self):
        table = weight_table(builtin_example("affine-plane"))
        assert table.entries == {(0, 0): 1}


class TestPurePart:
    def test_two_quadrants(self, prz_fan):
        assert pure_part(prz_fan, 2) == 2
        assert pure_part(prz_fan, 3) == 0
        assert pure_part(prz_fan, 0) == 1
        assert pure_part(prz_fan, 4) == 0

    def test_p2(self):
        fan = builtin_example("p2")
        assert [pure_part(fan, k) for k in (0, 2, 4)] == [1, 1, 1]

    def test_matches_weight_table_diagonal(self, catalogue):
        for name, fan in catalogue.items():
            if not classify(fan).is_simplicial:
                continue
            table = weight_table(fan)
            for k in range(0, 2 * fan.rank + 1, 2):
                assert pure_part(fan, k) == table.entry(k, k // 2), (name, k)


class TestTwistedDims:
    def test_eigenvalues(self, prz_fan):
        rows = twisted_dims(weight_table(prz_fan), 2)
        data = {(r.k, r.l): (r.dim, r.eigenvalue) for r in rows}
        assert data == {(0, 0): (1, 1), (2, 1): (2, 2), (3, 2): (1, 4)}

    def test_trivial_eigenvalue(self, prz_fan):
        rows = twisted_dims(weight_table(prz_fan), 5)
        assert rows[0].eigenvalue == 1          # entry (0, 0), any p
        assert rows[-1].eigenvalue == 25        # entry (3, 2), p = 5


class TestStructuralIdentities:
    def test_complete_simplicial_diagonal_is_h_vector(self, catalogue):
        extra = {"p3": p3_fan(), "p1cubed": p1_cubed_fan(), "p1xp2": p1xp2_fan()}
        fans = {**{n: f for n, f in catalogue.items()}, **extra}
        for name, fan in fans.items():
            cls = classify(fan)
            if not (cls.is_simplicial and cls.is_complete):
                continue
            table = weight_table(fan)
            h = h_vector(fan)
            for i, hi in enumerate(h):
                assert table.entry(2 * i, i) == hi, (name, i)
            # purity: everything sits on the diagonal
            assert all(k == 2 * l for (k, l) in table.entries), name

    def test_purity_iff_odd_vanishing(self, catalogue, simplicial_subfan_corpus):
        rng = random.Random(71)
        fans = [f for f in catalogue.values() if classify(f).is_simplicial]
        fans += rng.sample(simplicial_subfan_corpus, 30)
        for fan in fans:
            table = weight_table(fan)
            odd_vanish = all(table.betti(k) == 0
                             for k in range(1, 2 * fan.rank + 1, 2))
            diagonal = all(k == 2 * l for (k, l) in table.entries)
            assert odd_vanish == diagonal

    def test_euler_identity_against_recursion(self, catalogue):
        for name, fan in catalogue.items():
            if not classify(fan).is_simplicial:
                continue
            table = weight_table(fan)
            coeffs = {}
            for (k, l), d in table.entries.items():
                coeffs[l] = coeffs.get(l, 0) + (-1) ** k * d
            assert QPolynomial(coeffs) == ip_cld(fan), name

    def test_vanishing_range_small_exact(self, catalogue):
        rng = random.Random(401)
        from conftest import random_subfan
        parents = [catalogue["p1xp1"], catalogue["p2"], catalogue["example-prz"]]
        for _ in range(20):
            fan = random_subfan(rng, rng.choice(parents))
            n = fan.rank
            for l in range(0, 2 * n + 1):
                complex_ = build_koszul(fan, l)
                for k in range(complex_.k_min, complex_.k_max + 1):
                    h = complex_.homology_dim(k)
                    in_range = (k + 1) // 2 <= l <= k and k <= 2 * n
                    if not in_range:
                        assert h == 0, (l, k)
