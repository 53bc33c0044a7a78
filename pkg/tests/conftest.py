import random

import pytest

from toricweights import builtin_example, catalogue_fans, subfan, validate_fan


def p3_fan():
    return validate_fan(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)],
                        [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])


def p1_cubed_fan():
    rays = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    cones = [[a, b, c] for a in (0, 1) for b in (2, 3) for c in (4, 5)]
    return validate_fan(3, rays, cones)


def p1xp2_fan():
    rays = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, 0, 1), (0, -1, -1)]
    cones = [[a, b, c] for a in (0, 1) for (b, c) in ((2, 3), (3, 4), (4, 2))]
    return validate_fan(3, rays, cones)


@pytest.fixture(scope="session")
def catalogue():
    return catalogue_fans()


@pytest.fixture(scope="session")
def rank3_parents():
    return [p3_fan(), p1_cubed_fan(), p1xp2_fan()]


def random_subfan(rng, fan, max_cones=None):
    pool = list(fan.cones)
    count = rng.randint(1, max_cones or len(pool))
    picked = rng.sample(pool, min(count, len(pool)))
    return subfan(fan, picked)


@pytest.fixture(scope="session")
def simplicial_subfan_corpus(catalogue, rank3_parents):
    """200 random simplicial subfans of rank <= 3, deterministic."""
    rng = random.Random(20260810)
    parents2 = [catalogue[n] for n in
                ("p2", "p1xp1", "hirzebruch(1)", "hirzebruch(2)", "example-prz")]
    fans = []
    for _ in range(140):
        fans.append(random_subfan(rng, rng.choice(parents2)))
    for _ in range(60):
        fans.append(random_subfan(rng, rng.choice(rank3_parents), max_cones=5))
    return fans


@pytest.fixture(scope="session")
def prz_fan():
    return builtin_example("example-prz")
