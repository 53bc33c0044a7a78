"""Built-in fan catalogue, addressable by name (CLI scheme ``example:<name>``).

Names:
    p1, p2, p1xp1, hirzebruch(a), affine-plane, torus(n),
    example-prz, example-prz-completion, c2-minus-origin, cone-over-square

``example-prz`` is the fan of two opposite quadrants in the plane, whose
variety is P^1 x P^1 with the two torus-fixed points (0,infinity) and
(infinity,0) removed; ``example-prz-completion`` pairs it with the smooth
compactification obtained by blowing up the two removed points.
"""

import re

from .errors import UnknownExample, ValidationError
from .fan import star_subdivision, validate_fan

BASE_NAMES = (
    "p1", "p2", "p1xp1", "hirzebruch(a)", "affine-plane", "torus(n)",
    "example-prz", "example-prz-completion", "c2-minus-origin",
    "cone-over-square",
)


def _p1():
    return validate_fan(1, [(1,), (-1,)], [[0], [1]])


def _p2():
    return validate_fan(2, [(1, 0), (0, 1), (-1, -1)], [[0, 1], [1, 2], [2, 0]])


def _p1xp1():
    return validate_fan(2, [(1, 0), (0, 1), (-1, 0), (0, -1)],
                        [[0, 1], [1, 2], [2, 3], [3, 0]])


def _hirzebruch(a):
    return validate_fan(2, [(1, 0), (0, 1), (-1, a), (0, -1)],
                        [[0, 1], [1, 2], [2, 3], [3, 0]])


def _affine_plane():
    return validate_fan(2, [(1, 0), (0, 1)], [[0, 1]])


def _torus(n):
    return validate_fan(n, [], [])


def _example_prz():
    return validate_fan(2, [(1, 0), (0, 1), (-1, 0), (0, -1)], [[0, 1], [2, 3]])


def _prz_ambient():
    fan = _p1xp1()
    fan = star_subdivision(fan, fan.cone_by_rays((1, 2)))
    fan = star_subdivision(fan, fan.cone_by_rays((0, 3)))
    return fan


def _example_prz_completion():
    # imported here to avoid a cycle: deligne builds on fan
    from .deligne import validate_completion
    return validate_completion(_prz_ambient(), [0, 1, 2, 3])


def _c2_minus_origin():
    return validate_fan(2, [(1, 0), (0, 1)], [[0], [1]])


def _cone_over_square():
    return validate_fan(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)],
                        [[0, 1, 2, 3]])


def builtin_example(name):
    """Fan (or CompletionPair, for names ending in ``-completion``) by name."""
    if name == "p1":
        return _p1()
    if name == "p2":
        return _p2()
    if name == "p1xp1":
        return _p1xp1()
    if name == "affine-plane":
        return _affine_plane()
    if name == "example-prz":
        return _example_prz()
    if name == "example-prz-completion":
        return _example_prz_completion()
    if name == "c2-minus-origin":
        return _c2_minus_origin()
    if name == "cone-over-square":
        return _cone_over_square()
    m = re.fullmatch(r"hirzebruch\((-?\d+)\)", name)
    if m:
        return _hirzebruch(int(m.group(1)))
    m = re.fullmatch(r"torus\((\d+)\)", name)
    if m:
        n = int(m.group(1))
        if n < 0:
            raise ValidationError("torus rank must be nonnegative")
        return _torus(n)
    raise UnknownExample(
        f"unknown example {name!r}; catalogue: {', '.join(BASE_NAMES)}")


def catalogue_fans():
    """Representative instantiation of every catalogue fan (no pairs)."""
    names = ["p1", "p2", "p1xp1", "hirzebruch(1)", "hirzebruch(2)",
             "affine-plane", "torus(1)", "torus(2)", "torus(3)",
             "example-prz", "c2-minus-origin", "cone-over-square"]
    return {n: builtin_example(n) for n in names}
