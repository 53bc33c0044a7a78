"""Error taxonomy shared by the library and the CLI.

Validation errors (rejected input) map to CLI exit code 1; internal
inconsistencies (a computed value contradicting a structural guarantee)
map to exit code 2.
"""


class ToricError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(ToricError):
    """Input rejected; the offending datum is named in the message."""


class NonPrimitiveRay(ValidationError):
    """A ray generator is zero or has a coordinate gcd greater than 1."""


class DuplicateRay(ValidationError):
    """The same primitive vector appears twice in the ray list."""


class RedundantGenerator(ValidationError):
    """A listed generator is not an extreme ray of its cone."""


class NotStronglyConvex(ValidationError):
    """A cone contains a line."""


class NotAFan(ValidationError):
    """Two cones intersect in a set that is not a common face."""


class UnknownCone(ValidationError):
    """The given cone does not belong to the fan."""


class ZeroCone(ValidationError):
    """The operation is undefined on the zero cone."""


class IncompatibleRayUniverse(ValidationError):
    """The two fans do not share the same ray list."""


class UnknownExample(ValidationError):
    """Name not in the built-in example catalogue."""


class DimensionMismatch(ValidationError):
    """Matrix or vector sizes are incompatible."""


class NotAComplex(ValidationError):
    """The composite of consecutive differentials is nonzero."""


class NotSimplicial(ValidationError):
    """The fan has a cone with more rays than its dimension."""


class NegativeDimension(ValidationError):
    """A dimension parameter was negative."""


class NotSmooth(ValidationError):
    """The fan has a non-unimodular cone."""


class NotComplete(ValidationError):
    """The fan's support is not the whole ambient space."""


class InternalInconsistency(ToricError):
    """A structural guarantee failed; indicates a bug, not bad input."""


class PurityViolation(InternalInconsistency):
    """An equivariant Betti series coefficient came out negative."""
