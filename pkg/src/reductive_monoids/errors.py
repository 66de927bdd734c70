"""Exception hierarchy.

Resource errors, input errors and classification failures are kept apart
because the command line maps them to different exit codes.
"""


class MonoidError(Exception):
    """Base class for every error raised by this package."""


class InputError(MonoidError, ValueError):
    """Malformed or inconsistent input data."""


class DimensionMismatch(InputError):
    pass


class ResourceBoundExceeded(MonoidError):
    """A configured enumeration bound would be exceeded."""


class WeylBoundExceeded(ResourceBoundExceeded):
    def __init__(self, order: int, bound: int):
        super().__init__(f"Weyl group of order {order} exceeds the bound {bound}")
        self.order = order
        self.bound = bound


class DimensionBoundExceeded(ResourceBoundExceeded):
    pass


class LinealityError(MonoidError):
    """The operation needs a strictly convex cone."""


class ClassificationError(MonoidError):
    """The data does not describe a (valid) monoid.

    ``condition`` names what failed, e.g. ``"i"``, ``"ii"``, ``"iii"`` or
    ``"strict-convexity"``.
    """

    condition = "unknown"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details

    def report(self) -> dict:
        return {"error": type(self).__name__, "condition": self.condition, "reason": str(self), **self.details}


class NotStrictlyConvex(ClassificationError):
    condition = "strict-convexity"


class NoInteriorValuation(ClassificationError):
    condition = "iii"


class BadGenerators(ClassificationError):
    condition = "ii"


class BadColors(ClassificationError):
    condition = "i"


class NotAMonoid(ClassificationError):
    condition = "strict-convexity"


class InputOutsideValuationCone(ClassificationError):
    condition = "tau-in-valuation-cone"


class NotAffine(ClassificationError):
    condition = "affine"


class SpanMismatch(ClassificationError):
    condition = "span"


class WitnessZero(ClassificationError):
    condition = "central-witness"


class PreconditionFailed(ClassificationError):
    condition = "precondition"


class NotCommensurable(InputError):
    pass


class MissingCoroots(InputError):
    pass
