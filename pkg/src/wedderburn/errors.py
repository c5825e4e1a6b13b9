"""Exception hierarchy.

Errors that the decomposition pipeline recovers from internally
(:class:`MinimalityRefuted`, :class:`NotInvertible`) carry the data needed to
continue; the rest signal bad input or corrupted state.
"""


class AlgebraError(Exception):
    pass


class FormatError(AlgebraError, ValueError):
    """Malformed file or field description."""


class FieldMismatch(AlgebraError, ValueError):
    pass


class DimensionMismatch(AlgebraError, ValueError):
    pass


class AmbientMismatch(DimensionMismatch):
    pass


class SingularMatrix(AlgebraError, ValueError):
    pass


class ValidationError(AlgebraError):
    pass


class NotAssociative(ValidationError):
    def __init__(self, i, j, k):
        super().__init__(f"(x{i} x{j}) x{k} != x{i} (x{j} x{k})")
        self.triple = (i, j, k)


class NoUnity(ValidationError):
    pass


class WrongUnity(ValidationError):
    pass


class ZeroCorner(AlgebraError):
    pass


class TooLarge(AlgebraError):
    pass


class MinimalityRefuted(AlgebraError):
    """A left ideal assumed minimal turned out to contain ``smaller``."""

    def __init__(self, smaller, reason=""):
        super().__init__(reason or f"found sub-left-ideal of dim {smaller.dim}")
        self.smaller = smaller


class NotInvertible(AlgebraError):
    def __init__(self, x):
        super().__init__(f"{x!r} has no two-sided inverse in the corner")
        self.x = x


class NoConnector(AlgebraError):
    """eRf * fRe = 0; ``witness`` is a pair (a, b) with aRb = 0."""

    def __init__(self, witness):
        super().__init__("no basis pair connects the idempotents")
        self.witness = witness


class RelationsFailed(AlgebraError):
    def __init__(self, quad):
        super().__init__(f"matrix unit relation fails at {quad}")
        self.quad = quad
