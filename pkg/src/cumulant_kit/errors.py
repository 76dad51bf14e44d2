"""Exception types raised by cumulant_kit."""


class CumulantKitError(Exception):
    """Base class for every domain error raised by this package."""

    code = "error"


class InvalidPartition(CumulantKitError):
    code = "invalid-partition"


class InvalidSubset(CumulantKitError):
    code = "invalid-subset"


class NotComparable(CumulantKitError):
    code = "not-comparable"


class UnsupportedForCrossing(CumulantKitError):
    code = "unsupported-for-crossing"


class InvalidGap(CumulantKitError):
    code = "invalid-gap"


class ArityMismatch(CumulantKitError):
    code = "arity-mismatch"


class ColourMismatch(CumulantKitError):
    code = "colour-mismatch"


class EmptyExcluded(CumulantKitError):
    code = "empty-excluded"


class NotInAugmentationIdeal(CumulantKitError):
    code = "not-in-augmentation-ideal"


class AlgebraMismatch(CumulantKitError):
    code = "algebra-mismatch"


class NotInvertible(CumulantKitError):
    code = "not-invertible"


class TruncationExceeded(CumulantKitError):
    code = "truncation-exceeded"


class InternalInconsistency(CumulantKitError):
    code = "internal-inconsistency"
