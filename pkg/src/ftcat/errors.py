"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command line front end:
1 for a property that does not hold, 2 for invalid input, 3 for a
resource cap.
"""

from __future__ import annotations


class FtcatError(Exception):
    exit_code = 2


# -- invalid input (exit 2) -------------------------------------------------

class InvalidInput(FtcatError, ValueError):
    exit_code = 2


class NonSquare(InvalidInput):
    pass


class NegativeEntry(InvalidInput):
    pass


class LengthMismatch(InvalidInput):
    pass


class IndexOutOfRange(InvalidInput, IndexError):
    pass


class GeneratorMismatch(InvalidInput):
    pass


class BadParameter(InvalidInput):
    pass


class NotPrime(BadParameter):
    pass


class BadDivisor(BadParameter):
    pass


class UnsupportedGroup(InvalidInput):
    pass


class NotASubgroup(InvalidInput):
    pass


class CocycleInvalid(InvalidInput):
    pass


class CharacteristicMismatch(InvalidInput):
    pass


class CharacteristicTwo(InvalidInput):
    pass


class CharacteristicTooSmall(InvalidInput):
    pass


class AsymmetricForm(InvalidInput):
    pass


class InconsistentRelations(InvalidInput):
    pass


class InconsistentData(InvalidInput):
    pass


class NotTransitive(InvalidInput):
    pass


class NotASubring(InvalidInput):
    pass


class DivisionByZero(FtcatError, ZeroDivisionError):
    exit_code = 2


# -- property failures (exit 1) ----------------------------------------------

class PropertyFailure(FtcatError):
    exit_code = 1


class EigenspaceDimensionNotOne(PropertyFailure):
    pass


class NotAnEigenvalue(PropertyFailure):
    pass


class Ambiguous(PropertyFailure):
    def __init__(self, message, candidates=()):
        super().__init__(message)
        self.candidates = list(candidates)


class NotSurjective(PropertyFailure):
    pass


class ImageCartanUnavailable(PropertyFailure):
    pass


class FieldEmbeddingFailed(PropertyFailure):
    pass


# -- resource caps (exit 3) ---------------------------------------------------

class ResourceCap(FtcatError):
    exit_code = 3


class DegreeTooLarge(ResourceCap):
    pass


class DimensionOverflow(ResourceCap):
    pass


class RankTooLarge(ResourceCap):
    pass
