"""Exception types raised across the package."""


class BargmannError(ValueError):
    """Base class for invalid-input errors."""


class NonHermitianInput(BargmannError):
    pass


class DimensionTooLarge(BargmannError):
    pass


class DimensionMismatch(BargmannError):
    pass


class LengthMismatch(BargmannError):
    pass


class NotNormalized(BargmannError):
    pass


class NotPSD(BargmannError):
    pass


class NotUnitDiagonal(BargmannError):
    pass


class NotRealizable(BargmannError):
    pass


class OutOfRange(BargmannError):
    pass


class TooFewSamples(BargmannError):
    pass


class ParseError(BargmannError):
    pass


class ConfigError(BargmannError):
    pass
