"""Exception types raised by fpindex."""


class FingerprintError(Exception):
    """Base class for all library errors."""


class EmptyInput(FingerprintError, ValueError):
    pass


class IndexOutOfRange(FingerprintError, IndexError):
    pass


class DuplicateChange(FingerprintError, ValueError):
    """A list of fingerprint changes repeats a character."""


class DuplicateCharacter(FingerprintError, ValueError):
    """A string handed to a set-equality test repeats a character."""


class LengthMismatch(FingerprintError, ValueError):
    pass


class RankOutOfRange(FingerprintError, ValueError):
    pass


class RetryLimitExceeded(FingerprintError, RuntimeError):
    pass


class DuplicateSets(FingerprintError, ValueError):
    """Injective hashing was requested for a collection with repeated sets."""


class ModulusTooLarge(FingerprintError, OverflowError):
    pass


class NotPrefixClosed(FingerprintError, ValueError):
    pass


class UnknownFingerprint(FingerprintError, KeyError):
    pass


class CapExceeded(FingerprintError, ValueError):
    pass


class KOutOfRange(FingerprintError, ValueError):
    pass


class FormatError(FingerprintError, ValueError):
    """A serialized index could not be decoded."""
