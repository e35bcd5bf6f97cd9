"""Exception hierarchy shared across the package."""


class StorauditError(Exception):
    """Base class for every error raised by this package."""


class WrongLength(StorauditError, ValueError):
    """A byte buffer does not have its declared fixed length."""


class InvalidEncoding(StorauditError, ValueError):
    """Bytes do not decode to a canonical field/group element."""


class EmptyFile(StorauditError, ValueError):
    """File encoding rejects empty inputs."""


class InconsistentLength(StorauditError, ValueError):
    """A file encoding's plaintext length contradicts its block count."""


class ParamMismatch(StorauditError, ValueError):
    """Key, encoding, or proof dimensions disagree."""


class IndexOutOfRange(StorauditError, IndexError):
    """A challenged chunk index is outside [0, d)."""


class BeaconUnavailable(StorauditError, RuntimeError):
    """The randomness beacon produced no usable output for a round."""


class InsufficientPoints(StorauditError, ValueError):
    """Too few evaluation points to interpolate the target degree."""


class DuplicatePoint(StorauditError, ValueError):
    """Interpolation received repeated evaluation points."""


class SingularSystem(StorauditError, ValueError):
    """The coefficient matrix of a recovery system is not invertible."""


class WrongState(StorauditError, RuntimeError):
    """A contract message arrived in a state that does not accept it."""


class InvalidAgreement(StorauditError, ValueError):
    """Contract agreements failed validation (e.g. zero audits)."""


class InsufficientDeposit(StorauditError, ValueError):
    """A deposit of zero or less cannot be locked."""


class AuditsExhausted(StorauditError, RuntimeError):
    """All agreed audit rounds have already run."""


class NoProofPending(StorauditError, RuntimeError):
    """Verification fired with no submitted proof and no expired deadline."""
