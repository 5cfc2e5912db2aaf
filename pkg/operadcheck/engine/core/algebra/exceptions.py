from core.exceptions import EngineError


class InvalidRingError(EngineError):
    """Raised when a ring descriptor or a coefficient cannot be built"""

    message = "Invalid coefficient ring"


class RingMismatchError(EngineError):
    """Raised when operands live over different coefficient rings"""

    message = "Operands are defined over different rings"


class UnsupportedRingError(EngineError):
    """Raised when an algorithm is invoked over a ring it does not support"""

    message = "Operation is not supported over this ring"


class ShapeMismatchError(EngineError):
    """Raised when matrix dimensions are incompatible"""

    message = "Matrix shapes are incompatible"
