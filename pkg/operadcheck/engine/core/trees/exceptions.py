from core.exceptions import EngineError


class InvalidTreeError(EngineError):
    """Raised when a parent map does not describe a rooted tree"""

    message = "Invalid rooted tree"


class InvalidMarkingError(EngineError):
    """Raised when an (r, n)-marking is inconsistent with its tree"""

    message = "Invalid tree marking"
