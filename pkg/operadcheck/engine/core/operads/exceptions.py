from core.exceptions import EngineError


class OperadNotFound(EngineError):
    """Raised when an operad is not found in the registry"""

    message = "Unknown operad"


class InvalidCollectionError(EngineError):
    """Raised when a symmetric collection violates the action or unit axioms"""

    message = "Invalid symmetric collection"


class DescriptionFileError(EngineError):
    """Raised when a collection description file cannot be read"""

    message = "Malformed collection description file"


class ComponentTooLargeError(EngineError):
    """Raised when a tree component exceeds the configured size limit"""

    message = "Tree component exceeds the configured size limit"
