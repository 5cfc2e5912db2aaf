from core.exceptions import EngineError


class DifferentialError(EngineError):
    """Raised when a differential has the wrong shape or does not square to zero"""

    message = "Invalid differential"


class ChainMapError(EngineError):
    """Raised when a map of complexes is mismatched or fails to commute with d"""

    message = "Invalid chain map"


class GroupActionError(EngineError):
    """Raised when a group action has a non-invertible or foreign generator"""

    message = "Invalid group action"
