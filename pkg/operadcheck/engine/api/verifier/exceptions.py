from core.exceptions import EngineError


class ScenarioPreconditionError(EngineError):
    """Raised when a scenario is asked for parameters outside its hypotheses"""

    message = "Scenario preconditions are not met"


class OracleMismatchError(EngineError):
    """
    Raised when two independent computations of the same object disagree
    """

    message = "Independent computations disagree"
