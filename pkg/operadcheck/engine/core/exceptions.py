class EngineError(Exception):
    """
    Base class for engine-specific exceptions
    """

    message = "The engine could not complete the computation"
    code: str | None = None

    def __init__(self, message: str | None = None, code: str | None = None) -> None:
        if code:
            self.code = code
        self.message = message or self.message
        super().__init__(self.message)
