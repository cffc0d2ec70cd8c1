class LatminError(Exception):
    """Raised by services; the CLI maps ``exit_code`` to the process status."""

    def __init__(self, exit_code: int, detail: str):
        super().__init__(detail)
        self.exit_code = exit_code
        self.detail = detail

    def __str__(self) -> str:
        return self.detail


# exit codes shared by every command
EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2


def usage_error(detail: str) -> LatminError:
    return LatminError(exit_code=EXIT_USAGE, detail=detail)
