"""Exception hierarchy.

ConfigError maps to exit code 1, DataValidationError to exit code 2 and
ToleranceError to exit code 3 in the CLI.
"""


class LingdistError(Exception):
    """Base class for all lingdist errors."""


class ConfigError(LingdistError):
    """Bad usage or configuration (missing paths, malformed flags)."""


class DataValidationError(LingdistError):
    """Input data violates a documented contract."""


class ParseError(DataValidationError):
    """Malformed table row; carries file name and line number."""

    def __init__(self, message: str, *, path=None, line: int | None = None):
        loc = ""
        if path is not None:
            loc = f"{path}"
            if line is not None:
                loc += f":{line}"
            loc = f" [{loc}]"
        super().__init__(f"{message}{loc}")
        self.path = path
        self.line = line


class ToleranceError(LingdistError):
    """A reproduction check deviated beyond its pinned tolerance."""
