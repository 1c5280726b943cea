"""
Error taxonomy shared by the library, the CLI and the HTTP app.

Each class maps to one CLI exit code (see ``core.constants``) and one HTTP
status; callers catch the base class when they only need to report.
"""


class GradestabError(Exception):
    """Base class for every error raised on purpose by this package."""


class InputValidationError(GradestabError, ValueError):
    """A precondition or schema violation in user-supplied data."""


class InvariantViolation(GradestabError, RuntimeError):
    """An internal postcondition failed; indicates a bug, not bad input."""


class VerificationFailure(GradestabError):
    """Built-in example verification found mismatches.

    Attributes:
        failures: human-readable description of each failed assertion
    """

    def __init__(self, failures: list[str]):
        self.failures = list(failures)
        super().__init__(f"{len(self.failures)} verification check(s) failed")
