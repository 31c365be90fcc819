"""Engine error hierarchy.

Every error carries the exit code the ``argdec`` command line reports when
the error escapes a command.
"""


class EngineError(Exception):
    """Base class of all engine failures."""

    exit_code = 1


class ParseError(EngineError, ValueError):
    """Malformed formula or instance text."""

    exit_code = 2

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class UnknownAtom(ParseError):
    """An atom is used that the vocabulary does not declare (strict mode)."""


class ScaleError(EngineError, ValueError):
    """A weight lies outside [0, 1] or is not a number."""

    exit_code = 2


class VocabError(EngineError, ValueError):
    """Vocabulary misuse: goals over decision atoms, bad decisions, no decisions."""

    exit_code = 2


class NotNormalized(EngineError):
    """The knowledge base or the goal base is classically inconsistent."""

    exit_code = 3


class InfeasibleDecision(EngineError):
    """K* together with the decision is inconsistent."""

    exit_code = 3


class UnknownDecision(EngineError, KeyError):
    """The requested decision is not one of the instance's decisions."""

    exit_code = 3

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class BackendLimit(EngineError):
    """The vocabulary is too large for the selected entailment backend."""

    exit_code = 3


class EnumerationLimit(EngineError):
    """A subset enumeration would exceed the configured bound."""

    exit_code = 3


class GenerationExhausted(EngineError):
    """Rejection sampling did not meet the generator constraints in time."""

    exit_code = 3


class DifferentialFailure(EngineError):
    """Two evaluation routes disagree where they must agree."""

    exit_code = 5
