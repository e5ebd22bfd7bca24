"""Exception types shared across the package.

Every error raised by stpamon derives from :class:`StpamonError`, so callers
(and the CLI) can catch one base class and map it to an exit code.
"""


class StpamonError(Exception):
    """Base class for all package errors."""


# --- trace layer ---------------------------------------------------------

class UnknownStream(StpamonError):
    """A sample, query, or property referenced an undeclared stream."""


class NonMonotonicTimestamp(StpamonError):
    """A sample was appended behind the stream's last recorded tick."""


class DuplicateSignalSample(StpamonError):
    """A signal stream already holds a sample at this tick."""


class TraceFormatError(StpamonError):
    """A trace log file could not be parsed."""


# --- block-structured config files ---------------------------------------

class BlockParseError(StpamonError):
    """Malformed block file (model, scenario, or campaign)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# --- property language ----------------------------------------------------

class PropertySyntaxError(StpamonError):
    """Property text rejected by the grammar; carries the error position."""

    def __init__(self, message: str, line: int, column: int, expected: str = ""):
        self.line = line
        self.column = column
        self.expected = expected
        detail = f"line {line}, column {column}: {message}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


class SortMismatch(StpamonError):
    """A predicate or formula was applied to a stream of the wrong sort."""


class OutOfOrderEvaluation(StpamonError):
    """evaluate_step was fed a tick other than the next expected one."""


class UnsupportedFormula(StpamonError):
    """Formula nests a deferred implication where only exact-tick forms work."""


# --- hazard-analysis model -------------------------------------------------

class DanglingReference(StpamonError):
    """A model artifact links to an id that does not exist."""

    def __init__(self, ref: str, context: str = ""):
        self.ref = ref
        message = f"dangling reference {ref!r}"
        if context:
            message += f" in {context}"
        super().__init__(message)


class UnknownId(StpamonError):
    """Chain query for an id that is not part of the model."""


class EmptyVariables(StpamonError):
    """A context must name at least one variable."""


class ValidationRequired(StpamonError):
    """Operation requires the model to validate without error findings."""


# --- monitor engine --------------------------------------------------------

class UnresolvedStream(StpamonError):
    """A monitor's property references a stream missing from the declarations."""


class UnresolvedConstraint(StpamonError):
    """A property's constraint reference is not in the loaded model."""


class LocalityViolation(StpamonError):
    """A monitor observes a stream that does not originate at its placement."""


class MismatchedRunIds(StpamonError):
    """Coverage matrix inputs do not pair up report and campaign."""


# --- simulation ------------------------------------------------------------

class NonPositiveDecel(StpamonError):
    """Stopping time is undefined for a non-positive deceleration."""


# --- fault injection ---------------------------------------------------------

class UnknownTarget(StpamonError):
    """Fault targets a stream or bus channel that does not exist."""


class DomainViolation(StpamonError):
    """Fault value falls outside the target stream's value domain."""


class WindowOutOfRange(StpamonError):
    """Fault window does not fit inside the scenario duration."""
