"""Exception types shared across the package."""


class FsmError(Exception):
    """Base class for all errors raised by this package."""


class AlphabetMismatchError(FsmError):
    """Binary operation applied to machines with different alphabets."""


class RegexParseError(FsmError):
    """Pattern rejected; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DocumentParseError(FsmError):
    """Input text is not well-formed JSON; carries the decoder location."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class DocumentSchemaError(FsmError):
    """Well-formed JSON that does not fit the FSM document schema."""

    def __init__(self, key: str, message: str):
        super().__init__(f"{key}: {message}")
        self.key = key


class QuestionBankError(FsmError):
    """A question directory could not be loaded; names the offending file."""

    def __init__(self, source: str, message: str):
        super().__init__(f"{source}: {message}")
        self.source = source
