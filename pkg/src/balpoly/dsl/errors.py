"""Located errors for the identity language."""


class DslError(Exception):
    """An error tied to a 1-based (line, column) in the source."""

    kind = "error"

    def __init__(self, message, line=1, col=1):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def __str__(self):
        return f"line {self.line}, col {self.col}: {self.kind}: {self.message}"


class LexError(DslError):
    kind = "lexical error"


class ParseError(DslError):
    kind = "syntax error"


class UnboundVariableError(DslError):
    kind = "unbound variable"


class EvalError(DslError):
    kind = "evaluation error"
