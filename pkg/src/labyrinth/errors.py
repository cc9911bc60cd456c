"""Exception hierarchy. Every error raised by the library derives from LabyrinthError."""


class LabyrinthError(Exception):
    pass


class EmptyPattern(LabyrinthError):
    pass


class BadAddress(LabyrinthError):
    pass


class BadParameter(LabyrinthError, ValueError):
    pass


class TooLarge(LabyrinthError):
    """A grid would exceed the materialization or rendering cap."""


class ParseError(LabyrinthError):
    def __init__(self, message: str, line: int, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class MissingExits(LabyrinthError):
    pass


class NotLabyrinth(LabyrinthError):
    pass


class NotTree(LabyrinthError):
    pass


class NotWhite(LabyrinthError):
    pass


class Unreachable(LabyrinthError):
    pass


class PreconditionViolated(LabyrinthError, ValueError):
    pass
