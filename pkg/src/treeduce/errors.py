"""Exception hierarchy shared by all treeduce modules."""


class TreeduceError(Exception):
    """Base class for every error raised by this package."""


class WidthOverflow(TreeduceError, OverflowError):
    """A value does not fit the declared 64-bit unsigned width."""


class LengthError(TreeduceError, ValueError):
    pass


class LetterOutOfRange(TreeduceError, ValueError):
    pass


class IndexOutOfRange(TreeduceError, IndexError):
    pass


class UnknownName(TreeduceError, KeyError):
    pass


class UnknownState(TreeduceError, KeyError):
    pass


class TransducerSyntaxError(TreeduceError, ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class IncompleteTable(TreeduceError, ValueError):
    def __init__(self, state: str, letter: int):
        super().__init__(f"no transition for state {state!r} on letter {letter}")
        self.state = state
        self.letter = letter


class NotInjective(TreeduceError, ValueError):
    def __init__(self, state: str):
        super().__init__(f"output map of state {state!r} is not injective")
        self.state = state


class NotInvertible(TreeduceError, ValueError):
    pass


class AlphabetMismatch(TreeduceError, ValueError):
    pass


class ConfinalityViolation(TreeduceError, ValueError):
    pass


class NotProlongable(TreeduceError, ValueError):
    pass


class OracleFailure(TreeduceError, AssertionError):
    pass


class ResourceLimit(TreeduceError, RuntimeError):
    pass
