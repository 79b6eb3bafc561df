"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all carrymul errors."""


class BaseOutOfRange(Error):
    def __init__(self, base):
        super().__init__(f"base must be in 2..36, got {base}")
        self.base = base


class EmptyInput(Error):
    def __init__(self):
        super().__init__("empty digit string")


class InvalidDigitGlyph(Error):
    def __init__(self, position, char, base):
        super().__init__(
            f"invalid digit {char!r} for base {base} at position {position}"
        )
        self.position = position
        self.char = char
        self.base = base


class DigitOutOfRange(Error):
    def __init__(self, index, value, base):
        super().__init__(f"digit {value} at index {index} out of range for base {base}")
        self.index = index
        self.value = value
        self.base = base


class BaseMismatch(Error):
    def __init__(self, left, right):
        super().__init__(f"operands use different bases: {left} vs {right}")
        self.left = left
        self.right = right


class WrongAlgorithm(Error):
    def __init__(self, algorithm):
        super().__init__(f"expected an incremental trace, got {algorithm!r}")
        self.algorithm = algorithm
