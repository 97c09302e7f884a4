"""Exception hierarchy shared by all modules."""


class HomLieError(Exception):
    pass


# posets
class DuplicateLabel(HomLieError):
    pass


class UnknownLabel(HomLieError, KeyError):
    pass


class CycleDetected(HomLieError):
    pass


class NotComparable(HomLieError):
    pass


class SizeTooLarge(HomLieError):
    pass


class InvalidPoset(HomLieError):
    pass


# scalars
class DivisionByZero(HomLieError, ZeroDivisionError):
    pass


class FieldMismatch(HomLieError):
    pass


# algebra elements and maps
class ContextMismatch(HomLieError):
    pass


class NotAUnit(HomLieError):
    def __init__(self, element):
        super().__init__(f"zero diagonal entry at {element!r}")
        self.element = element


class ZeroElement(HomLieError):
    pass


class NotInvertible(HomLieError):
    pass


class NotMultiplicative(HomLieError):
    pass


class InvalidParams(HomLieError):
    pass


class PreconditionViolated(HomLieError):
    pass


class ParseError(HomLieError):
    pass
