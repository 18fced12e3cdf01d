# models/errors.py

from typing import Tuple


class DiagramError(ValueError):
    """Base class for diagrams that cannot be accepted"""


class DiagramSyntaxError(DiagramError):
    pass


class DiagramShapeError(DiagramError):
    pass


class LeViolationError(DiagramError):
    def __init__(self, box: Tuple[int, int]):
        self.box = box
        super().__init__(f"Le-violation at box {box}")


class LabelError(ValueError):
    pass


class BasisSizeError(ValueError):
    pass


class OverlapError(ValueError):
    pass


class SameElementError(ValueError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"e and f must be distinct, both are {element}")


class NegativeWeightError(ValueError):
    pass


class SizeGuardError(ValueError):
    pass


class InjectionPreconditionError(ValueError):
    pass


class MalformedConfigError(ValueError):
    pass


class InvariantError(RuntimeError):
    """An internal invariant was broken; indicates a bug, not bad input"""
