# diagram_validator.py


import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

from models.le_diagram import Box, LeDiagram, Step


class ViolationKind(Enum):
    LENGTH_MISMATCH = "length mismatch"
    RANK_MISMATCH = "rank mismatch"
    DOT_OUTSIDE_SHAPE = "dot outside shape"
    LE_VIOLATION = "Le-violation"


@dataclass(frozen=True)
class DiagramViolation:
    kind: ViolationKind
    message: str
    box: Optional[Box] = None
    context: Dict = field(default_factory=dict, compare=False, hash=False)

    def to_payload(self) -> Dict:
        payload = {"kind": self.kind.value, "message": self.message}
        if self.box is not None:
            payload["box"] = list(self.box)
        payload.update(self.context)
        return payload


class DiagramValidator:
    def __init__(self):
        self.logger = logging.getLogger("lediagram")
        self.violations: List[DiagramViolation] = []

    def validate(self, diagram: LeDiagram) -> List[DiagramViolation]:
        """Check length, rank, shape and Le-condition; violations are data"""
        self.violations = []

        if len(diagram.steps) != diagram.n:
            self._add_violation(
                ViolationKind.LENGTH_MISMATCH,
                f"steps has length {len(diagram.steps)}, expected n={diagram.n}",
                context={"expected": diagram.n, "found": len(diagram.steps)},
            )

        vertical = sum(1 for step in diagram.steps if step is Step.V)
        if vertical != diagram.r:
            self._add_violation(
                ViolationKind.RANK_MISMATCH,
                f"steps has {vertical} V symbols, expected r={diagram.r}",
                context={"expected": diagram.r, "found": vertical},
            )

        self._check_shape(diagram)
        self._check_le_condition(diagram)

        if self.violations:
            self.logger.debug(
                f"Diagram {diagram.steps_string} has {len(self.violations)} violations"
            )
        return self.violations

    def _check_shape(self, diagram: LeDiagram):
        for box in diagram.sorted_dots():
            if not diagram.in_shape(box):
                self._add_violation(
                    ViolationKind.DOT_OUTSIDE_SHAPE,
                    f"dot {box} lies outside the Ferrers shape",
                    box=box,
                )

    def _check_le_condition(self, diagram: LeDiagram):
        for box in diagram.boxes():
            if box in diagram.dots:
                continue
            if has_dot_above(diagram, box) and has_dot_left(diagram, box):
                self._add_violation(
                    ViolationKind.LE_VIOLATION,
                    f"box {box} is empty but has a dot above and a dot to its left",
                    box=box,
                )

    def _add_violation(
        self,
        kind: ViolationKind,
        message: str,
        box: Optional[Box] = None,
        context: Optional[Dict] = None,
    ):
        self.violations.append(DiagramViolation(kind, message, box, context or {}))


def has_dot_above(diagram: LeDiagram, box: Box) -> bool:
    row, col = box
    return any((above, col) in diagram.dots for above in range(1, row))


def has_dot_left(diagram: LeDiagram, box: Box) -> bool:
    row, col = box
    return any((row, left) in diagram.dots for left in range(1, col))
