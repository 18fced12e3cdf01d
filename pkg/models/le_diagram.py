# models/le_diagram.py

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import FrozenSet, Iterator, List, Tuple, Union

from models.errors import DiagramSyntaxError

Box = Tuple[int, int]


class Step(Enum):
    V = "V"
    H = "H"


@dataclass(frozen=True)
class LeDiagram:
    """
    A lattice path plus a dot filling of the Ferrers shape above it.

    Labels 1..n follow the boundary path from the Northeast corner to the
    Southwest corner. Rows are numbered from the top, columns from the left.
    Only structural checks happen here; rank, shape and Le-condition checks
    belong to the validator so that broken diagrams can still be reported.
    """

    n: int
    r: int
    steps: Tuple[Step, ...]
    dots: FrozenSet[Box] = frozenset()

    def __post_init__(self):
        if isinstance(self.steps, str):
            try:
                steps = tuple(Step(ch) for ch in self.steps)
            except ValueError:
                raise DiagramSyntaxError(
                    f"Steps must use only 'V' and 'H', got {self.steps!r}"
                )
            object.__setattr__(self, "steps", steps)
        else:
            object.__setattr__(self, "steps", tuple(self.steps))
        object.__setattr__(self, "dots", frozenset(tuple(box) for box in self.dots))

        if self.n <= 0:
            raise DiagramSyntaxError("Ground set size n must be positive")
        if self.r < 0:
            raise DiagramSyntaxError("Rank r cannot be negative")
        for box in self.dots:
            if len(box) != 2 or box[0] < 1 or box[1] < 1:
                raise DiagramSyntaxError(f"Dot coordinates must be positive, got {box}")

    @property
    def steps_string(self) -> str:
        return "".join(step.value for step in self.steps)

    @cached_property
    def vertical_labels(self) -> Tuple[int, ...]:
        return tuple(i + 1 for i, step in enumerate(self.steps) if step is Step.V)

    @cached_property
    def horizontal_labels(self) -> Tuple[int, ...]:
        return tuple(i + 1 for i, step in enumerate(self.steps) if step is Step.H)

    @property
    def num_rows(self) -> int:
        return len(self.vertical_labels)

    @property
    def num_columns(self) -> int:
        return len(self.horizontal_labels)

    def row_of(self, label: int) -> int:
        """Row of a V-label: number of V steps with label <= it"""
        return sum(1 for v in self.vertical_labels if v <= label)

    def column_of(self, label: int) -> int:
        """Column of an H-label: number of H steps with label >= it"""
        return sum(1 for h in self.horizontal_labels if h >= label)

    def row_label(self, row: int) -> int:
        return self.vertical_labels[row - 1]

    def column_label(self, col: int) -> int:
        # columns run right to left in label order
        return self.horizontal_labels[self.num_columns - col]

    @cached_property
    def widths(self) -> Tuple[int, ...]:
        widths: List[int] = []
        for v in self.vertical_labels:
            widths.append(sum(1 for h in self.horizontal_labels if h > v))
        return tuple(widths)

    def width(self, row: int) -> int:
        return self.widths[row - 1]

    def height(self, col: int) -> int:
        return sum(1 for w in self.widths if w >= col)

    def in_shape(self, box: Box) -> bool:
        row, col = box
        return 1 <= row <= self.num_rows and 1 <= col <= self.width(row)

    def boxes(self) -> Iterator[Box]:
        """All boxes of the shape in row-major order"""
        for row in range(1, self.num_rows + 1):
            for col in range(1, self.width(row) + 1):
                yield (row, col)

    def has_dot(self, box: Box) -> bool:
        return box in self.dots

    def sorted_dots(self) -> List[Box]:
        return sorted(self.dots)

    def with_dots(self, dots: Union[FrozenSet[Box], set]) -> "LeDiagram":
        return LeDiagram(self.n, self.r, self.steps, frozenset(dots))
