# report_format.py


import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional

from models.le_diagram import LeDiagram
from utils.fraction_utils import fraction_json, fraction_text

FORMATS = ("json", "text")


@dataclass
class CommandOutcome:
    """Exit code (0 ok, 1 violation found, 2 invalid input) and report payload"""

    exit_code: int
    payload: Dict[str, Any]
    sketch: Optional[str] = None  # extra block shown in text format only
    fmt: str = "json"

    def __post_init__(self):
        if self.exit_code == 1 and not self.payload.get("violations"):
            raise ValueError("Exit code 1 requires a nonempty violations payload")


def _canonical(value: Any, render_fraction) -> Any:
    """Replace fractions and tuples so the payload is plain JSON data"""
    if isinstance(value, bool):
        return value
    if isinstance(value, Fraction):
        return render_fraction(value)
    if isinstance(value, dict):
        return {str(key): _canonical(item, render_fraction) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_canonical(item, render_fraction) for item in value]
    return value


def _inline(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    if isinstance(value, list):
        return "[" + ", ".join(_inline(item) for item in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{key}: {_inline(value[key])}" for key in sorted(value)) + "}"
    return str(value)


def _text_lines(payload: Dict[str, Any]) -> List[str]:
    lines = []
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, list) and value and isinstance(value[0], (dict, list)):
            lines.append(f"{key}:")
            lines.extend(f"  - {_inline(item)}" for item in value)
        else:
            lines.append(f"{key}: {_inline(value)}")
    return lines


def render_report(outcome: CommandOutcome, fmt: str = "json") -> bytes:
    """Byte-stable rendering of a command outcome"""
    if fmt == "json":
        data = _canonical(outcome.payload, fraction_json)
        return (json.dumps(data, indent=2, sort_keys=True) + "\n").encode("utf-8")
    if fmt != "text":
        raise ValueError(f"Unknown report format {fmt!r}; choose from {FORMATS}")

    data = _canonical(outcome.payload, fraction_text)
    output = []
    if "violations" in data:
        count = len(data["violations"])
        output.append(f"OK ({count} violations)" if count == 0 else f"FAILED ({count} violations)")
    if outcome.sketch:
        output.append(outcome.sketch)
    output.extend(_text_lines(data))
    return ("\n".join(output) + "\n").encode("utf-8")


def format_diagram(diagram: LeDiagram) -> str:
    """
    ASCII picture in English notation: 'o' for a dot, '.' for an empty box,
    row labels at the right end of each row, column labels along the bottom.
    """
    cell = 3
    total = cell * diagram.num_columns
    output = []
    for row in range(1, diagram.num_rows + 1):
        cells = "".join(
            f"{'o' if diagram.has_dot((row, col)) else '.':>{cell}}"
            for col in range(1, diagram.width(row) + 1)
        )
        output.append(f"{cells:<{total}}  | {diagram.row_label(row)}")
    output.append("-" * total)
    output.append(
        "".join(
            f"{diagram.column_label(col):>{cell}}"
            for col in range(1, diagram.num_columns + 1)
        )
    )
    return "\n".join(output)
