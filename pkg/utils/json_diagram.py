# utils/json_diagram.py

import json
from typing import List

from pydantic import BaseModel, ConfigDict, StrictInt, StrictStr, ValidationError, conlist

from models.errors import DiagramSyntaxError
from models.le_diagram import LeDiagram


class DiagramFile(BaseModel):
    """On-disk diagram: {"n", "r", "steps", "dots"}; unknown fields rejected"""

    model_config = ConfigDict(extra="forbid")

    n: StrictInt
    r: StrictInt
    steps: StrictStr
    dots: List[conlist(StrictInt, min_length=2, max_length=2)] = []


def convert_diagram_json(text: str) -> LeDiagram:
    """Convert diagram file content to a LeDiagram (syntax checks only)"""
    try:
        data = DiagramFile.model_validate_json(text)
    except ValidationError as e:
        raise DiagramSyntaxError(f"Malformed diagram file: {e}")

    if len(set(map(tuple, data.dots))) != len(data.dots):
        raise DiagramSyntaxError("Diagram file lists a dot twice")

    return LeDiagram(
        n=data.n,
        r=data.r,
        steps=data.steps,
        dots=frozenset(tuple(dot) for dot in data.dots),
    )


def diagram_to_dict(diagram: LeDiagram) -> dict:
    return {
        "n": diagram.n,
        "r": diagram.r,
        "steps": diagram.steps_string,
        "dots": [list(box) for box in diagram.sorted_dots()],
    }


def diagram_to_json(diagram: LeDiagram) -> str:
    """Canonical serialization: sorted keys, dots in lexicographic order"""
    return json.dumps(diagram_to_dict(diagram), indent=2, sort_keys=True) + "\n"
