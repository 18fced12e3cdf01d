# utils/json_positroid.py

import json
from typing import List

from pydantic import BaseModel, ConfigDict, StrictInt, ValidationError

from models.errors import DiagramSyntaxError
from models.positroid import Positroid


class PositroidFile(BaseModel):
    """On-disk positroid: {"n", "r", "bases"}; unknown fields rejected"""

    model_config = ConfigDict(extra="forbid")

    n: StrictInt
    r: StrictInt
    bases: List[List[StrictInt]]


def convert_positroid_json(text: str) -> Positroid:
    try:
        data = PositroidFile.model_validate_json(text)
    except ValidationError as e:
        raise DiagramSyntaxError(f"Malformed positroid file: {e}")

    if data.n <= 0 or not 0 <= data.r <= data.n:
        raise DiagramSyntaxError(f"Positroid file has n={data.n}, r={data.r}")
    for basis in data.bases:
        if len(set(basis)) != len(basis):
            raise DiagramSyntaxError(f"Basis {basis} repeats a label")

    try:
        return Positroid(
            n=data.n, r=data.r, bases=tuple(tuple(basis) for basis in data.bases)
        )
    except ValueError as e:
        raise DiagramSyntaxError(f"Invalid positroid file: {e}")


def positroid_to_dict(positroid: Positroid) -> dict:
    return {
        "n": positroid.n,
        "r": positroid.r,
        "bases": [list(basis) for basis in positroid.bases],
    }


def looks_like_positroid(text: str) -> bool:
    """True if the file content is a JSON object carrying a "bases" field"""
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return False
    return isinstance(data, dict) and "bases" in data
