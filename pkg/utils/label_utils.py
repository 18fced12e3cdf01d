# utils/label_utils.py

from typing import Iterable, Optional, Tuple

from models.errors import LabelError

Basis = Tuple[int, ...]


def normalize_labels(labels: Iterable[int], n: Optional[int] = None) -> Basis:
    """Sorted tuple of distinct labels, range-checked against 1..n when given"""
    labels = list(labels)
    if len(set(labels)) != len(labels):
        raise LabelError(f"Repeated label in {labels}")
    if n is not None:
        for label in labels:
            if not 1 <= label <= n:
                raise LabelError(f"Label {label} outside 1..{n}")
    return tuple(sorted(labels))


def parse_labels(text: str, n: Optional[int] = None) -> Basis:
    """Parse '2,6,7' (empty string means the empty set)"""
    text = text.strip()
    if not text:
        return ()
    try:
        labels = [int(part) for part in text.split(",")]
    except ValueError:
        raise LabelError(f"Labels must be comma-separated integers, got {text!r}")
    return normalize_labels(labels, n)
