# lediagram.py - Le-diagrams: parsing, validation, generation, Le-graphs

import logging
from typing import FrozenSet, Iterable, List, Set

from diagram_validator import (
    DiagramValidator,
    DiagramViolation,
    ViolationKind,
    has_dot_above,
    has_dot_left,
)
from models.errors import DiagramShapeError, LeViolationError
from models.le_diagram import Box, LeDiagram, Step
from models.le_graph import Edge, EdgeDirection, LeGraph, Vertex
from utils.json_diagram import convert_diagram_json
from utils.rng import make_rng

logger = logging.getLogger("lediagram")


def parse_diagram(text: str) -> LeDiagram:
    """Parse diagram file content; raises unless every invariant holds"""
    diagram = convert_diagram_json(text)
    violations = validate(diagram)

    shape_errors = [v for v in violations if v.kind is not ViolationKind.LE_VIOLATION]
    if shape_errors:
        raise DiagramShapeError("; ".join(v.message for v in shape_errors))
    if violations:
        raise LeViolationError(violations[0].box)

    logger.debug(
        f"Parsed diagram n={diagram.n} r={diagram.r} steps={diagram.steps_string} "
        f"dots={len(diagram.dots)}"
    )
    return diagram


def validate(diagram: LeDiagram) -> List[DiagramViolation]:
    return DiagramValidator().validate(diagram)


def boundary_basis(diagram: LeDiagram) -> FrozenSet[int]:
    return frozenset(diagram.vertical_labels)


def le_closure(diagram: LeDiagram, boxes: Iterable[Box]) -> FrozenSet[Box]:
    """Smallest superset of boxes satisfying the Le-condition"""
    closed: Set[Box] = set(boxes)
    changed = True
    while changed:
        changed = False
        current = diagram.with_dots(closed)
        for box in diagram.boxes():
            if box in closed:
                continue
            if has_dot_above(current, box) and has_dot_left(current, box):
                closed.add(box)
                current = diagram.with_dots(closed)
                changed = True
    return frozenset(closed)


def build_le_graph(diagram: LeDiagram) -> LeGraph:
    """
    Build the Le-graph: each row chains its V-node and dots right to left,
    each column chains its dots and H-node top to bottom.
    """
    edges: List[Edge] = []

    for row in range(1, diagram.num_rows + 1):
        row_dots = sorted(
            (c for (r, c) in diagram.dots if r == row), reverse=True
        )
        chain = [Vertex.boundary(diagram.row_label(row))]
        chain += [Vertex.dot(row, col) for col in row_dots]
        for tail, head in zip(chain, chain[1:]):
            edges.append(Edge(tail, head, EdgeDirection.LEFT))

    for col in range(1, diagram.num_columns + 1):
        col_dots = sorted(r for (r, c) in diagram.dots if c == col)
        chain = [Vertex.dot(row, col) for row in col_dots]
        chain.append(Vertex.boundary(diagram.column_label(col)))
        for tail, head in zip(chain, chain[1:]):
            edges.append(Edge(tail, head, EdgeDirection.DOWN))

    graph = LeGraph(
        n=diagram.n,
        sources=frozenset(diagram.vertical_labels),
        sinks=frozenset(diagram.horizontal_labels),
        dots=tuple(Vertex.dot(row, col) for row, col in diagram.sorted_dots()),
        edges=tuple(sorted(edges)),
    )
    logger.debug(
        f"Built Le-graph: {len(graph.dots)} dots, "
        f"{len(graph.edges_in_direction(EdgeDirection.LEFT))} left edges, "
        f"{len(graph.edges_in_direction(EdgeDirection.DOWN))} down edges"
    )
    return graph


def random_diagram(n: int, r: int, density: float, seed: int) -> LeDiagram:
    """
    Uniform lattice path, independent dots with probability density, then
    closed under the Le-condition. Deterministic in seed.
    """
    if not 0 <= r <= n:
        raise ValueError(f"Rank must satisfy 0 <= r <= n, got r={r}, n={n}")
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"Density must lie in [0, 1], got {density}")

    rng = make_rng(seed)
    vertical = set(rng.sample(range(n), r))
    steps = tuple(Step.V if i in vertical else Step.H for i in range(n))
    empty = LeDiagram(n, r, steps)

    dots = [box for box in empty.boxes() if rng.random() < density]
    diagram = empty.with_dots(le_closure(empty, dots))
    logger.debug(
        f"Random diagram seed={seed}: steps={diagram.steps_string}, "
        f"{len(diagram.dots)} dots"
    )
    return diagram
