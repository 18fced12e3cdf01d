import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagram_validator import ViolationKind
from lediagram import (
    boundary_basis,
    build_le_graph,
    le_closure,
    parse_diagram,
    random_diagram,
    validate,
)
from models.errors import DiagramShapeError, DiagramSyntaxError, LeViolationError
from models.le_diagram import LeDiagram
from models.le_graph import EdgeDirection, Vertex
from utils.json_diagram import convert_diagram_json, diagram_to_json

RUNNING_EXAMPLE = {
    "n": 7,
    "r": 3,
    "steps": "HVVHVHH",
    "dots": [[1, 2], [2, 1], [2, 2], [2, 3], [3, 2]],
}


def as_text(data) -> str:
    return json.dumps(data)


def test_running_example_parses(running_diagram):
    assert running_diagram.n == 7
    assert running_diagram.r == 3
    assert running_diagram.vertical_labels == (2, 3, 5)
    assert running_diagram.horizontal_labels == (1, 4, 6, 7)
    assert running_diagram.widths == (3, 3, 2)
    assert boundary_basis(running_diagram) == frozenset({2, 3, 5})


def test_row_and_column_coordinates(running_diagram):
    assert [running_diagram.row_of(label) for label in (2, 3, 5)] == [1, 2, 3]
    assert [running_diagram.column_of(label) for label in (7, 6, 4, 1)] == [1, 2, 3, 4]
    assert running_diagram.column_label(1) == 7
    assert running_diagram.height(2) == 3
    assert running_diagram.height(4) == 0


def test_missing_dot_is_le_violation():
    data = dict(RUNNING_EXAMPLE, dots=[[1, 2], [2, 1], [2, 3], [3, 2]])
    with pytest.raises(LeViolationError) as excinfo:
        parse_diagram(as_text(data))
    assert excinfo.value.box == (2, 2)


def test_validate_reports_instead_of_raising():
    diagram = convert_diagram_json(
        as_text(dict(RUNNING_EXAMPLE, dots=[[1, 2], [2, 1], [2, 3], [3, 2]]))
    )
    violations = validate(diagram)
    assert [v.kind for v in violations] == [ViolationKind.LE_VIOLATION]
    assert violations[0].box == (2, 2)


def test_steps_length_mismatch():
    with pytest.raises(DiagramShapeError):
        parse_diagram(as_text(dict(RUNNING_EXAMPLE, steps="HVVHVH", dots=[])))


def test_rank_mismatch():
    with pytest.raises(DiagramShapeError):
        parse_diagram(as_text(dict(RUNNING_EXAMPLE, r=2, dots=[])))


def test_dot_outside_shape():
    with pytest.raises(DiagramShapeError):
        parse_diagram(as_text(dict(RUNNING_EXAMPLE, dots=[[3, 3]])))


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        as_text(dict(RUNNING_EXAMPLE, extra=1)),
        as_text(dict(RUNNING_EXAMPLE, n="7")),
        as_text(dict(RUNNING_EXAMPLE, steps="HVVXVHH")),
        as_text(dict(RUNNING_EXAMPLE, dots=[[1, 2, 3]])),
        as_text(dict(RUNNING_EXAMPLE, dots=[[1, 2], [1, 2]])),
    ],
)
def test_syntax_errors(text):
    with pytest.raises(DiagramSyntaxError):
        parse_diagram(text)


def test_empty_diagram_has_no_edges():
    graph = build_le_graph(parse_diagram(as_text({"n": 4, "r": 2, "steps": "VHVH"})))
    assert graph.edges == ()
    assert graph.boundary_basis == (1, 3)


def test_canonical_serialization_sorts_dots(running_diagram):
    text = diagram_to_json(running_diagram)
    assert json.loads(text) == RUNNING_EXAMPLE
    assert text.endswith("\n")
    shuffled = dict(RUNNING_EXAMPLE, dots=list(reversed(RUNNING_EXAMPLE["dots"])))
    assert diagram_to_json(parse_diagram(as_text(shuffled))) == text


def test_running_example_graph_edges(running_graph):
    b = Vertex.boundary
    d = Vertex.dot
    edges = {(edge.tail, edge.head) for edge in running_graph.edges}
    assert edges == {
        (b(2), d(1, 2)),
        (b(3), d(2, 3)),
        (d(2, 3), d(2, 2)),
        (d(2, 2), d(2, 1)),
        (b(5), d(3, 2)),
        (d(2, 1), b(7)),
        (d(1, 2), d(2, 2)),
        (d(2, 2), d(3, 2)),
        (d(3, 2), b(6)),
        (d(2, 3), b(4)),
    }
    assert len(running_graph.edges_in_direction(EdgeDirection.LEFT)) == 5
    assert len(running_graph.edges_in_direction(EdgeDirection.DOWN)) == 5
    assert running_graph.is_acyclic()


def test_vertex_ids(running_graph):
    ids = {vertex.vertex_id for vertex in running_graph.vertices}
    assert {"b1", "b7", "d2.1", "d3.2"} <= ids


def test_le_closure_adds_forced_dots(running_diagram):
    empty = running_diagram.with_dots(frozenset())
    closed = le_closure(empty, [(1, 2), (2, 1)])
    assert closed == frozenset({(1, 2), (2, 1), (2, 2)})


def test_le_closure_is_idempotent(running_diagram):
    empty = running_diagram.with_dots(frozenset())
    for seeds in [[(1, 2), (2, 1)], [(1, 2), (3, 1)], [(2, 3), (3, 1), (1, 3)], []]:
        closed = le_closure(empty, seeds)
        assert le_closure(empty, closed) == closed
        assert set(seeds) <= closed


def test_full_square_graph_edges(square_graph):
    assert len(square_graph.edges_in_direction(EdgeDirection.LEFT)) == 4
    assert len(square_graph.edges_in_direction(EdgeDirection.DOWN)) == 4
    assert square_graph.is_acyclic()


def test_random_diagram_is_deterministic():
    first = random_diagram(8, 3, 0.4, seed=11)
    second = random_diagram(8, 3, 0.4, seed=11)
    assert first == second
    assert validate(first) == []


@pytest.mark.parametrize("seed", range(20))
def test_random_diagram_density_extremes(seed):
    full = random_diagram(9, 4, 1.0, seed)
    assert full.dots == frozenset(full.boxes())
    empty = random_diagram(9, 4, 0.0, seed)
    assert empty.dots == frozenset()
    assert empty.steps == full.steps


@pytest.mark.parametrize("n, r, density", [(5, 6, 0.5), (5, -1, 0.5), (5, 2, 1.5)])
def test_random_diagram_rejects_bad_parameters(n, r, density):
    with pytest.raises(ValueError):
        random_diagram(n, r, density, seed=0)


@settings(max_examples=150, deadline=None)
@given(
    n=st.integers(min_value=1, max_value=12),
    data=st.data(),
    density=st.floats(min_value=0.0, max_value=1.0),
    seed=st.integers(min_value=0, max_value=10**6),
)
def test_random_graphs_are_acyclic_with_bounded_degree(n, data, density, seed):
    r = data.draw(st.integers(min_value=0, max_value=n))
    diagram = random_diagram(n, r, density, seed)
    assert validate(diagram) == []
    graph = build_le_graph(diagram)
    assert graph.is_acyclic()
    assert len(graph.topological_order()) == len(graph.vertices)

    for vertex in graph.vertices:
        out_edges = graph.out_edges(vertex)
        in_edges = graph.in_edges(vertex)
        if vertex.is_dot:
            assert len(out_edges) <= 2 and len(in_edges) <= 2
            assert len({e.direction for e in out_edges}) == len(out_edges)
        elif graph.is_source(vertex):
            assert in_edges == () and len(out_edges) <= 1
        else:
            assert out_edges == () and len(in_edges) <= 1


def test_with_dots_keeps_path():
    diagram = LeDiagram(4, 2, "VVHH")
    full = diagram.with_dots({(1, 1), (1, 2), (2, 1), (2, 2)})
    assert full.steps_string == "VVHH"
    assert len(list(full.boxes())) == 4
