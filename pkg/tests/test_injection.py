from collections import Counter

import pytest

from injection import (
    InjectionEngine,
    basis_of_color,
    canonical_family,
    initial_config,
    run_injection,
    run_reverse,
    verify_all_pairs,
    verify_injection,
)
from lediagram import build_le_graph, random_diagram
from models.coloring import Color, ColoredConfig
from models.errors import (
    InjectionPreconditionError,
    MalformedConfigError,
    SameElementError,
)
from models.le_graph import Vertex
from positroid import enumerate_bases

b = Vertex.boundary
d = Vertex.dot


def test_canonical_family_of_267(running_graph):
    family = canonical_family(running_graph, (2, 6, 7))
    assert family.paths == (
        (b(3), d(2, 3), d(2, 2), d(2, 1), b(7)),
        (b(5), d(3, 2), b(6)),
    )
    assert family.sources == [3, 5]
    assert family.sinks == [7, 6]


def test_canonical_family_of_356(running_graph):
    family = canonical_family(running_graph, (3, 5, 6))
    assert family.paths == ((b(2), d(1, 2), d(2, 2), d(3, 2), b(6)),)
    assert family.to_payload()["paths"] == [["b2", "d1.2", "d2.2", "d3.2", "b6"]]


def test_canonical_family_of_boundary_basis(running_graph):
    assert canonical_family(running_graph, (2, 3, 5)).paths == ()


def test_alternate_family_is_vertex_disjoint(running_graph, running_bases):
    engine = InjectionEngine(running_graph, descending=True)
    for basis in running_bases:
        family = engine.canonical_family(basis)
        vertices = [v for path in family.paths for v in path]
        assert len(vertices) == len(set(vertices))


def test_initial_config_shares_an_edge(running_graph):
    config = initial_config(running_graph, (2, 6, 7), (3, 5, 6))
    assert len(config.all_colored_edges()) == 9
    assert [edge.edge_id for edge in config.doubly_colored()] == ["d3.2->b6"]
    assert config.marker is None


def test_initial_config_of_boundary_pair_is_empty(running_graph):
    config = initial_config(running_graph, (2, 3, 5), (2, 3, 5))
    assert config.all_colored_edges() == set()


def test_initial_config_of_same_basis_is_doubly_colored(running_graph):
    config = initial_config(running_graph, (2, 6, 7), (2, 6, 7))
    assert config.doubly_colored() == config.all_colored_edges()


def test_running_example_injection(running_graph):
    result = run_injection(running_graph, 2, 7, (2, 6, 7), (3, 5, 6))
    assert result.blue_basis == (2, 5, 6)
    assert result.green_basis == (3, 6, 7)
    assert [step.to_payload() for step in result.trace] == [
        {"at": "d2.1", "marker": "blue", "via": "d2.1->b7", "toggled": False},
        {"at": "d2.2", "marker": "green", "via": "d2.2->d2.1", "toggled": True},
        {"at": "d3.2", "marker": "blue", "via": "d2.2->d3.2", "toggled": True},
        {"at": "b5", "marker": "blue", "via": "b5->d3.2", "toggled": False},
    ]


def test_running_example_reverse_restores_input(running_graph):
    engine = InjectionEngine(running_graph)
    before = engine.initial_config((2, 6, 7), (3, 5, 6))
    result = engine.run_injection(2, 7, (2, 6, 7), (3, 5, 6))
    back = engine.run_reverse(2, 7, result.config)
    assert back.config.snapshot() == before.snapshot()
    assert (back.blue_basis, back.green_basis) == ((2, 6, 7), (3, 5, 6))
    assert back.in_image is True
    # the forward result itself is untouched
    assert result.blue_basis == basis_of_color(running_graph, result.config, Color.BLUE)


def test_reverse_flags_results_outside_the_domain(running_graph):
    result = run_reverse(running_graph, 3, 7, b1=(2, 3, 5), b2=(2, 5, 7))
    assert result.in_image is False
    assert (result.blue_basis, result.green_basis) == ((2, 5, 7), (2, 3, 5))
    assert result.to_payload()["in_image"] is False


def test_reverse_without_colored_edge_at_f(running_graph):
    config = initial_config(running_graph, (2, 3, 5), (2, 3, 5))
    with pytest.raises(MalformedConfigError):
        run_reverse(running_graph, 2, 7, config=config)


def test_run_reverse_needs_config_or_bases(running_graph):
    with pytest.raises(ValueError):
        run_reverse(running_graph, 2, 7)


def test_basis_of_color(running_graph):
    assert basis_of_color(running_graph, ColoredConfig(), Color.GREEN) == (2, 3, 5)
    config = initial_config(running_graph, (2, 6, 7), (3, 5, 6))
    assert basis_of_color(running_graph, config, Color.BLUE) == (2, 6, 7)
    assert basis_of_color(running_graph, config, Color.GREEN) == (3, 5, 6)


def test_basis_of_color_rejects_broken_paths(running_graph):
    config = initial_config(running_graph, (2, 6, 7), (3, 5, 6))
    config.tokens[Color.BLUE].remove(running_graph.edge_between(d(2, 2), d(2, 1)))
    with pytest.raises(MalformedConfigError):
        basis_of_color(running_graph, config, Color.BLUE)


def test_basis_of_color_refuses_placed_marker(running_graph):
    config = ColoredConfig(marker=b(7), marker_color=Color.BLUE)
    with pytest.raises(MalformedConfigError):
        basis_of_color(running_graph, config, Color.BLUE)


@pytest.mark.parametrize(
    "e, f, b1, b2, error",
    [
        (2, 2, (2, 6, 7), (3, 5, 6), SameElementError),
        (2, 7, (2, 3, 5), (3, 5, 6), InjectionPreconditionError),
        (2, 7, (2, 6, 7), (2, 3, 5), InjectionPreconditionError),
    ],
)
def test_injection_preconditions(running_graph, e, f, b1, b2, error):
    with pytest.raises(error):
        run_injection(running_graph, e, f, b1, b2)


def test_verify_injection_running_example(running_graph, running_positroid):
    report = verify_injection(running_graph, running_positroid, 2, 7)
    assert report.domain_size == 4
    assert report.codomain_size == 20
    assert report.image_size == 4
    assert report.holds
    assert report.max_steps <= 4 * len(running_graph.edges)


def test_verify_injection_vacuous_pair(running_graph, running_positroid):
    report = verify_injection(running_graph, running_positroid, 1, 2)
    assert report.domain_size == 0
    assert report.holds


def test_verify_all_pairs_running_example(running_graph, running_positroid):
    reports = verify_all_pairs(running_graph, running_positroid)
    assert len(reports) == 42
    assert all(report.holds for report in reports), [
        failure.to_payload() for report in reports for failure in report.failures
    ]


def test_verify_injection_with_workers(running_graph, running_positroid):
    serial = verify_injection(running_graph, running_positroid, 3, 6)
    parallel = verify_injection(running_graph, running_positroid, 3, 6, workers=3)
    assert serial.to_payload() == parallel.to_payload()


def test_alternate_families_mode(running_graph, running_positroid):
    report = verify_injection(running_graph, running_positroid, 2, 7, alternate=True)
    assert report.holds
    assert all(isinstance(finding, str) for finding in report.findings)


def test_full_square_preserves_multisets(square_graph):
    positroid = enumerate_bases(square_graph)
    engine = InjectionEngine(square_graph)
    for report in verify_all_pairs(square_graph, positroid):
        assert report.holds, report.to_payload()
    result = engine.run_injection(1, 3, (1, 3), (2, 4))
    assert Counter(result.blue_basis) + Counter(result.green_basis) == Counter((1, 2, 3, 4))
    assert 1 in result.blue_basis and 3 not in result.blue_basis


def test_injection_on_random_positroids():
    for seed in range(50):
        n = 3 + seed % 6
        r = 1 + seed % (n - 1)
        graph = build_le_graph(random_diagram(n, r, 0.6, seed))
        positroid = enumerate_bases(graph)
        for report in verify_all_pairs(graph, positroid):
            assert report.holds, (seed, report.to_payload())
