from fractions import Fraction
from itertools import combinations

import pytest

from config import MAX_ENUMERATION_N
from lediagram import build_le_graph, parse_diagram, random_diagram
from managers.flow_manager import FlowManager
from models.errors import BasisSizeError, LabelError, OverlapError, SizeGuardError
from models.le_diagram import LeDiagram
from models.polynomial import monomial_of
from models.positroid import Positroid, as_weights
from positroid import (
    edge_disjoint_basis,
    enumerate_bases,
    enumerator_eval,
    enumerator_poly,
    exchange_check,
    find_exchange_violation,
    is_basis,
    minor,
    vertex_disjoint_basis,
    walk_oracle_disagreements,
)

ONES = tuple(Fraction(1) for _ in range(7))


def test_running_example_bases(running_positroid, running_bases):
    assert list(running_positroid.bases) == running_bases
    assert len(running_positroid) == 13


@pytest.mark.parametrize(
    "subset, expected",
    [((2, 6, 7), True), ((1, 2, 3), False), ((2, 3, 5), True), ((3, 4, 5), False)],
)
def test_is_basis(running_graph, subset, expected):
    assert is_basis(running_graph, subset) is expected


def test_is_basis_rejects_wrong_size(running_graph):
    with pytest.raises(BasisSizeError):
        is_basis(running_graph, (2, 3))


def test_is_basis_rejects_bad_labels(running_graph):
    with pytest.raises(LabelError):
        is_basis(running_graph, (2, 3, 9))
    with pytest.raises(LabelError):
        is_basis(running_graph, (2, 2, 3))


def test_flow_manager_counts_walks(running_graph):
    flows = FlowManager(running_graph)
    assert flows.max_vertex_disjoint_paths([3, 5], [6, 7]) == 2
    assert flows.max_vertex_disjoint_paths([2, 3], [6, 7]) == 1
    assert flows.max_edge_disjoint_walks([2, 3], [6, 7]) == 2
    assert flows.max_vertex_disjoint_paths([], [4]) == 0
    assert flows.max_edge_disjoint_walks([3, 5], [6, 7]) == 2
    assert flows.max_edge_disjoint_walks([2], [4]) == 0
    assert flows.max_edge_disjoint_walks([], [4]) == 0


def test_full_square_is_uniform(square_graph):
    assert list(enumerate_bases(square_graph).bases) == list(combinations(range(1, 5), 2))


def test_empty_diagram_has_one_basis():
    graph = build_le_graph(LeDiagram(4, 2, "VHVH"))
    assert enumerate_bases(graph).bases == ((1, 3),)


def test_enumeration_is_independent_of_workers(running_graph):
    assert enumerate_bases(running_graph, workers=4) == enumerate_bases(running_graph)


def test_enumeration_size_guard():
    graph = build_le_graph(LeDiagram(MAX_ENUMERATION_N + 1, 1, "V" + "H" * MAX_ENUMERATION_N))
    with pytest.raises(SizeGuardError):
        enumerate_bases(graph)


def test_minor_filters_bases(running_positroid, running_bases):
    assert minor(running_positroid, {2, 7}, ()) == [(2, 5, 7), (2, 6, 7)]
    assert minor(running_positroid, (), {2, 7}) == [
        (3, 5, 6),
        (4, 5, 6),
    ]
    assert minor(running_positroid, (1,), ()) == []
    assert minor(running_positroid) == running_bases


def test_minor_rejects_overlap(running_positroid):
    with pytest.raises(OverlapError):
        minor(running_positroid, {2}, {2, 7})


def test_enumerator_eval(running_positroid):
    assert enumerator_eval(running_positroid, ONES) == 13
    assert enumerator_eval(running_positroid, ONES, {2}, {7}) == 5
    assert enumerator_eval(running_positroid, ONES, {7}, {2}) == 4
    zero_first = as_weights([0, 1, 1, 1, 1, 1, 1], 7)
    assert enumerator_eval(running_positroid, zero_first) == 13
    zero_second = as_weights([1, 0, 1, 1, 1, 1, 1], 7)
    assert enumerator_eval(running_positroid, zero_second) == 6


def test_enumerator_eval_is_exact(running_positroid):
    weights = as_weights(["1/2", 1, 1, 1, 1, 1, "1/3"], 7)
    value = enumerator_eval(running_positroid, weights)
    assert value == enumerator_poly(running_positroid).evaluate(weights)
    assert isinstance(value, Fraction)


def test_enumerator_eval_rejects_short_weights(running_positroid):
    with pytest.raises(ValueError):
        enumerator_eval(running_positroid, ONES[:-1])


def test_enumerator_poly_of_running_example(running_positroid):
    poly = enumerator_poly(running_positroid)
    assert len(poly) == 13
    assert poly.is_multilinear()
    assert poly.coefficient(monomial_of((2, 6, 7))) == 1
    assert poly.coefficient(monomial_of((1, 2, 3))) == 0


def test_single_element_minor_identity(running_positroid):
    full = enumerator_poly(running_positroid)
    for e in range(1, 8):
        for f in range(1, 8):
            if e == f:
                continue
            expected = full.derivative(e).substitute_zero(f).times_variable(e)
            assert enumerator_poly(running_positroid, {e}, {f}) == expected


def test_exchange_check(running_positroid):
    assert exchange_check(running_positroid)
    assert find_exchange_violation(running_positroid) is None


def test_exchange_violation_witness():
    not_a_matroid = Positroid(n=4, r=2, bases=((1, 2), (3, 4)))
    assert find_exchange_violation(not_a_matroid) == ((1, 2), (3, 4), 1)
    assert not exchange_check(not_a_matroid)


def test_paths_sharing_a_dot_do_not_make_a_basis(running_graph):
    assert edge_disjoint_basis(running_graph, (5, 6, 7))
    assert not is_basis(running_graph, (5, 6, 7))
    assert not vertex_disjoint_basis(running_graph, (5, 6, 7))


def test_running_example_oracles_agree(running_graph, running_bases):
    assert walk_oracle_disagreements(running_graph) == [(5, 6, 7)]
    for subset in running_bases:
        assert vertex_disjoint_basis(running_graph, subset)


def test_random_positroids_are_matroids():
    for seed in range(200):
        n = 3 + seed % 7
        r = seed % (n + 1)
        positroid = enumerate_bases(build_le_graph(random_diagram(n, r, 0.5, seed)))
        assert exchange_check(positroid), f"seed {seed}"


def test_flow_and_vertex_disjoint_oracles_agree():
    for seed in range(60):
        n = 3 + seed % 6
        r = seed % (n + 1)
        graph = build_le_graph(random_diagram(n, r, 0.6, seed))
        flows = FlowManager(graph)
        for subset in combinations(range(1, n + 1), r):
            vertex_disjoint = vertex_disjoint_basis(graph, subset)
            assert is_basis(graph, subset, flows) is vertex_disjoint, f"seed {seed}"
            if vertex_disjoint:
                assert edge_disjoint_basis(graph, subset, flows), f"seed {seed}"
        for subset in walk_oracle_disagreements(graph):
            assert not is_basis(graph, subset, flows), f"seed {seed}"


def test_positroid_rejects_bad_bases():
    with pytest.raises(ValueError):
        Positroid(n=3, r=2, bases=())
    with pytest.raises(ValueError):
        Positroid(n=3, r=2, bases=((1,),))
    with pytest.raises(ValueError):
        Positroid(n=3, r=1, bases=((4,),))


def test_diagram_file_round_trip_through_enumeration(diagram_path):
    with open(diagram_path("full_square.json")) as f:
        graph = build_le_graph(parse_diagram(f.read()))
    assert len(enumerate_bases(graph)) == 6
