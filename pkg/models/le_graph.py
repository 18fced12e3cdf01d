# models/le_graph.py

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, List, Tuple

import networkx as nx


class EdgeDirection(Enum):
    LEFT = "left"
    DOWN = "down"


@dataclass(frozen=True, order=True)
class Vertex:
    """A boundary node (identified by label) or a dot (identified by box)"""

    is_dot: bool
    label: int = 0
    row: int = 0
    col: int = 0

    @classmethod
    def boundary(cls, label: int) -> "Vertex":
        return cls(False, label=label)

    @classmethod
    def dot(cls, row: int, col: int) -> "Vertex":
        return cls(True, row=row, col=col)

    @property
    def vertex_id(self) -> str:
        if self.is_dot:
            return f"d{self.row}.{self.col}"
        return f"b{self.label}"

    def __str__(self):
        return self.vertex_id


@dataclass(frozen=True, order=True)
class Edge:
    tail: Vertex
    head: Vertex
    direction: EdgeDirection = field(compare=False)

    @property
    def edge_id(self) -> str:
        return f"{self.tail.vertex_id}->{self.head.vertex_id}"

    def __str__(self):
        return self.edge_id


@dataclass(frozen=True)
class LeGraph:
    n: int
    sources: FrozenSet[int]  # labels of V-nodes
    sinks: FrozenSet[int]  # labels of H-nodes
    dots: Tuple[Vertex, ...]
    edges: Tuple[Edge, ...]

    @property
    def boundary_basis(self) -> Tuple[int, ...]:
        return tuple(sorted(self.sources))

    @property
    def rank(self) -> int:
        return len(self.sources)

    @cached_property
    def vertices(self) -> Tuple[Vertex, ...]:
        boundary = tuple(Vertex.boundary(label) for label in range(1, self.n + 1))
        return boundary + tuple(sorted(self.dots))

    @cached_property
    def _out_edges(self) -> Dict[Vertex, Tuple[Edge, ...]]:
        table: Dict[Vertex, List[Edge]] = defaultdict(list)
        for edge in self.edges:
            table[edge.tail].append(edge)
        return {vertex: tuple(sorted(edges)) for vertex, edges in table.items()}

    @cached_property
    def _in_edges(self) -> Dict[Vertex, Tuple[Edge, ...]]:
        table: Dict[Vertex, List[Edge]] = defaultdict(list)
        for edge in self.edges:
            table[edge.head].append(edge)
        return {vertex: tuple(sorted(edges)) for vertex, edges in table.items()}

    def out_edges(self, vertex: Vertex) -> Tuple[Edge, ...]:
        return self._out_edges.get(vertex, ())

    def in_edges(self, vertex: Vertex) -> Tuple[Edge, ...]:
        return self._in_edges.get(vertex, ())

    def incident_edges(self, vertex: Vertex) -> Tuple[Edge, ...]:
        return self.in_edges(vertex) + self.out_edges(vertex)

    @cached_property
    def _edge_lookup(self) -> Dict[Tuple[Vertex, Vertex], Edge]:
        return {(edge.tail, edge.head): edge for edge in self.edges}

    def edge_between(self, tail: Vertex, head: Vertex) -> Edge:
        return self._edge_lookup[(tail, head)]

    def is_source(self, vertex: Vertex) -> bool:
        return not vertex.is_dot and vertex.label in self.sources

    def edges_in_direction(self, direction: EdgeDirection) -> List[Edge]:
        return [edge for edge in self.edges if edge.direction is direction]

    def to_networkx(self) -> nx.DiGraph:
        """Unit-capacity directed graph over the same vertices"""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            graph.add_edge(edge.tail, edge.head, capacity=1)
        return graph

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.to_networkx())

    def topological_order(self) -> List[Vertex]:
        return list(nx.lexicographical_topological_sort(self.to_networkx()))
