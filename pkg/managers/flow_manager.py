# managers/flow_manager.py


import logging
from typing import Iterable

import networkx as nx
import networkx.algorithms.flow as flow

from models.le_graph import LeGraph, Vertex

SUPER_SOURCE = "source"
SUPER_SINK = "sink"
IN = "in"
OUT = "out"


class FlowManager:
    """Unit-capacity flow queries on one Le-graph"""

    def __init__(self, graph: LeGraph):
        self.graph = graph
        self.network = graph.to_networkx()
        self.split_network = self._split_vertices()
        self.logger = logging.getLogger("flow_manager")

    def max_vertex_disjoint_paths(
        self, sources: Iterable[int], sinks: Iterable[int]
    ) -> int:
        """Maximum number of pairwise vertex-disjoint paths from sources to sinks"""
        sources = list(sources)
        sinks = list(sinks)
        if not sources or not sinks:
            return 0

        network = self.split_network.copy()
        for label in sources:
            network.add_edge(SUPER_SOURCE, (Vertex.boundary(label), IN), capacity=1)
        for label in sinks:
            network.add_edge((Vertex.boundary(label), OUT), SUPER_SINK, capacity=1)
        value = flow.maximum_flow_value(network, SUPER_SOURCE, SUPER_SINK)
        self.logger.debug(f"Vertex-disjoint flow {sources} -> {sinks}: value {value}")
        return value

    def max_edge_disjoint_walks(
        self, sources: Iterable[int], sinks: Iterable[int]
    ) -> int:
        """Maximum number of pairwise edge-disjoint walks; walks may share dots"""
        sources = list(sources)
        sinks = list(sinks)
        if not sources or not sinks:
            return 0

        network = self.network.copy()
        for label in sources:
            network.add_edge(SUPER_SOURCE, Vertex.boundary(label), capacity=1)
        for label in sinks:
            network.add_edge(Vertex.boundary(label), SUPER_SINK, capacity=1)
        value = flow.maximum_flow_value(network, SUPER_SOURCE, SUPER_SINK)
        self.logger.debug(f"Edge-disjoint flow {sources} -> {sinks}: value {value}")
        return value

    def routes(
        self,
        sources: Iterable[int],
        sinks: Iterable[int],
        vertex_disjoint: bool = True,
    ) -> bool:
        """True iff every source can be matched to a sink by disjoint paths"""
        sources = list(sources)
        if vertex_disjoint:
            return self.max_vertex_disjoint_paths(sources, sinks) == len(sources)
        return self.max_edge_disjoint_walks(sources, sinks) == len(sources)

    def _split_vertices(self) -> nx.DiGraph:
        # every vertex becomes in -> out with capacity 1; graph edges run out -> in
        network = nx.DiGraph()
        for vertex in self.graph.vertices:
            network.add_edge((vertex, IN), (vertex, OUT), capacity=1)
        for edge in self.graph.edges:
            network.add_edge((edge.tail, OUT), (edge.head, IN), capacity=1)
        return network
