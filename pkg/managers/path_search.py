# managers/path_search.py


import logging
from typing import List, Optional, Set, Tuple

from models.le_graph import LeGraph, Vertex

Path = Tuple[Vertex, ...]


class DisjointPathSearch:
    """
    Backtracking search for vertex-disjoint path families.

    Sources are routed in increasing label order and successors are tried in
    vertex order (reversed when descending=True), so the first family found
    is the lexicographically least (or greatest) one.
    """

    def __init__(self, graph: LeGraph, descending: bool = False):
        self.graph = graph
        self.descending = descending
        self.logger = logging.getLogger("path_search")

    def find_family(
        self, sources: List[int], sinks: List[int]
    ) -> Optional[Tuple[Path, ...]]:
        sources = sorted(sources)
        targets = set(sinks)
        if len(sources) != len(targets):
            return None

        used: Set[Vertex] = set()
        family: List[Path] = []
        if self._route_from(0, sources, targets, used, family):
            return tuple(family)
        self.logger.debug(f"No vertex-disjoint family from {sources} to {sorted(sinks)}")
        return None

    def _route_from(self, index, sources, targets, used, family) -> bool:
        if index == len(sources):
            return True
        start = Vertex.boundary(sources[index])
        used.add(start)
        found = self._extend([start], index, sources, targets, used, family)
        if not found:
            used.discard(start)
        return found

    def _extend(self, path, index, sources, targets, used, family) -> bool:
        here = path[-1]
        if not here.is_dot and len(path) > 1:
            # reached the boundary: only an unused target ends a path
            if here.label not in targets:
                return False
            targets.discard(here.label)
            family.append(tuple(path))
            if self._route_from(index + 1, sources, targets, used, family):
                return True
            family.pop()
            targets.add(here.label)
            return False

        successors = sorted(
            (edge.head for edge in self.graph.out_edges(here)),
            reverse=self.descending,
        )
        for nxt in successors:
            if nxt in used:
                continue
            used.add(nxt)
            path.append(nxt)
            if self._extend(path, index, sources, targets, used, family):
                return True
            path.pop()
            used.discard(nxt)
        return False
