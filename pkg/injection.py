# injection.py - marker-walk injection between pairs of positroid bases

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterable, List, Optional, Tuple

from config import STEP_GUARD_FACTOR
from managers.path_search import DisjointPathSearch
from models.coloring import (
    Color,
    ColoredConfig,
    InjectionFailure,
    InjectionReport,
    MarkerStep,
    PathFamily,
    WalkResult,
)
from models.errors import (
    BasisSizeError,
    InjectionPreconditionError,
    InvariantError,
    LabelError,
    MalformedConfigError,
    SameElementError,
)
from models.le_graph import Edge, LeGraph, Vertex
from models.positroid import Basis, Positroid
from positroid import minor
from utils.label_utils import normalize_labels

logger = logging.getLogger("injection")


class InjectionEngine:
    """
    Runs the marker walk on one Le-graph.

    Forward walk: a blue marker moves against the flow of blue edges, a green
    marker with the flow of green edges. The reverse walk swaps the
    directions (green against the flow, blue with it). In both, the marker
    changes color on arriving at a vertex that touches both colors, and the
    traversed edge's token switches from the marker's color to the other.
    """

    def __init__(self, graph: LeGraph, descending: bool = False):
        self.graph = graph
        self.search = DisjointPathSearch(graph, descending=descending)
        self.step_guard = STEP_GUARD_FACTOR * len(graph.edges)
        self.logger = logging.getLogger("injection")
        self._families: Dict[Basis, PathFamily] = {}

    def check_pair(self, e: int, f: int):
        if e == f:
            raise SameElementError(e)
        for label in (e, f):
            if not 1 <= label <= self.graph.n:
                raise LabelError(f"Label {label} outside 1..{self.graph.n}")

    def _check_basis(self, basis: Iterable[int]) -> Basis:
        basis = normalize_labels(basis, self.graph.n)
        if len(basis) != self.graph.rank:
            raise BasisSizeError(
                f"Subset {basis} has size {len(basis)}, rank is {self.graph.rank}"
            )
        return basis

    def canonical_family(self, basis: Iterable[int]) -> PathFamily:
        """Lexicographically least (or greatest) vertex-disjoint family for a basis"""
        basis = self._check_basis(basis)
        if basis in self._families:
            return self._families[basis]

        boundary = set(self.graph.sources)
        removed = sorted(boundary - set(basis))
        added = sorted(set(basis) - boundary)
        paths = self.search.find_family(removed, added)
        if paths is None:
            raise InjectionPreconditionError(
                f"{basis} is not represented by a vertex-disjoint path family"
            )

        family = PathFamily(basis=basis, paths=paths)
        self._families[basis] = family
        return family

    def initial_config(self, b1: Iterable[int], b2: Iterable[int]) -> ColoredConfig:
        config = ColoredConfig()
        for color, basis in ((Color.BLUE, b1), (Color.GREEN, b2)):
            family = self.canonical_family(basis)
            for tail, head in family.arcs:
                config.tokens[color].add(self.graph.edge_between(tail, head))
        return config

    def run_injection(
        self, e: int, f: int, b1: Iterable[int], b2: Iterable[int]
    ) -> WalkResult:
        """Map (B1, B2) with e, f in B1 and e, f not in B2 to the image pair"""
        self.check_pair(e, f)
        b1 = self._check_basis(b1)
        b2 = self._check_basis(b2)
        if not {e, f}.issubset(b1):
            raise InjectionPreconditionError(f"B1={b1} must contain both {e} and {f}")
        if {e, f} & set(b2):
            raise InjectionPreconditionError(f"B2={b2} must avoid both {e} and {f}")

        config = self.initial_config(b1, b2)
        trace = self._walk(config, e, f, forward=True)
        result = WalkResult(
            config=config,
            blue_basis=self.basis_of_color(config, Color.BLUE),
            green_basis=self.basis_of_color(config, Color.GREEN),
            trace=trace,
        )
        self.logger.debug(
            f"Injection e={e} f={f}: ({b1}, {b2}) -> "
            f"({result.blue_basis}, {result.green_basis}) in {len(trace)} steps"
        )
        return result

    def run_reverse(self, e: int, f: int, config: ColoredConfig) -> WalkResult:
        """Reverse walk on a copy of config; flags results outside the forward domain"""
        self.check_pair(e, f)
        config = config.copy()
        trace = self._walk(config, e, f, forward=False)
        blue = self.basis_of_color(config, Color.BLUE)
        green = self.basis_of_color(config, Color.GREEN)
        in_image = {e, f}.issubset(blue) and not ({e, f} & set(green))
        if not in_image:
            self.logger.info(
                f"Reverse walk e={e} f={f} left the forward domain: ({blue}, {green})"
            )
        return WalkResult(config, blue, green, trace, in_image=in_image)

    def reverse_bases(
        self, e: int, f: int, b1: Iterable[int], b2: Iterable[int]
    ) -> WalkResult:
        """Reverse walk starting from the canonical coloring of (B1', B2')"""
        self.check_pair(e, f)
        b1 = self._check_basis(b1)
        b2 = self._check_basis(b2)
        if e not in b1 or f in b1:
            raise InjectionPreconditionError(f"B1'={b1} must contain {e} and avoid {f}")
        if f not in b2 or e in b2:
            raise InjectionPreconditionError(f"B2'={b2} must contain {f} and avoid {e}")
        return self.run_reverse(e, f, self.initial_config(b1, b2))

    def basis_of_color(self, config: ColoredConfig, color: Color) -> Basis:
        """(B - S) | T where S, T are the sources and sinks used by the color"""
        if config.marker is not None:
            raise MalformedConfigError("Cannot read bases while the marker is placed")

        used_sources, used_sinks = set(), set()
        for vertex in self.graph.vertices:
            into = sum(1 for edge in self.graph.in_edges(vertex) if config.has(edge, color))
            out = sum(1 for edge in self.graph.out_edges(vertex) if config.has(edge, color))
            if vertex.is_dot:
                if into != out or into > 1:
                    raise MalformedConfigError(
                        f"{color.value} tokens at {vertex} have in-degree {into}, "
                        f"out-degree {out}"
                    )
            elif out:
                used_sources.add(vertex.label)
            elif into:
                used_sinks.add(vertex.label)

        return tuple(sorted((set(self.graph.sources) - used_sources) | used_sinks))

    def _walk(
        self, config: ColoredConfig, e: int, f: int, forward: bool
    ) -> List[MarkerStep]:
        start = Vertex.boundary(f)
        avoided = Vertex.boundary(e)
        colored = [
            (edge, color)
            for edge in self.graph.incident_edges(start)
            for color in Color
            if config.has(edge, color)
        ]
        if not colored:
            raise MalformedConfigError(f"No colored edge at f={f}")
        if len(colored) > 1:
            raise MalformedConfigError(
                f"Expected one colored edge at f={f}, found {len(colored)}"
            )

        config.marker = start
        config.marker_color = colored[0][1]
        config.last_edge = None
        trace: List[MarkerStep] = []

        while True:
            if len(trace) >= self.step_guard:
                raise InvariantError(f"Marker walk exceeded {self.step_guard} steps")

            here = config.marker
            color = config.marker_color
            against_flow = (color is Color.BLUE) == forward
            edge = self._next_edge(config, here, color, against_flow)
            arrival = edge.tail if against_flow else edge.head

            toggled = self._touches_both(config, arrival)
            self._flip(config, edge, color)
            config.marker = arrival
            config.last_edge = edge
            if toggled:
                config.marker_color = color.other()

            trace.append(MarkerStep(arrival, config.marker_color, edge, toggled))
            self.logger.debug(
                f"  step {len(trace)}: {here} -> {arrival} via {edge} "
                f"as {color.value}{' (toggled)' if toggled else ''}"
            )

            if forward and arrival == avoided:
                raise InvariantError(f"Marker entered e={e}")
            if forward and arrival == start:
                raise InvariantError(f"Marker returned to f={f}")
            self._check_balance(config, here)

            if not arrival.is_dot:
                break

        config.marker = None
        config.marker_color = None
        config.last_edge = None
        return trace

    def _next_edge(
        self, config: ColoredConfig, here: Vertex, color: Color, against_flow: bool
    ) -> Edge:
        edges = self.graph.in_edges(here) if against_flow else self.graph.out_edges(here)
        candidates = [edge for edge in edges if config.has(edge, color)]
        if len(candidates) > 1:
            candidates = [edge for edge in candidates if edge != config.last_edge]
        if len(candidates) != 1:
            raise InvariantError(
                f"{color.value} marker at {here} has {len(candidates)} edges to follow"
            )
        return candidates[0]

    def _touches_both(self, config: ColoredConfig, vertex: Vertex) -> bool:
        incident = self.graph.incident_edges(vertex)
        return any(config.has(edge, Color.BLUE) for edge in incident) and any(
            config.has(edge, Color.GREEN) for edge in incident
        )

    def _flip(self, config: ColoredConfig, edge: Edge, color: Color):
        other = color.other()
        if config.has(edge, other):
            raise InvariantError(f"Edge {edge} would carry two {other.value} tokens")
        config.tokens[color].remove(edge)
        config.tokens[other].add(edge)

    def _check_balance(self, config: ColoredConfig, vertex: Vertex):
        if not vertex.is_dot:
            return
        for color in Color:
            into = sum(1 for edge in self.graph.in_edges(vertex) if config.has(edge, color))
            out = sum(1 for edge in self.graph.out_edges(vertex) if config.has(edge, color))
            if into != out or into > 1:
                raise InvariantError(
                    f"{color.value} tokens unbalanced at {vertex} after the marker left"
                )


def canonical_family(graph: LeGraph, basis: Iterable[int]) -> PathFamily:
    return InjectionEngine(graph).canonical_family(basis)


def initial_config(graph: LeGraph, b1: Iterable[int], b2: Iterable[int]) -> ColoredConfig:
    return InjectionEngine(graph).initial_config(b1, b2)


def run_injection(
    graph: LeGraph, e: int, f: int, b1: Iterable[int], b2: Iterable[int]
) -> WalkResult:
    return InjectionEngine(graph).run_injection(e, f, b1, b2)


def run_reverse(
    graph: LeGraph,
    e: int,
    f: int,
    config: Optional[ColoredConfig] = None,
    b1: Optional[Iterable[int]] = None,
    b2: Optional[Iterable[int]] = None,
) -> WalkResult:
    """Reverse a colored configuration, or the canonical coloring of (B1', B2')"""
    engine = InjectionEngine(graph)
    if config is not None:
        return engine.run_reverse(e, f, config)
    if b1 is None or b2 is None:
        raise ValueError("Either a configuration or both bases are required")
    return engine.reverse_bases(e, f, b1, b2)


def basis_of_color(graph: LeGraph, config: ColoredConfig, color: Color) -> Basis:
    return InjectionEngine(graph).basis_of_color(config, color)


def _check_one(
    engine: InjectionEngine,
    positroid: Positroid,
    e: int,
    f: int,
    b1: Basis,
    b2: Basis,
) -> Tuple[Optional[WalkResult], Optional[str]]:
    """Run one input; returns the forward result and a failure reason (or None)"""
    try:
        before = engine.initial_config(b1, b2).snapshot()
        result = engine.run_injection(e, f, b1, b2)
    except (InvariantError, MalformedConfigError, InjectionPreconditionError) as exc:
        return None, f"forward walk failed: {exc}"

    blue, green = result.blue_basis, result.green_basis
    if not (positroid.contains(blue) and e in blue and f not in blue):
        return result, f"B1'={blue} is not a basis containing {e} and avoiding {f}"
    if not (positroid.contains(green) and f in green and e not in green):
        return result, f"B2'={green} is not a basis containing {f} and avoiding {e}"
    if Counter(b1) + Counter(b2) != Counter(blue) + Counter(green):
        return result, "multiset union of the pair changed"

    try:
        back = engine.run_reverse(e, f, result.config)
    except (InvariantError, MalformedConfigError) as exc:
        return result, f"reverse walk failed: {exc}"
    if back.config.snapshot() != before:
        return result, "reverse walk did not restore the input configuration"
    return result, None


def verify_injection(
    graph: LeGraph,
    positroid: Positroid,
    e: int,
    f: int,
    alternate: bool = False,
    workers: int = 1,
) -> InjectionReport:
    """
    Run the injection on every pair of the domain and check codomain
    membership, injectivity, multiset preservation and the round trip.
    Failures are recorded, never raised.
    """
    engine = InjectionEngine(graph)
    engine.check_pair(e, f)

    with_both = minor(positroid, {e, f}, ())
    with_neither = minor(positroid, (), {e, f})
    only_e = minor(positroid, {e}, {f})
    only_f = minor(positroid, {f}, {e})
    inputs = [(b1, b2) for b1 in with_both for b2 in with_neither]

    report = InjectionReport(
        pair=(e, f),
        domain_size=len(inputs),
        codomain_size=len(only_e) * len(only_f),
    )

    def check(pair):
        return _check_one(engine, positroid, e, f, *pair)

    if workers > 1 and len(inputs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(check, inputs))
    else:
        outcomes = [check(pair) for pair in inputs]

    images: Dict[Tuple[Basis, Basis], Tuple[Basis, Basis]] = {}
    for (b1, b2), (result, reason) in zip(inputs, outcomes):
        if result is not None:
            report.max_steps = max(report.max_steps, len(result.trace))
        if reason is not None:
            report.failures.append(InjectionFailure(b1, b2, reason))
            continue
        image = (result.blue_basis, result.green_basis)
        if image in images:
            first = images[image]
            report.failures.append(
                InjectionFailure(b1, b2, f"image {image} already produced by {first}")
            )
            continue
        images[image] = (b1, b2)
    report.image_size = len(images)

    if alternate:
        report.findings.extend(_compare_alternate(graph, e, f, inputs, outcomes))

    if report.failures:
        logger.warning(
            f"Injection e={e} f={f}: {len(report.failures)} failures "
            f"out of {report.domain_size} inputs"
        )
    return report


def _compare_alternate(graph, e, f, inputs, outcomes) -> List[str]:
    """Re-run with reverse-lexicographic families; report differing outputs"""
    alternate_engine = InjectionEngine(graph, descending=True)
    findings = []
    for (b1, b2), (result, _) in zip(inputs, outcomes):
        if result is None:
            continue
        try:
            other = alternate_engine.run_injection(e, f, b1, b2)
        except (InvariantError, MalformedConfigError, InjectionPreconditionError) as exc:
            findings.append(f"({b1}, {b2}): alternate families failed: {exc}")
            continue
        if (other.blue_basis, other.green_basis) != (result.blue_basis, result.green_basis):
            findings.append(
                f"({b1}, {b2}): canonical families give "
                f"({result.blue_basis}, {result.green_basis}), alternate families give "
                f"({other.blue_basis}, {other.green_basis})"
            )
    return findings


def verify_all_pairs(
    graph: LeGraph, positroid: Positroid, alternate: bool = False, workers: int = 1
) -> List[InjectionReport]:
    logger.info(f"=== VERIFYING INJECTION === all ordered pairs, n={graph.n}")
    return [
        verify_injection(graph, positroid, e, f, alternate=alternate, workers=workers)
        for e in range(1, graph.n + 1)
        for f in range(1, graph.n + 1)
        if e != f
    ]
