# models/coloring.py

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from models.le_graph import Edge, Vertex
from models.positroid import Basis


class Color(Enum):
    BLUE = "blue"
    GREEN = "green"

    def other(self) -> "Color":
        return Color.GREEN if self is Color.BLUE else Color.BLUE


@dataclass(frozen=True)
class PathFamily:
    """Vertex-disjoint paths routing B - I onto I - B for the basis I"""

    basis: Basis
    paths: Tuple[Tuple[Vertex, ...], ...]

    @property
    def arcs(self) -> List[Tuple[Vertex, Vertex]]:
        return [(tail, head) for path in self.paths for tail, head in zip(path, path[1:])]

    @property
    def sources(self) -> List[int]:
        return [path[0].label for path in self.paths]

    @property
    def sinks(self) -> List[int]:
        return [path[-1].label for path in self.paths]

    def to_payload(self) -> Dict:
        return {
            "basis": list(self.basis),
            "paths": [[v.vertex_id for v in path] for path in self.paths],
        }


@dataclass
class ColoredConfig:
    """
    Blue and green tokens on Le-graph edges, plus the marker state.
    An edge may hold one token of each color.
    """

    tokens: Dict[Color, Set[Edge]] = field(
        default_factory=lambda: {Color.BLUE: set(), Color.GREEN: set()}
    )
    marker: Optional[Vertex] = None
    marker_color: Optional[Color] = None
    last_edge: Optional[Edge] = None

    def has(self, edge: Edge, color: Color) -> bool:
        return edge in self.tokens[color]

    def all_colored_edges(self) -> Set[Edge]:
        return self.tokens[Color.BLUE] | self.tokens[Color.GREEN]

    def doubly_colored(self) -> Set[Edge]:
        return self.tokens[Color.BLUE] & self.tokens[Color.GREEN]

    def copy(self) -> "ColoredConfig":
        return ColoredConfig(
            tokens={color: set(edges) for color, edges in self.tokens.items()},
            marker=self.marker,
            marker_color=self.marker_color,
            last_edge=self.last_edge,
        )

    def snapshot(self) -> FrozenSet[Tuple[Edge, Color]]:
        """Token placement only, for comparing configurations"""
        return frozenset(
            (edge, color) for color, edges in self.tokens.items() for edge in edges
        )

    def to_payload(self) -> Dict:
        return {
            color.value: sorted(edge.edge_id for edge in self.tokens[color])
            for color in Color
        }


@dataclass(frozen=True)
class MarkerStep:
    at: Vertex
    marker: Color
    via: Edge
    toggled: bool

    def to_payload(self) -> Dict:
        return {
            "at": self.at.vertex_id,
            "marker": self.marker.value,
            "via": self.via.edge_id,
            "toggled": self.toggled,
        }


@dataclass
class WalkResult:
    """Final configuration of a marker walk and the bases it represents"""

    config: ColoredConfig
    blue_basis: Basis
    green_basis: Basis
    trace: List[MarkerStep]
    in_image: Optional[bool] = None  # set by the reverse walk

    def to_payload(self, with_trace: bool = False) -> Dict:
        payload = {
            "b1": list(self.blue_basis),
            "b2": list(self.green_basis),
            "steps": len(self.trace),
            "config": self.config.to_payload(),
        }
        if self.in_image is not None:
            payload["in_image"] = self.in_image
        if with_trace:
            payload["trace"] = [step.to_payload() for step in self.trace]
        return payload


@dataclass(frozen=True)
class InjectionFailure:
    b1: Basis
    b2: Basis
    reason: str

    def to_payload(self) -> Dict:
        return {"b1": list(self.b1), "b2": list(self.b2), "reason": self.reason}


@dataclass
class InjectionReport:
    pair: Tuple[int, int]
    domain_size: int = 0
    codomain_size: int = 0
    image_size: int = 0
    max_steps: int = 0
    failures: List[InjectionFailure] = field(default_factory=list)
    findings: List[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures

    def to_payload(self) -> Dict:
        return {
            "pair": list(self.pair),
            "domain_size": self.domain_size,
            "codomain_size": self.codomain_size,
            "image_size": self.image_size,
            "max_steps": self.max_steps,
            "failures": [failure.to_payload() for failure in self.failures],
            "findings": list(self.findings),
        }
