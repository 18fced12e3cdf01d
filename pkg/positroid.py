# positroid.py - basis enumeration, minors and enumerator polynomials

import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from config import MAX_ENUMERATION_N
from managers.flow_manager import FlowManager
from managers.path_search import DisjointPathSearch
from models.errors import BasisSizeError, OverlapError, SizeGuardError
from models.le_graph import LeGraph
from models.polynomial import SparsePolynomial
from models.positroid import Basis, Positroid, WeightVector
from utils.label_utils import normalize_labels

logger = logging.getLogger("positroid")


def _check_subset(graph: LeGraph, subset: Iterable[int]) -> Basis:
    basis = normalize_labels(subset, graph.n)
    if len(basis) != graph.rank:
        raise BasisSizeError(
            f"Subset {basis} has size {len(basis)}, rank is {graph.rank}"
        )
    return basis


def _routing(graph: LeGraph, basis: Basis) -> Tuple[List[int], List[int]]:
    boundary = set(graph.sources)
    return sorted(boundary - set(basis)), sorted(set(basis) - boundary)


def is_basis(
    graph: LeGraph, subset: Iterable[int], flows: Optional[FlowManager] = None
) -> bool:
    """I is a basis iff I = B or vertex-disjoint paths route B - I onto I - B"""
    basis = _check_subset(graph, subset)
    removed, added = _routing(graph, basis)
    if not removed:
        return True
    flows = flows or FlowManager(graph)
    return flows.routes(removed, added)


def edge_disjoint_basis(
    graph: LeGraph, subset: Iterable[int], flows: Optional[FlowManager] = None
) -> bool:
    """Walk reading: edge-disjoint walks, which may share dots, route B - I onto I - B"""
    basis = _check_subset(graph, subset)
    removed, added = _routing(graph, basis)
    if not removed:
        return True
    flows = flows or FlowManager(graph)
    return flows.routes(removed, added, vertex_disjoint=False)


def vertex_disjoint_basis(graph: LeGraph, subset: Iterable[int]) -> bool:
    """Backtracking oracle: a vertex-disjoint path family routes B - I onto I - B"""
    basis = _check_subset(graph, subset)
    removed, added = _routing(graph, basis)
    family = DisjointPathSearch(graph).find_family(removed, added)
    return family is not None


def _scan_range(graph: LeGraph, candidates: Sequence[Basis]) -> List[Basis]:
    flows = FlowManager(graph)
    return [subset for subset in candidates if is_basis(graph, subset, flows)]


def enumerate_bases(graph: LeGraph, workers: int = 1) -> Positroid:
    """
    All r-subsets passing the basis test, lexicographically sorted.
    With workers > 1 the subsets are split into contiguous ranges and the
    partial lists concatenated in range order.
    """
    if graph.n > MAX_ENUMERATION_N:
        raise SizeGuardError(
            f"Enumeration is limited to n <= {MAX_ENUMERATION_N}, got n={graph.n}"
        )

    candidates = list(combinations(range(1, graph.n + 1), graph.rank))
    logger.info(
        f"=== ENUMERATING BASES === n={graph.n} r={graph.rank}, "
        f"{len(candidates)} candidates, {workers} worker(s)"
    )

    if workers <= 1 or len(candidates) < 2 * workers:
        bases = _scan_range(graph, candidates)
    else:
        chunk = -(-len(candidates) // workers)
        ranges = [candidates[i : i + chunk] for i in range(0, len(candidates), chunk)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda part: _scan_range(graph, part), ranges))
        bases = [basis for part in parts for basis in part]

    logger.info(f"Found {len(bases)} bases")
    return Positroid(n=graph.n, r=graph.rank, bases=tuple(bases))


def walk_oracle_disagreements(graph: LeGraph) -> List[Basis]:
    """r-subsets where edge-disjoint walks and vertex-disjoint paths disagree"""
    flows = FlowManager(graph)
    disagreements = []
    for subset in combinations(range(1, graph.n + 1), graph.rank):
        if edge_disjoint_basis(graph, subset, flows) != is_basis(graph, subset, flows):
            logger.warning(f"Walk oracles disagree on {subset}")
            disagreements.append(subset)
    return disagreements


def _check_disjoint(positroid: Positroid, contract, delete) -> Tuple[Basis, Basis]:
    contract = normalize_labels(contract, positroid.n)
    delete = normalize_labels(delete, positroid.n)
    overlap = set(contract) & set(delete)
    if overlap:
        raise OverlapError(f"Contracted and deleted sets share {sorted(overlap)}")
    return contract, delete


def minor(
    positroid: Positroid, contract: Iterable[int] = (), delete: Iterable[int] = ()
) -> List[Basis]:
    """Bases containing every contracted label and no deleted label"""
    contract, delete = _check_disjoint(positroid, contract, delete)
    required = set(contract)
    forbidden = set(delete)
    return [
        basis
        for basis in positroid.bases
        if required.issubset(basis) and forbidden.isdisjoint(basis)
    ]


def enumerator_poly(
    positroid: Positroid, contract: Iterable[int] = (), delete: Iterable[int] = ()
) -> SparsePolynomial:
    """Sum of x^B over the minor; monomials keep the contracted labels"""
    return SparsePolynomial.from_supports(minor(positroid, contract, delete))


def enumerator_eval(
    positroid: Positroid,
    weights: WeightVector,
    contract: Iterable[int] = (),
    delete: Iterable[int] = (),
) -> Fraction:
    if len(weights) != positroid.n:
        raise ValueError(
            f"Weight vector has length {len(weights)}, expected {positroid.n}"
        )
    total = Fraction(0)
    for basis in minor(positroid, contract, delete):
        value = Fraction(1)
        for label in basis:
            value *= weights[label - 1]
        total += value
    return total


def find_exchange_violation(positroid: Positroid) -> Optional[Tuple[Basis, Basis, int]]:
    """First (A, B, a) with a in A - B and no b in B - A making A - a + b a basis"""
    for first in positroid.bases:
        for second in positroid.bases:
            first_set, second_set = set(first), set(second)
            for a in sorted(first_set - second_set):
                if not any(
                    positroid.contains((first_set - {a}) | {b})
                    for b in second_set - first_set
                ):
                    return first, second, a
    return None


def exchange_check(positroid: Positroid) -> bool:
    violation = find_exchange_violation(positroid)
    if violation is not None:
        logger.warning(f"Basis exchange fails for {violation}")
    return violation is None
