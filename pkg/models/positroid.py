# models/positroid.py

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import FrozenSet, Iterable, Sequence, Tuple

Basis = Tuple[int, ...]
WeightVector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class Positroid:
    """A rank-r matroid on 1..n given by its sorted list of bases"""

    n: int
    r: int
    bases: Tuple[Basis, ...]

    def __post_init__(self):
        bases = tuple(sorted({tuple(sorted(basis)) for basis in self.bases}))
        object.__setattr__(self, "bases", bases)

        if not bases:
            raise ValueError("A positroid must have at least one basis")
        for basis in bases:
            if len(basis) != self.r:
                raise ValueError(f"Basis {basis} does not have rank {self.r}")
            if basis and not (1 <= basis[0] and basis[-1] <= self.n):
                raise ValueError(f"Basis {basis} leaves the ground set 1..{self.n}")

    @cached_property
    def basis_sets(self) -> FrozenSet[FrozenSet[int]]:
        return frozenset(frozenset(basis) for basis in self.bases)

    def contains(self, basis: Iterable[int]) -> bool:
        return frozenset(basis) in self.basis_sets

    def __len__(self) -> int:
        return len(self.bases)


def as_weights(values: Sequence, n: int) -> WeightVector:
    """Exact weight vector a_1..a_n from ints, strings or fractions"""
    if len(values) != n:
        raise ValueError(f"Weight vector has length {len(values)}, expected {n}")
    return tuple(Fraction(value) for value in values)
