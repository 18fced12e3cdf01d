# models/reports.py

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from models.positroid import Basis, WeightVector


@dataclass(frozen=True)
class RayleighViolation:
    weights: WeightVector
    delta: Fraction

    def to_payload(self) -> Dict:
        return {"weights": list(self.weights), "delta": self.delta}


@dataclass
class RayleighReport:
    """Outcome of evaluating one difference form at many weight vectors"""

    pair: Tuple[int, int]
    trials: int = 0
    violations: List[RayleighViolation] = field(default_factory=list)
    min_delta: Optional[Fraction] = None
    steps: int = 0

    def record(self, weights: WeightVector, delta: Fraction, steps: int = 1):
        self.trials += 1
        self.steps += steps
        if self.min_delta is None or delta < self.min_delta:
            self.min_delta = delta
        if delta < 0:
            self.violations.append(RayleighViolation(tuple(weights), delta))

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_payload(self) -> Dict:
        return {
            "pair": list(self.pair),
            "trials": self.trials,
            "steps": self.steps,
            "violations": [v.to_payload() for v in self.violations],
            "min_delta": self.min_delta,
        }


@dataclass(frozen=True)
class BalanceViolation:
    contract: Basis
    delete: Basis
    pair: Tuple[int, int]
    left: int  # |N_ef| * |N^ef|
    right: int  # |N^f_e| * |N^e_f|

    def to_payload(self) -> Dict:
        return {
            "contract": list(self.contract),
            "delete": list(self.delete),
            "pair": list(self.pair),
            "left": self.left,
            "right": self.right,
        }


@dataclass
class BalanceReport:
    minors_checked: int = 0
    inequalities_checked: int = 0
    violations: List[BalanceViolation] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_payload(self) -> Dict:
        return {
            "minors_checked": self.minors_checked,
            "inequalities_checked": self.inequalities_checked,
            "violations": [v.to_payload() for v in self.violations],
        }


@dataclass(frozen=True)
class CorrelationGap:
    """Membership probabilities of e and f in a weighted random basis"""

    prob_e: Fraction
    prob_f: Fraction
    prob_ef: Fraction

    @property
    def gap(self) -> Fraction:
        return self.prob_e * self.prob_f - self.prob_ef
