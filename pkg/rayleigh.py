# rayleigh.py - exact Rayleigh differences, sampling, balancedness, strong probe

import logging
from fractions import Fraction
from itertools import product
from math import lcm
from typing import Dict, List, Tuple

from config import MAX_BALANCE_N
from models.errors import (
    InvariantError,
    LabelError,
    NegativeWeightError,
    SameElementError,
    SizeGuardError,
)
from models.polynomial import SparsePolynomial
from models.positroid import Positroid, WeightVector
from models.reports import (
    BalanceReport,
    BalanceViolation,
    CorrelationGap,
    RayleighReport,
)
from positroid import enumerator_eval, enumerator_poly, minor
from utils.rng import grid_weights, make_rng, signed_weights

logger = logging.getLogger("rayleigh")

Pair = Tuple[int, int]


def _check_pair(positroid: Positroid, e: int, f: int):
    if e == f:
        raise SameElementError(e)
    for label in (e, f):
        if not 1 <= label <= positroid.n:
            raise LabelError(f"Label {label} outside 1..{positroid.n}")


def ordered_pairs(n: int) -> List[Pair]:
    return [(e, f) for e in range(1, n + 1) for f in range(1, n + 1) if e != f]


def rayleigh_delta_eval(
    positroid: Positroid,
    e: int,
    f: int,
    weights: WeightVector,
    require_nonnegative: bool = False,
) -> Fraction:
    """M^f_e(w) M^e_f(w) - M_ef(w) M^ef(w), exactly"""
    _check_pair(positroid, e, f)
    if require_nonnegative and any(w < 0 for w in weights):
        raise NegativeWeightError(f"Rayleigh certification needs weights >= 0: {weights}")

    only_e = enumerator_eval(positroid, weights, {e}, {f})
    only_f = enumerator_eval(positroid, weights, {f}, {e})
    both = enumerator_eval(positroid, weights, {e, f}, ())
    neither = enumerator_eval(positroid, weights, (), {e, f})
    return only_e * only_f - both * neither


def rayleigh_delta_poly(positroid: Positroid, e: int, f: int) -> SparsePolynomial:
    _check_pair(positroid, e, f)
    only_e = enumerator_poly(positroid, {e}, {f})
    only_f = enumerator_poly(positroid, {f}, {e})
    both = enumerator_poly(positroid, {e, f}, ())
    neither = enumerator_poly(positroid, (), {e, f})
    return only_e * only_f - both * neither


def derivative_delta_poly(positroid: Positroid, e: int, f: int) -> SparsePolynomial:
    """(dM/dx_e)(dM/dx_f) - M * d2M/dx_e dx_f"""
    _check_pair(positroid, e, f)
    full = enumerator_poly(positroid)
    d_e = full.derivative(e)
    d_f = full.derivative(f)
    return d_e * d_f - full * d_e.derivative(f)


def pair_deltas(positroid: Positroid, weights: WeightVector) -> Dict[Pair, Fraction]:
    """
    Delta for every ordered pair at one weight vector, from a single pass
    over the bases. Weights are scaled to integers by their common
    denominator D; each enumerator value scales by D^r, so the integer
    difference is divided by D^(2r) at the end.
    """
    n = positroid.n
    if len(weights) != n:
        raise ValueError(f"Weight vector has length {len(weights)}, expected {n}")
    scale = lcm(*(Fraction(w).denominator for w in weights)) if n else 1
    scaled = [0] + [int(Fraction(w) * scale) for w in weights]

    total = 0
    # sums[e][f] = sum of w^B over bases containing e and f (sums[e][e]: containing e)
    sums = [[0] * (n + 1) for _ in range(n + 1)]
    for basis in positroid.bases:
        value = 1
        for label in basis:
            value *= scaled[label]
        total += value
        for a in basis:
            row = sums[a]
            for b in basis:
                row[b] += value

    denominator = scale ** (2 * positroid.r)
    deltas = {}
    for e, f in ordered_pairs(n):
        both = sums[e][f]
        only_e = sums[e][e] - both
        only_f = sums[f][f] - both
        neither = total - sums[e][e] - sums[f][f] + both
        deltas[(e, f)] = Fraction(only_e * only_f - both * neither, denominator)
    return deltas


def sample_rayleigh(
    positroid: Positroid, trials: int, seed: int, positive_only: bool = True
) -> List[RayleighReport]:
    """
    Evaluate delta for all ordered pairs at `trials` weight vectors; trial 0
    is the all-ones vector, the rest are drawn from the rational grid.
    """
    if trials < 1:
        raise ValueError("At least one trial is required")

    rng = make_rng(seed)
    reports = {pair: RayleighReport(pair=pair) for pair in ordered_pairs(positroid.n)}
    logger.info(
        f"=== SAMPLING RAYLEIGH === n={positroid.n}, {len(positroid)} bases, "
        f"{trials} trials, seed={seed}"
    )

    for trial in range(trials):
        if trial == 0:
            weights = tuple(Fraction(1) for _ in range(positroid.n))
        else:
            weights = grid_weights(rng, positroid.n, allow_zero=not positive_only)
        for pair, delta in pair_deltas(positroid, weights).items():
            reports[pair].record(weights, delta, steps=len(positroid))

    violated = [report.pair for report in reports.values() if not report.holds]
    if violated:
        logger.warning(f"Rayleigh inequality violated for pairs {violated}")
    return [reports[pair] for pair in sorted(reports)]


def balanced_check(positroid: Positroid, max_n: int = MAX_BALANCE_N) -> BalanceReport:
    """
    Counting form of the Rayleigh inequality on every nonempty minor:
    |N_ef| |N^ef| <= |N^f_e| |N^e_f| for free e < f.
    """
    n = positroid.n
    if n > max_n:
        raise SizeGuardError(f"Balancedness check is limited to n <= {max_n}, got {n}")

    report = BalanceReport()
    logger.info(f"=== CHECKING BALANCEDNESS === n={n}, {3 ** n} minors")

    for assignment in product((0, 1, 2), repeat=n):
        contract = tuple(i + 1 for i, a in enumerate(assignment) if a == 1)
        delete = tuple(i + 1 for i, a in enumerate(assignment) if a == 2)
        bases = minor(positroid, contract, delete)
        if not bases:
            continue
        report.minors_checked += 1

        free = [i + 1 for i, a in enumerate(assignment) if a == 0]
        count = {label: 0 for label in free}
        joint: Dict[Pair, int] = {}
        for basis in bases:
            members = [label for label in basis if label in count]
            for label in members:
                count[label] += 1
            for i, a in enumerate(members):
                for b in members[i + 1 :]:
                    joint[(a, b)] = joint.get((a, b), 0) + 1

        for i, e in enumerate(free):
            for f in free[i + 1 :]:
                both = joint.get((e, f), 0)
                neither = len(bases) - count[e] - count[f] + both
                left = both * neither
                right = (count[e] - both) * (count[f] - both)
                report.inequalities_checked += 1
                if left > right:
                    report.violations.append(
                        BalanceViolation(contract, delete, (e, f), left, right)
                    )

    logger.info(
        f"Checked {report.inequalities_checked} inequalities on "
        f"{report.minors_checked} minors: {len(report.violations)} violations"
    )
    return report


def strong_probe(
    positroid: Positroid, e: int, f: int, trials: int, seed: int
) -> RayleighReport:
    """
    Evaluate the derivative-form difference at signed rational inputs. A
    negative value is evidence against the strong Rayleigh property.
    """
    _check_pair(positroid, e, f)
    if trials < 1:
        raise ValueError("At least one trial is required")

    derivative_form = derivative_delta_poly(positroid, e, f)
    literal_form = rayleigh_delta_poly(positroid, e, f)
    rng = make_rng(seed)
    report = RayleighReport(pair=(e, f))

    for _ in range(trials):
        point = signed_weights(rng, positroid.n)
        value = derivative_form.evaluate(point)
        if all(x > 0 for x in point):
            literal = literal_form.evaluate(point)
            if (literal > 0) - (literal < 0) != (value > 0) - (value < 0):
                raise InvariantError(
                    f"Difference forms disagree in sign at positive input {point}"
                )
        report.record(point, value)

    if report.violations:
        logger.warning(
            f"Derivative-form difference negative for pair {(e, f)} "
            f"in {len(report.violations)} of {trials} trials"
        )
    return report


def correlation_gap(
    positroid: Positroid, weights: WeightVector, e: int, f: int
) -> CorrelationGap:
    """Pr[e]Pr[f] - Pr[ef] under Pr[B] = w^B / M(w)"""
    _check_pair(positroid, e, f)
    total = enumerator_eval(positroid, weights)
    if total == 0:
        raise ValueError("Weights give every basis probability zero")
    return CorrelationGap(
        prob_e=enumerator_eval(positroid, weights, {e}) / total,
        prob_f=enumerator_eval(positroid, weights, {f}) / total,
        prob_ef=enumerator_eval(positroid, weights, {e, f}) / total,
    )
