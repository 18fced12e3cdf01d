# models/polynomial.py

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

# A monomial is a sorted tuple of (variable, exponent) pairs with exponent >= 1;
# the empty tuple is the constant monomial.
Monomial = Tuple[Tuple[int, int], ...]


def monomial_of(support: Iterable[int]) -> Monomial:
    """Squarefree monomial x^S for a set of variables S"""
    return tuple((var, 1) for var in sorted(set(support)))


def _multiply_monomials(left: Monomial, right: Monomial) -> Monomial:
    exponents: Dict[int, int] = dict(left)
    for var, exp in right:
        exponents[var] = exponents.get(var, 0) + exp
    return tuple(sorted(exponents.items()))


class SparsePolynomial:
    """
    Integer polynomial stored as {monomial: coefficient}.

    Enumerator polynomials are multilinear; products of two of them (the
    Rayleigh differences) have exponents up to 2, which the same
    representation holds. Zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        self.terms: Dict[Monomial, int] = {}
        if terms:
            for monomial, coeff in terms.items():
                self.add_term(coeff, monomial)

    @classmethod
    def from_supports(cls, supports: Iterable[Iterable[int]]) -> "SparsePolynomial":
        """Sum of x^S over the given supports"""
        poly = cls()
        for support in supports:
            poly.add_term(1, monomial_of(support))
        return poly

    @classmethod
    def variable(cls, var: int) -> "SparsePolynomial":
        return cls({((var, 1),): 1})

    def add_term(self, coeff: int, monomial: Monomial):
        if coeff == 0:
            return
        total = self.terms.get(monomial, 0) + coeff
        if total == 0:
            del self.terms[monomial]
        else:
            self.terms[monomial] = total

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        result = SparsePolynomial(self.terms)
        for monomial, coeff in other.terms.items():
            result.add_term(coeff, monomial)
        return result

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + (-other)

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        result = SparsePolynomial()
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                result.add_term(c1 * c2, _multiply_monomials(m1, m2))
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, monomial: Monomial) -> int:
        return self.terms.get(monomial, 0)

    def derivative(self, var: int) -> "SparsePolynomial":
        result = SparsePolynomial()
        for monomial, coeff in self.terms.items():
            exponents = dict(monomial)
            exp = exponents.get(var, 0)
            if exp == 0:
                continue
            if exp == 1:
                del exponents[var]
            else:
                exponents[var] = exp - 1
            result.add_term(coeff * exp, tuple(sorted(exponents.items())))
        return result

    def substitute_zero(self, var: int) -> "SparsePolynomial":
        return SparsePolynomial(
            {m: c for m, c in self.terms.items() if var not in dict(m)}
        )

    def times_variable(self, var: int) -> "SparsePolynomial":
        return self * SparsePolynomial.variable(var)

    def evaluate(self, weights: Sequence[Fraction]) -> Fraction:
        """Exact value with x_i = weights[i - 1]"""
        total = Fraction(0)
        for monomial, coeff in self.terms.items():
            value = Fraction(coeff)
            for var, exp in monomial:
                value *= Fraction(weights[var - 1]) ** exp
            total += value
        return total

    def is_multilinear(self) -> bool:
        return all(exp == 1 for monomial in self.terms for _, exp in monomial)

    def min_coefficient(self) -> int:
        return min(self.terms.values(), default=0)

    def negative_terms(self) -> List[Tuple[Monomial, int]]:
        return [(m, c) for m, c in self.sorted_terms() if c < 0]

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        return sorted(self.terms.items())

    def to_payload(self) -> List[dict]:
        return [
            {"monomial": {str(var): exp for var, exp in m}, "coefficient": c}
            for m, c in self.sorted_terms()
        ]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for monomial, coeff in self.sorted_terms():
            factors = [
                f"x{var}" if exp == 1 else f"x{var}^{exp}" for var, exp in monomial
            ]
            body = "*".join(factors)
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            else:
                parts.append(f"{coeff}*{body}")
        return " + ".join(parts).replace("+ -", "- ")
