# utils/fraction_utils.py

from fractions import Fraction
from typing import Union


def fraction_json(value: Union[Fraction, int]) -> str:
    """Canonical 'p/q' string; integers keep a denominator of 1"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def fraction_text(value: Union[Fraction, int]) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
