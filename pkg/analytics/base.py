from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Union

from utils import render_fraction


@dataclass(frozen=True, order=True)
class ExactValue:
    """Arbitrary-precision rational; rounding happens only in to_decimal()."""

    value: Fraction

    def __post_init__(self):
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))

    def __float__(self) -> float:
        return self.value.numerator / self.value.denominator

    def to_decimal(self, digits: int = 15) -> str:
        return render_fraction(self.value, digits)

    def to_dict(self, digits: int = 15) -> Dict[str, Any]:
        return {
            "value_decimal": self.to_decimal(digits),
            "value_rational": f"{self.value.numerator}/{self.value.denominator}",
        }

    def __str__(self) -> str:
        return self.to_decimal()


Number = Union[int, float, Fraction, ExactValue]


def as_fraction(value: Number) -> Fraction:
    if isinstance(value, ExactValue):
        return value.value
    return Fraction(value)
