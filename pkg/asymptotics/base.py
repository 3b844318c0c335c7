import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from config import FormulaId, ThresholdKind


@dataclass
class PredictionReport:
    formula_id: FormulaId
    params: Dict[str, int]
    value: float
    validity_note: str
    is_bound: bool = False
    extras: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ArithmeticError(f"{self.formula_id.value} produced a non-finite value for {self.params}")

    def to_dict(self, digits: int = 15) -> Dict[str, Any]:
        return {
            "formula_id": self.formula_id.value,
            "params": dict(self.params),
            "value_decimal": f"{self.value:.{digits}g}",
            "validity_note": self.validity_note,
            "is_bound": self.is_bound,
            "extras": {key: f"{value:.{digits}g}" for key, value in self.extras.items()},
        }


@dataclass
class ThresholdResult:
    n: int
    kind: ThresholdKind
    value: int
    boundaries: List[int]
    oscillators: Optional[Dict[str, float]] = None

    def to_dict(self) -> Dict[str, Any]:
        # big integers travel as decimal strings
        return {
            "n": str(self.n),
            "kind": self.kind.value,
            "value": self.value,
            "boundaries": [str(a) for a in self.boundaries],
            "oscillators": dict(self.oscillators or {}),
        }
