import os
import csv
import json
import logging
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence

import mpmath


logger = logging.getLogger(__name__)


class ValidationError(ValueError):
    """Input rejected before any computation started"""


class DatasetFormatError(ValidationError):
    """Malformed dataset file"""

    def __init__(self, message: str, row: Optional[int] = None):
        self.row = row
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)


class WorkLimitExceeded(RuntimeError):
    """Requested computation is above the configured work ceiling"""

    def __init__(self, what: str, estimated: int, limit: int):
        self.estimated = estimated
        self.limit = limit
        super().__init__(
            f"{what}: estimated work {estimated:.3e} exceeds limit {limit:.3e}"
        )


def check_env_variables(env_vars):
    """Every listed variable, when set, must parse as an integer."""
    for env_name in env_vars:
        value = os.environ.get(env_name)
        if value is None:
            continue
        try:
            int(value)
        except ValueError:
            raise ValidationError(f"Env Variable: {env_name} must be an integer, got {value!r}")


def require(condition: bool, message: str):
    if not condition:
        raise ValidationError(message)


def check_k(k: int, d: int):
    require(1 <= k <= d, f"k must satisfy 1 <= k <= d (k={k}, d={d})")


def render_fraction(value: Fraction, digits: int = 15) -> str:
    """Decimal rendering of an exact rational with `digits` significant digits."""
    with mpmath.workdps(digits + 10):
        as_mpf = mpmath.mpf(value.numerator) / value.denominator
        return mpmath.nstr(as_mpf, digits)


def write_csv(path: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(["" if cell is None else cell for cell in row])
    logger.info(f"📄 Wrote {path}")
    return path


def write_json(path: str, payload: Any) -> str:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        json.dump(payload, handle, indent=2, sort_keys=True)
        handle.write("\n")
    logger.info(f"📄 Wrote {path}")
    return path


def read_json(path: str) -> Dict[str, Any]:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def parse_int_list(text: Optional[str]) -> List[int]:
    if not text:
        return []
    values = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..")
            values.extend(range(int(lo), int(hi) + 1))
        else:
            values.append(int(part))
    return values
