import csv
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from config import DatasetMode
from utils import DatasetFormatError, ValidationError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Dataset:
    """An n x d table of coordinates; smaller is better in every coordinate."""

    points: np.ndarray
    mode: DatasetMode = DatasetMode.CONTINUOUS

    def __post_init__(self):
        points = np.asarray(self.points)
        if points.ndim == 1 and points.size == 0:
            points = points.reshape(0, 1)
        if points.ndim != 2:
            raise ValidationError(f"points must form an n x d table, got shape {points.shape}")
        if points.shape[1] < 1:
            raise ValidationError("dimension d must be at least 1")

        if self.mode == DatasetMode.CATEGORICAL:
            if points.size and not np.all(np.equal(np.mod(points, 1), 0)):
                raise ValidationError("categorical coordinates must be integers")
            points = points.astype(np.int64)
            if points.size and points.min() < 1:
                raise ValidationError("categorical coordinates must be >= 1")
        else:
            points = points.astype(np.float64)
            if not np.all(np.isfinite(points)):
                raise ValidationError("coordinates must be finite")

        points.setflags(write=False)
        object.__setattr__(self, "points", points)

    @property
    def n(self) -> int:
        return int(self.points.shape[0])

    @property
    def d(self) -> int:
        return int(self.points.shape[1])

    def __len__(self) -> int:
        return self.n

    def permuted(self, point_order: Optional[Sequence[int]] = None,
                 axis_order: Optional[Sequence[int]] = None) -> "Dataset":
        points = self.points
        if point_order is not None:
            points = points[np.asarray(point_order)]
        if axis_order is not None:
            points = points[:, np.asarray(axis_order)]
        return Dataset(points, self.mode)

    def without(self, index: int) -> "Dataset":
        return Dataset(np.delete(self.points, index, axis=0), self.mode)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]], mode: DatasetMode = DatasetMode.CONTINUOUS) -> "Dataset":
        if len(rows) == 0:
            return cls(np.zeros((0, 1)), mode)
        widths = {len(row) for row in rows}
        if len(widths) != 1:
            raise ValidationError(f"rows have mixed dimensions {sorted(widths)}")
        return cls(np.asarray(rows), mode)

    @classmethod
    def from_csv(cls, path: str, mode: DatasetMode = DatasetMode.CONTINUOUS) -> "Dataset":
        """Read a CSV with header x1..xd; diagnostics carry the 1-based file row."""
        rows = []
        with open(path, "r", encoding="utf-8", newline="") as handle:
            reader = csv.reader(handle)
            try:
                header = next(reader)
            except StopIteration:
                raise DatasetFormatError("empty file, expected header x1,...,xd", row=1)

            header = [name.strip() for name in header]
            expected = [f"x{j + 1}" for j in range(len(header))]
            if not header or header != expected:
                raise DatasetFormatError(f"header must be {','.join(expected) or 'x1'}, got {','.join(header)}", row=1)

            d = len(header)
            for row_number, row in enumerate(reader, start=2):
                if not row or all(not cell.strip() for cell in row):
                    continue
                if len(row) != d:
                    raise DatasetFormatError(f"expected {d} columns, found {len(row)}", row=row_number)
                try:
                    if mode == DatasetMode.CATEGORICAL:
                        values = [int(cell) for cell in row]
                    else:
                        values = [float(cell) for cell in row]
                except ValueError as e:
                    raise DatasetFormatError(f"unparseable coordinate ({e})", row=row_number)
                if mode == DatasetMode.CATEGORICAL and min(values) < 1:
                    raise DatasetFormatError("categorical coordinates must be >= 1", row=row_number)
                if mode == DatasetMode.CONTINUOUS and not all(np.isfinite(values)):
                    raise DatasetFormatError("coordinates must be finite", row=row_number)
                rows.append(values)

        if not rows:
            return cls(np.zeros((0, d)), mode)
        logger.debug(f"Read {len(rows)} points of dimension {d} from {path}")
        return cls(np.asarray(rows), mode)

    def to_csv(self, path: str) -> str:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow([f"x{j + 1}" for j in range(self.d)])
            for point in self.points:
                if self.mode == DatasetMode.CATEGORICAL:
                    writer.writerow([int(c) for c in point])
                else:
                    writer.writerow([repr(float(c)) for c in point])
        return path
