"""GF(2) matrices as int bitsets, with Gaussian-elimination rank."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError


@dataclass(frozen=True)
class GF2Matrix:
    """A rows x cols binary matrix; bit c of row_masks[r] is entry (r, c)."""

    rows: int
    cols: int
    row_masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DomainError("matrix dimensions must be >= 0")
        if len(self.row_masks) != self.rows:
            raise DomainError("row count does not match row_masks")
        limit = 1 << self.cols
        if any(not 0 <= m < limit for m in self.row_masks):
            raise DomainError("row mask has bits beyond cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> GF2Matrix:
        cols = len(rows[0]) if rows else 0
        masks = []
        for row in rows:
            if len(row) != cols:
                raise DomainError("ragged rows")
            if any(b not in (0, 1) for b in row):
                raise DomainError("entries must be 0 or 1")
            masks.append(sum(b << c for c, b in enumerate(row)))
        return cls(len(rows), cols, tuple(masks))

    @classmethod
    def identity(cls, n: int) -> GF2Matrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> GF2Matrix:
        return cls(rows, cols, (0,) * rows)

    def entry(self, r: int, c: int) -> int:
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise DomainError("entry index out of range")
        return (self.row_masks[r] >> c) & 1

    def column(self, c: int) -> int:
        """Column c as an integer with bit r = entry(r, c)."""
        return sum(((m >> c) & 1) << r for r, m in enumerate(self.row_masks))

    def transpose(self) -> GF2Matrix:
        return GF2Matrix(
            self.cols, self.rows, tuple(self.column(c) for c in range(self.cols))
        )

    def restrict_columns(self, columns: Sequence[int]) -> GF2Matrix:
        """Submatrix keeping the given columns, renumbered 0..len-1."""
        if any(not 0 <= c < self.cols for c in columns):
            raise DomainError("column index out of range")
        masks = tuple(
            sum(((m >> c) & 1) << j for j, c in enumerate(columns))
            for m in self.row_masks
        )
        return GF2Matrix(self.rows, len(columns), masks)

    def apply(self, x: int) -> int:
        """Syndrome Bx over GF(2); x is an n-bit vector, result an r-bit vector."""
        out = 0
        for r, m in enumerate(self.row_masks):
            out |= ((m & x).bit_count() & 1) << r
        return out

    def to_json(self) -> dict:
        data = [
            "".join(str((m >> c) & 1) for c in range(self.cols))
            for m in self.row_masks
        ]
        return {"rows": self.rows, "cols": self.cols, "data": data}

    @classmethod
    def from_json(cls, obj: dict) -> GF2Matrix:
        try:
            rows, cols, data = obj["rows"], obj["cols"], obj["data"]
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed matrix object: {exc}") from exc
        if len(data) != rows:
            raise DomainError("'data' length does not match 'rows'")
        masks = []
        for s in data:
            if len(s) != cols or set(s) - {"0", "1"}:
                raise DomainError(f"bad row string {s!r}")
            masks.append(sum((s[c] == "1") << c for c in range(cols)))
        return cls(rows, cols, tuple(masks))


def gf2_rank(matrix: GF2Matrix) -> int:
    """Rank over GF(2); the input is not modified."""
    work = list(matrix.row_masks)
    rank = 0
    for col in range(matrix.cols):
        pivot = None
        for r in range(rank, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and (work[r] >> col) & 1:
                work[r] ^= work[rank]
        rank += 1
        if rank == len(work):
            break
    return rank
