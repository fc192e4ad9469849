"""Arbitrary-precision integer matrices and their text format.

The text format is a header line ``rows cols`` followed by one line of
space-separated integers per row.
"""
from dataclasses import dataclass

from .errors import ParseError


@dataclass(frozen=True)
class IntMatrix:
    """Immutable row-major integer matrix."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [tuple(int(x) for x in c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows(
            [[c[i] for c in columns] for i in range(rows)], cols=len(columns)
        )

    @classmethod
    def identity(cls, k):
        return cls.from_rows([[int(i == j) for j in range(k)] for i in range(k)], cols=k)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return self.entries[j::self.cols] if self.cols else ()

    def as_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return IntMatrix.from_rows(self.columns(), cols=self.rows)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in product")
        cols = other.columns()
        return IntMatrix.from_rows(
            [[sum(a * b for a, b in zip(self.row(i), c)) for c in cols] for i in range(self.rows)],
            cols=other.cols,
        )

    def select_columns(self, indices):
        return IntMatrix.from_columns([self.column(j) for j in indices], rows=self.rows)

    def append_row(self, row):
        return IntMatrix.from_rows(self.as_rows() + [list(row)], cols=self.cols)

    def is_zero(self):
        return not any(self.entries)

    def to_text(self):
        lines = [f"{self.rows} {self.cols}"]
        lines += [" ".join(str(x) for x in self.row(i)) for i in range(self.rows)]
        return "\n".join(lines) + "\n"

    def __str__(self):
        return self.to_text()


def parse_matrix(text):
    """Parse the ``rows cols`` text format back into an :class:`IntMatrix`."""
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise ParseError("matrix header must be 'rows cols'")
    try:
        rows, cols = int(lines[0][0]), int(lines[0][1])
        body = [[int(x) for x in ln] for ln in lines[1:]]
    except ValueError as exc:
        raise ParseError(f"non-integer matrix entry: {exc}") from None
    if len(body) != rows or any(len(r) != cols for r in body):
        raise ParseError(f"matrix body does not match header {rows}x{cols}")
    return IntMatrix.from_rows(body, cols=cols)
