"""Smith normal form over the integers, with unimodular transforms.

Python integers are unbounded, so entry growth during elimination can never
wrap around.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows * self.cols:
            raise ValueError(f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged matrix")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        return IntegerMatrix(
            self.rows,
            other.cols,
            tuple(
                sum(self[i, k] * other[k, j] for k in range(self.cols))
                for i in range(self.rows)
                for j in range(other.cols)
            ),
        )


def _eliminate(a, r, c, u=None, v=None):
    """Diagonalize ``a`` in place; mirror row ops into ``u`` and column ops into ``v`` when given."""
    for t in range(min(r, c)):
        while True:
            # pivot: smallest nonzero |entry| of the active block, ties to the lowest (row, col)
            best = bi = bj = 0
            for i in range(t, r):
                row = a[i]
                for j in range(t, c):
                    x = row[j]
                    if x:
                        ax = x if x > 0 else -x
                        if not best or ax < best:
                            best, bi, bj = ax, i, j
            if not best:
                break
            if bi != t:
                a[t], a[bi] = a[bi], a[t]
                if u is not None:
                    u[t], u[bi] = u[bi], u[t]
            if bj != t:
                for row in a:
                    row[t], row[bj] = row[bj], row[t]
                if v is not None:
                    for row in v:
                        row[t], row[bj] = row[bj], row[t]
            prow = a[t]
            p = prow[t]
            clean = True
            for i in range(t + 1, r):
                row = a[i]
                if row[t]:
                    q = row[t] // p
                    for j in range(t, c):
                        row[j] -= q * prow[j]
                    if u is not None:
                        urow, upiv = u[i], u[t]
                        for j in range(r):
                            urow[j] -= q * upiv[j]
                    if row[t]:
                        clean = False
            for j in range(t + 1, c):
                if prow[j]:
                    q = prow[j] // p
                    for row in a:
                        row[j] -= q * row[t]
                    if v is not None:
                        for row in v:
                            row[j] -= q * row[t]
                    if prow[j]:
                        clean = False
            if not clean:
                continue
            bad = next((i for i in range(t + 1, r) if any(a[i][j] % p for j in range(t + 1, c))), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
            if u is not None:
                u[t] = [x + y for x, y in zip(u[t], u[bad])]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if u is not None:
                u[t] = [-x for x in u[t]]
        if a[t][t] == 0:
            break
    return tuple(a[i][i] for i in range(min(r, c)))


def smith_normal_form(m: IntegerMatrix):
    """Return ``(d, u, v)`` with ``u @ m @ v`` diagonal with diagonal ``d``.

    ``d`` has ``min(rows, cols)`` non-negative entries, each dividing the
    next (trailing zeros last).  ``u`` and ``v`` are unimodular.  The pivot
    is always the smallest nonzero entry of the active block, which makes
    the transforms deterministic.
    """
    r, c = m.rows, m.cols
    u = IntegerMatrix.identity(r).to_rows()
    v = IntegerMatrix.identity(c).to_rows()
    d = _eliminate(m.to_rows(), r, c, u, v)
    return d, IntegerMatrix.from_rows(u, r), IntegerMatrix.from_rows(v, c)


def invariant_factors(m: IntegerMatrix) -> tuple:
    """Diagonal of the Smith normal form, without building the transforms."""
    return _eliminate(m.to_rows(), m.rows, m.cols)


def invariant_factors_of_rows(rows: Sequence[Sequence[int]], cols: int) -> tuple:
    """Same as ``invariant_factors`` on a list of rows, skipping matrix construction."""
    return _eliminate([list(r) for r in rows], len(rows), cols)


def determinant(m: IntegerMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    a = m.to_rows()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def read_matrix(text: str) -> IntegerMatrix:
    """Parse ``rows cols`` followed by row-major integers, whitespace separated."""
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("matrix file must start with 'rows cols'")
    try:
        nums = [int(tok) for tok in tokens]
    except ValueError as exc:
        raise ValueError(f"non-integer token in matrix file: {exc}") from None
    rows, cols = nums[0], nums[1]
    if rows < 0 or cols < 0:
        raise ValueError("matrix dimensions must be non-negative")
    if len(nums) - 2 != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, found {len(nums) - 2}")
    return IntegerMatrix(rows, cols, tuple(nums[2:]))
