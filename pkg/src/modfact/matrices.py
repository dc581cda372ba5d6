"""Immutable rectangular matrices over a ring context.

Elements of free modules are ROW vectors and maps act by right
multiplication, so the composite of v -> v*A and v -> v*B is v -> v*(A@B).
Maps into a sigma^k-twisted free module are stored via their underlying
function v -> sigma^k(v) * G; composing (k, G) after (l, H) gives
(k + l, sigma^l(G) @ H), which is what ``twist`` is for.

Zero rows or columns are legal; the empty matrix is the identity of the
appropriate shape-0 space.
"""

from __future__ import annotations

from dataclasses import dataclass

from modfact.rings import RingContext


class ShapeMismatch(Exception):
    pass


class ContextMismatch(Exception):
    pass


@dataclass(frozen=True)
class Matrix:
    ring: RingContext
    rows: int
    cols: int
    entries: tuple  # row-major, length rows*cols

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries"
            )

    # --- constructors -----------------------------------------------------

    @staticmethod
    def from_rows(ring, rows_list):
        rows = len(rows_list)
        cols = len(rows_list[0]) if rows else 0
        for r in rows_list:
            if len(r) != cols:
                raise ShapeMismatch("ragged rows")
        return Matrix(ring, rows, cols, tuple(e for r in rows_list for e in r))

    @staticmethod
    def zero(ring, rows, cols):
        return Matrix(ring, rows, cols, (ring.zero,) * (rows * cols))

    @staticmethod
    def identity(ring, n):
        return Matrix.scalar(ring, n, ring.one)

    @staticmethod
    def scalar(ring, n, a):
        ents = [ring.zero] * (n * n)
        for i in range(n):
            ents[i * n + i] = a
        return Matrix(ring, n, n, tuple(ents))

    # --- access ------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    # --- arithmetic ---------------------------------------------------------

    def _same_ring(self, other):
        if self.ring != other.ring:
            raise ContextMismatch("matrices over different ring contexts")

    def __add__(self, other):
        self._same_ring(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("addition shape mismatch")
        R = self.ring
        return Matrix(
            R,
            self.rows,
            self.cols,
            tuple(R.add(a, b) for a, b in zip(self.entries, other.entries)),
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        R = self.ring
        return Matrix(R, self.rows, self.cols, tuple(R.neg(a) for a in self.entries))

    def __matmul__(self, other):
        self._same_ring(other)
        if self.cols != other.rows:
            raise ShapeMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        R = self.ring
        n, k, m = self.rows, self.cols, other.cols
        out = [R.zero] * (n * m)
        for i in range(n):
            for t in range(k):
                a = self.entries[i * k + t]
                if R.is_zero(a):
                    continue
                for j in range(m):
                    b = other.entries[t * m + j]
                    if not R.is_zero(b):
                        out[i * m + j] = R.add(out[i * m + j], R.mul(a, b))
        return Matrix(R, n, m, tuple(out))

    def scale_left(self, a):
        R = self.ring
        return Matrix(
            R, self.rows, self.cols, tuple(R.mul(a, e) for e in self.entries)
        )

    def scale_right(self, a):
        R = self.ring
        return Matrix(
            R, self.rows, self.cols, tuple(R.mul(e, a) for e in self.entries)
        )

    def twist(self, k: int):
        """Entrywise sigma^k."""
        R = self.ring
        return Matrix(
            R, self.rows, self.cols, tuple(R.sigma_pow(e, k) for e in self.entries)
        )

    def transpose(self):
        return Matrix(
            self.ring,
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def reduce_mod_omega(self):
        R = self.ring
        return Matrix(
            R,
            self.rows,
            self.cols,
            tuple(R.reduce_mod_omega(e) for e in self.entries),
        )

    def is_zero(self):
        R = self.ring
        return all(R.is_zero(e) for e in self.entries)

    # --- block assembly -----------------------------------------------------

    def hstack(self, other):
        self._same_ring(other)
        if self.rows != other.rows:
            raise ShapeMismatch("hstack row mismatch")
        rows = [self.row(i) + other.row(i) for i in range(self.rows)]
        return Matrix(
            self.ring,
            self.rows,
            self.cols + other.cols,
            tuple(e for r in rows for e in r),
        )

    def vstack(self, other):
        self._same_ring(other)
        if self.cols != other.cols:
            raise ShapeMismatch("vstack column mismatch")
        return Matrix(
            self.ring,
            self.rows + other.rows,
            self.cols,
            self.entries + other.entries,
        )

    @staticmethod
    def block(blocks):
        """Assemble a matrix out of a 2D grid of compatible blocks."""
        rows = None
        for brow in blocks:
            acc = brow[0]
            for b in brow[1:]:
                acc = acc.hstack(b)
            rows = acc if rows is None else rows.vstack(acc)
        return rows

    @staticmethod
    def block_diag(ring, blocks):
        total_r = sum(b.rows for b in blocks)
        total_c = sum(b.cols for b in blocks)
        out = [[ring.zero] * total_c for _ in range(total_r)]
        ro = co = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[ro + i][co + j] = b[i, j]
            ro += b.rows
            co += b.cols
        return Matrix.from_rows(ring, out) if blocks else Matrix.zero(ring, 0, 0)

    def submatrix(self, row_range, col_range):
        rows = [
            tuple(self[i, j] for j in col_range) for i in row_range
        ]
        return Matrix(
            self.ring,
            len(list(row_range)),
            len(list(col_range)),
            tuple(e for r in rows for e in r),
        )

    def split_cols(self, k):
        """Split into the first k columns and the rest."""
        left = self.submatrix(range(self.rows), range(k))
        right = self.submatrix(range(self.rows), range(k, self.cols))
        return left, right

    def __repr__(self):
        R = self.ring
        body = "; ".join(
            ", ".join(str(R.fmt(e)) for e in self.row(i)) for i in range(self.rows)
        )
        return f"Matrix({self.rows}x{self.cols}: [{body}])"
