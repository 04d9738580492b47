"""Dense bit-packed linear algebra over GF(2).

Rows are stored as Python ints used as bit masks (bit j = column j), so a
row XOR is a single big-int operation.  This is the computational core of
the degree-bounded certificate search and of the cycle-cover solver: both
reduce to one exact linear solve over GF(2).
"""

from __future__ import annotations


class GF2Error(Exception):
    pass


class GF2Vector:
    """Fixed-length 0/1 vector packed into one int."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int = 0):
        if n < 0:
            raise GF2Error("vector length must be nonnegative")
        self.n = n
        self.bits = bits & ((1 << n) - 1) if n else 0

    @classmethod
    def from_entries(cls, entries) -> "GF2Vector":
        bits = 0
        entries = list(entries)
        for i, e in enumerate(entries):
            if e not in (0, 1):
                raise GF2Error(f"entry {e!r} not in GF(2)")
            if e:
                bits |= 1 << i
        return cls(len(entries), bits)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def to_entries(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.n)]

    def support(self) -> list[int]:
        return [i for i in range(self.n) if (self.bits >> i) & 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, GF2Vector) and (self.n, self.bits) == (other.n, other.bits)

    def __hash__(self):
        return hash((self.n, self.bits))

    def __len__(self) -> int:
        return self.n

    def __repr__(self):
        return f"GF2Vector({self.to_entries()})"


class GF2Matrix:
    """Row-major bit-packed matrix over GF(2).

    The matrix is immutable from the caller's point of view: elimination
    always works on an internal copy of the rows.
    """

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: list[int] | None = None):
        if nrows < 0 or ncols < 0:
            raise GF2Error("dimensions must be nonnegative")
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            rows = [0] * nrows
        if len(rows) != nrows:
            raise GF2Error("row count mismatch")
        mask = (1 << ncols) - 1
        self.rows = [r & mask for r in rows]

    @classmethod
    def from_entries(cls, entries) -> "GF2Matrix":
        entries = [list(row) for row in entries]
        nrows = len(entries)
        ncols = len(entries[0]) if entries else 0
        rows = []
        for row in entries:
            if len(row) != ncols:
                raise GF2Error("ragged rows")
            bits = 0
            for j, e in enumerate(row):
                if e not in (0, 1):
                    raise GF2Error(f"entry {e!r} not in GF(2)")
                if e:
                    bits |= 1 << j
            rows.append(bits)
        return cls(nrows, ncols, rows)

    def transpose(self) -> "GF2Matrix":
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            while r:
                j = (r & -r).bit_length() - 1
                cols[j] |= 1 << i
                r &= r - 1
        return GF2Matrix(self.ncols, self.nrows, cols)

    def mul_vector(self, x: GF2Vector) -> GF2Vector:
        if x.n != self.ncols:
            raise GF2Error("dimension mismatch in mat-vec product")
        bits = 0
        for i, r in enumerate(self.rows):
            if (r & x.bits).bit_count() & 1:
                bits |= 1 << i
        return GF2Vector(self.nrows, bits)

    def rank(self) -> int:
        work = list(self.rows)
        rank = 0
        for col in range(self.ncols):
            pivot_bit = 1 << col
            pivot = next((i for i in range(rank, len(work)) if work[i] & pivot_bit), None)
            if pivot is None:
                continue
            work[rank], work[pivot] = work[pivot], work[rank]
            for i in range(len(work)):
                if i != rank and work[i] & pivot_bit:
                    work[i] ^= work[rank]
            rank += 1
        return rank

    def solve(self, b: GF2Vector) -> GF2Vector | None:
        """Solve self * x = b, or return None iff the system is inconsistent.

        Deterministic: pivots are chosen leftmost-first and free variables
        are set to 0, so equal inputs give the identical solution.
        """
        if b.n != self.nrows:
            raise GF2Error("dimension mismatch between matrix and rhs")
        rhs_bit = 1 << self.ncols
        work = [self.rows[i] | (rhs_bit if (b.bits >> i) & 1 else 0) for i in range(self.nrows)]
        pivots: list[tuple[int, int]] = []  # (row, col) in echelon position
        rank = 0
        for col in range(self.ncols):
            pivot_bit = 1 << col
            pivot = next((i for i in range(rank, len(work)) if work[i] & pivot_bit), None)
            if pivot is None:
                continue
            work[rank], work[pivot] = work[pivot], work[rank]
            for i in range(len(work)):
                if i != rank and work[i] & pivot_bit:
                    work[i] ^= work[rank]
            pivots.append((rank, col))
            rank += 1
        for i in range(rank, len(work)):
            if work[i]:  # reduced row is 0 = 1
                return None
        bits = 0
        for row, col in pivots:
            if work[row] & rhs_bit:
                bits |= 1 << col
        return GF2Vector(self.ncols, bits)

    def __repr__(self):
        return f"GF2Matrix({self.nrows}x{self.ncols})"


def solve(a: GF2Matrix, b: GF2Vector) -> GF2Vector | None:
    return a.solve(b)


def rank(a: GF2Matrix) -> int:
    return a.rank()
