"""Linear algebra over F2 on integer bitmasks.

Vectors and matrix rows are arbitrary-precision Python ints, one bit per
coordinate (bit ``i`` = coordinate ``i``).  That keeps XOR-heavy elimination
fast without any third-party dependency, and rank/kernel results are exact.

Pivoting is leftmost-lowest (scan columns left to right, take the lowest
remaining row), so every derived basis is deterministic across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegeneratePairingError, DimensionError

__all__ = [
    "BitVector",
    "BinaryMatrix",
    "rank",
    "kernel_basis",
    "in_span",
    "symplectic_pairing",
]


@dataclass(frozen=True)
class BitVector:
    """An F2 vector of fixed ``length`` with coordinates packed in ``bits``."""

    length: int
    bits: int

    def __post_init__(self):
        if self.length < 0:
            raise DimensionError(f"negative vector length {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise DimensionError(
                f"bit pattern {self.bits:#x} does not fit in {self.length} coordinates"
            )

    @classmethod
    def from_support(cls, length: int, support) -> BitVector:
        """Build a vector of ``length`` coordinates with ones at ``support``."""
        bits = 0
        for i in support:
            if not 0 <= i < length:
                raise DimensionError(f"coordinate {i} out of range for length {length}")
            bits |= 1 << i
        return cls(length, bits)

    @property
    def support(self) -> tuple[int, ...]:
        """Indices of the non-zero coordinates, ascending."""
        bits, out = self.bits, []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return tuple(out)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def get(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise DimensionError(f"coordinate {i} out of range for length {self.length}")
        return (self.bits >> i) & 1

    def dot(self, other: BitVector) -> int:
        """F2 inner product."""
        if self.length != other.length:
            raise DimensionError(
                f"dot of lengths {self.length} and {other.length}"
            )
        return (self.bits & other.bits).bit_count() & 1

    def __xor__(self, other: BitVector) -> BitVector:
        if self.length != other.length:
            raise DimensionError(
                f"xor of lengths {self.length} and {other.length}"
            )
        return BitVector(self.length, self.bits ^ other.bits)

    def __bool__(self) -> bool:
        return self.bits != 0


@dataclass(frozen=True)
class BinaryMatrix:
    """An F2 matrix; ``row_bits[i]`` packs row ``i`` over ``cols`` columns."""

    rows: int
    cols: int
    row_bits: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError(f"negative shape ({self.rows}, {self.cols})")
        if len(self.row_bits) != self.rows:
            raise DimensionError(
                f"{len(self.row_bits)} rows of data for declared {self.rows}"
            )
        for r in self.row_bits:
            if r < 0 or r >> self.cols:
                raise DimensionError(f"row {r:#x} does not fit in {self.cols} columns")

    @classmethod
    def from_rows(cls, rows_iter, cols: int) -> BinaryMatrix:
        """Build from an iterable of rows: ints (packed bits) or BitVectors
        of length ``cols``."""
        data = []
        for row in rows_iter:
            if isinstance(row, BitVector):
                if row.length != cols:
                    raise DimensionError(
                        f"row of length {row.length} in a {cols}-column matrix"
                    )
                data.append(row.bits)
            else:
                data.append(row)
        return cls(len(data), cols, tuple(data))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BinaryMatrix:
        return cls(rows, cols, (0,) * rows)

    def get(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise DimensionError(f"entry ({i}, {j}) out of shape ({self.rows}, {self.cols})")
        return (self.row_bits[i] >> j) & 1

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.row_bits[i])

    def column(self, j: int) -> BitVector:
        if not 0 <= j < self.cols:
            raise DimensionError(f"column {j} out of shape ({self.rows}, {self.cols})")
        bits = 0
        for i, r in enumerate(self.row_bits):
            bits |= ((r >> j) & 1) << i
        return BitVector(self.rows, bits)

    def transpose(self) -> BinaryMatrix:
        out = [0] * self.cols
        for i, r in enumerate(self.row_bits):
            while r:
                low = r & -r
                out[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BinaryMatrix(self.cols, self.rows, tuple(out))

    def matvec(self, v: BitVector) -> BitVector:
        """Matrix-vector product over F2 (``v`` indexed by columns)."""
        if v.length != self.cols:
            raise DimensionError(
                f"matvec: vector length {v.length} != cols {self.cols}"
            )
        bits = 0
        for i, r in enumerate(self.row_bits):
            bits |= ((r & v.bits).bit_count() & 1) << i
        return BitVector(self.rows, bits)

    def matmul(self, other: BinaryMatrix) -> BinaryMatrix:
        if self.cols != other.rows:
            raise DimensionError(
                f"matmul: shapes ({self.rows},{self.cols}) x ({other.rows},{other.cols})"
            )
        out = []
        for r in self.row_bits:
            acc = 0
            rr = r
            while rr:
                low = rr & -rr
                acc ^= other.row_bits[low.bit_length() - 1]
                rr ^= low
            out.append(acc)
        return BinaryMatrix(self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.row_bits)


def _rref(row_bits, cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form with leftmost-lowest pivoting.

    Returns ``(reduced_rows, pivot_cols)`` where ``reduced_rows`` keeps only
    non-zero rows, one per pivot column, fully reduced above and below.
    """
    rows = list(row_bits)
    pivots: list[int] = []
    reduced: list[int] = []
    for col in range(cols):
        mask = 1 << col
        pivot_row = None
        for idx, r in enumerate(rows):
            if r & mask:
                pivot_row = idx
                break
        if pivot_row is None:
            continue
        p = rows.pop(pivot_row)
        for idx, r in enumerate(rows):
            if r & mask:
                rows[idx] = r ^ p
        for idx, r in enumerate(reduced):
            if r & mask:
                reduced[idx] = r ^ p
        reduced.append(p)
        pivots.append(col)
        if not rows:
            break
    return reduced, pivots


def rank(m: BinaryMatrix) -> int:
    """F2 rank via Gaussian elimination; deterministic."""
    _, pivots = _rref(m.row_bits, m.cols)
    return len(pivots)


def kernel_basis(m: BinaryMatrix) -> list[BitVector]:
    """A basis of ``ker m`` — exactly ``cols − rank(m)`` independent vectors.

    Each returned vector ``v`` satisfies ``m.matvec(v) == 0``.  Basis vectors
    correspond to the non-pivot columns of the RREF in ascending column order.
    """
    reduced, pivots = _rref(m.row_bits, m.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        bits = 1 << free
        # Solve for the pivot coordinates against the free column.
        for p_col, p_row in zip(pivots, reduced):
            if (p_row >> free) & 1:
                bits |= 1 << p_col
        basis.append(BitVector(m.cols, bits))
    return basis


def in_span(m: BinaryMatrix, v: BitVector) -> bool:
    """True iff ``v`` is an F2 combination of the rows of ``m``."""
    if v.length != m.cols:
        raise DimensionError(
            f"in_span: vector length {v.length} != row length {m.cols}"
        )
    reduced, pivots = _rref(m.row_bits, m.cols)
    bits = v.bits
    for p_col, p_row in zip(pivots, reduced):
        if (bits >> p_col) & 1:
            bits ^= p_row
    return bits == 0


def symplectic_pairing(
    z_ops: list[BitVector], x_ops: list[BitVector]
) -> list[tuple[BitVector, BitVector]]:
    """Greedily pair X/Z operators into a symplectic basis.

    Returns pairs ``(x_i, z_i)`` with ``x_i.dot(z_j) == (i == j)`` — the full
    pairing matrix is exactly the identity.  Emitted operators are F2
    combinations of the inputs, so spans are preserved.

    Raises:
        DegeneratePairingError: if any input is left unpaired (pairing matrix
            rank below ``len(z_ops) == len(x_ops)``); reports the achieved rank.
    """
    all_ops = list(z_ops) + list(x_ops)
    if all_ops and any(v.length != all_ops[0].length for v in all_ops):
        raise DimensionError("symplectic_pairing: mixed vector lengths")
    xs = list(x_ops)
    zs = list(z_ops)
    pairs: list[tuple[BitVector, BitVector]] = []
    while xs and zs:
        hit = None
        for i, x in enumerate(xs):
            for j, z in enumerate(zs):
                if x.dot(z):
                    hit = (i, j)
                    break
            if hit:
                break
        if hit is None:
            break
        i, j = hit
        x, z = xs.pop(i), zs.pop(j)
        xs = [x2 ^ x if x2.dot(z) else x2 for x2 in xs]
        zs = [z2 ^ z if x.dot(z2) else z2 for z2 in zs]
        pairs.append((x, z))
    if xs or zs:
        raise DegeneratePairingError(
            f"pairing matrix is rank-deficient: paired {len(pairs)} of "
            f"{len(pairs) + max(len(xs), len(zs))}",
            achieved_rank=len(pairs),
        )
    return pairs
