"""Exact integer matrices and the bit-packed +1/-1 representation.

:class:`SignMatrix` is an immutable wrapper around an ``int64`` array.  Every
arithmetic operation bounds its result before computing it and raises
:class:`~hadamard_forge.errors.CheckedOverflowError` instead of wrapping.
No floating point is used anywhere.

:class:`PackedMatrix` stores row ``i`` of a +1/-1 matrix as ``ceil(n/64)``
``uint64`` words, bit ``k`` of word ``w`` holding column ``64*w + k``.  A set
bit means -1; tail bits past column ``n`` are always zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CheckedOverflowError, ShapeMismatchError, SizeCapError, ZeroEntryError

ORDER_CAP = 2**16
_INT_LIMIT = 2**62


class SignMatrix:
    """Immutable exact integer matrix.

    Construction-facing matrices hold entries in {-1, 0, +1}; products such as
    Gram matrices reuse the type and report ``general == True``.
    """

    __slots__ = ("_a",)

    def __init__(self, entries):
        a = np.array(entries, dtype=np.int64)
        if a.ndim != 2:
            raise ShapeMismatchError(f"expected a 2-d array, got shape {a.shape}")
        a.setflags(write=False)
        self._a = a

    @classmethod
    def _wrap(cls, arr):
        obj = cls.__new__(cls)
        arr = np.ascontiguousarray(arr, dtype=np.int64)
        arr.setflags(write=False)
        obj._a = arr
        return obj

    @property
    def entries(self) -> np.ndarray:
        """Read-only view of the underlying array."""
        return self._a

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def order(self) -> int:
        if self.rows != self.cols:
            raise ShapeMismatchError(f"{self.shape} matrix is not square")
        return self.rows

    @property
    def general(self) -> bool:
        return bool(self._a.size) and self.max_abs() > 1

    def max_abs(self) -> int:
        return int(np.abs(self._a).max()) if self._a.size else 0

    def is_sign(self) -> bool:
        """True when every entry is +1 or -1."""
        return bool(np.all(np.abs(self._a) == 1))

    def tolist(self):
        return self._a.tolist()

    def __getitem__(self, key):
        out = self._a[key]
        return int(out) if np.ndim(out) == 0 else out

    def __eq__(self, other):
        if not isinstance(other, SignMatrix):
            return NotImplemented
        return equal(self, other)

    def __hash__(self):
        return hash((self.shape, self._a.tobytes()))

    def __repr__(self):
        return f"SignMatrix({self.rows}x{self.cols})"

    @property
    def T(self) -> SignMatrix:
        return transpose(self)

    def __matmul__(self, other):
        return matmul(self, other)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return negate(self)

    def __mul__(self, k):
        if not isinstance(k, (int, np.integer)):
            return NotImplemented
        return scale(self, int(k))

    __rmul__ = __mul__


def _as(m) -> SignMatrix:
    return m if isinstance(m, SignMatrix) else SignMatrix(m)


def _bound(value: int, what: str):
    if value >= _INT_LIMIT:
        raise CheckedOverflowError(f"{what}: bound {value} exceeds exact int64 range")


def _same_shape(a, b, what):
    if a.shape != b.shape:
        raise ShapeMismatchError(f"{what}: shapes {a.shape} and {b.shape} differ")


def identity(n: int) -> SignMatrix:
    _check_order(n)
    return SignMatrix._wrap(np.eye(n, dtype=np.int64))


def all_ones(n: int) -> SignMatrix:
    _check_order(n)
    return SignMatrix._wrap(np.ones((n, n), dtype=np.int64))


def back_diagonal(n: int) -> SignMatrix:
    """The permutation R with R[i, n-1-i] = 1."""
    _check_order(n)
    return SignMatrix._wrap(np.eye(n, dtype=np.int64)[::-1])


def _check_order(n):
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if n > ORDER_CAP:
        raise SizeCapError(f"order {n} exceeds cap {ORDER_CAP}")


def matmul(a, b) -> SignMatrix:
    a, b = _as(a), _as(b)
    if a.cols != b.rows:
        raise ShapeMismatchError(f"matmul: {a.shape} @ {b.shape}")
    _bound(a.max_abs() * b.max_abs() * max(a.cols, 1), "matmul")
    return SignMatrix._wrap(a.entries @ b.entries)


def transpose(a) -> SignMatrix:
    return SignMatrix._wrap(_as(a).entries.T)


def add(a, b) -> SignMatrix:
    a, b = _as(a), _as(b)
    _same_shape(a, b, "add")
    _bound(a.max_abs() + b.max_abs(), "add")
    return SignMatrix._wrap(a.entries + b.entries)


def sub(a, b) -> SignMatrix:
    a, b = _as(a), _as(b)
    _same_shape(a, b, "sub")
    _bound(a.max_abs() + b.max_abs(), "sub")
    return SignMatrix._wrap(a.entries - b.entries)


def scale(a, k: int) -> SignMatrix:
    a = _as(a)
    _bound(a.max_abs() * abs(k), "scale")
    return SignMatrix._wrap(a.entries * k)


def negate(a) -> SignMatrix:
    return SignMatrix._wrap(-_as(a).entries)


def equal(a, b) -> bool:
    a, b = _as(a), _as(b)
    return a.shape == b.shape and bool(np.array_equal(a.entries, b.entries))


def kron(a, b) -> SignMatrix:
    """Kronecker product; block (i, j) of the result is ``a[i, j] * b``."""
    a, b = _as(a), _as(b)
    rows, cols = a.rows * b.rows, a.cols * b.cols
    if max(rows, cols) > ORDER_CAP:
        raise SizeCapError(f"kron result {rows}x{cols} exceeds cap {ORDER_CAP}")
    _bound(a.max_abs() * b.max_abs(), "kron")
    return SignMatrix._wrap(np.kron(a.entries, b.entries))


def block(grid) -> SignMatrix:
    """Assemble a 2-d list of conformable blocks."""
    return SignMatrix._wrap(np.block([[_as(x).entries for x in row] for row in grid]))


# -- packed form -------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class PackedMatrix:
    n: int
    bit_rows: np.ndarray  # shape (n, words), uint64

    @property
    def words(self) -> int:
        return self.bit_rows.shape[1]

    def __eq__(self, other):
        if not isinstance(other, PackedMatrix):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.bit_rows, other.bit_rows)

    def __hash__(self):
        return hash((self.n, self.bit_rows.tobytes()))


def _words_for(n):
    return (n + 63) // 64


def pack(a) -> PackedMatrix:
    a = _as(a)
    arr = a.entries
    bad = np.argwhere(np.abs(arr) != 1)
    if bad.size:
        i, j = (int(v) for v in bad[0])
        if arr[i, j] == 0:
            raise ZeroEntryError(i, j)
        raise ValueError(f"entry ({i}, {j}) = {arr[i, j]} is not +1/-1")
    n_rows, n = arr.shape
    w = _words_for(n)
    bits = np.zeros((n_rows, w * 64), dtype=np.uint8)
    bits[:, :n] = arr == -1
    packed = np.packbits(bits, axis=1, bitorder="little")
    words = packed.view("<u8").astype(np.uint64, copy=False)
    words = np.ascontiguousarray(words)
    words.setflags(write=False)
    return PackedMatrix(n, words)


def unpack(p: PackedMatrix) -> SignMatrix:
    raw = np.ascontiguousarray(p.bit_rows.astype("<u8")).view(np.uint8)
    bits = np.unpackbits(raw, axis=1, bitorder="little")[:, : p.n]
    return SignMatrix._wrap(1 - 2 * bits.astype(np.int64))


def tail_mask(n: int) -> np.ndarray:
    """Per-word masks selecting the ``n`` valid columns."""
    w = _words_for(n)
    mask = np.full(w, np.iinfo(np.uint64).max, dtype=np.uint64)
    rem = n % 64
    if rem:
        mask[-1] = np.uint64((1 << rem) - 1)
    return mask


def packed_dot(p: PackedMatrix, i: int, j: int) -> int:
    """Exact +1/-1 inner product of rows i and j."""
    rows = p.bit_rows.shape[0]
    if not (0 <= i < rows and 0 <= j < rows):
        raise IndexError(f"row index out of range for {rows} rows: ({i}, {j})")
    diff = np.bitwise_xor(p.bit_rows[i], p.bit_rows[j]) & tail_mask(p.n)
    return p.n - 2 * int(np.bitwise_count(diff).sum())


def packed_dots_after(p: PackedMatrix, i: int) -> np.ndarray:
    """Inner products of row i with rows i+1, ..., n-1."""
    diff = np.bitwise_xor(p.bit_rows[i + 1 :], p.bit_rows[i]) & tail_mask(p.n)
    return p.n - 2 * np.bitwise_count(diff).sum(axis=1, dtype=np.int64)
