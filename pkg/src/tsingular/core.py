"""Dense third-order real tensors and their slice-level operations.

Conventions used throughout the package:

* An m x n x p tensor is stored as the stack of its p frontal slices,
  i.e. a C-contiguous float64 array of shape (p, m, n).  Raveling that
  array yields the canonical value order: frontal-slice-major, row-major
  within a slice.
* Public indices (row i, column j, slice k) are 1-based.
* Tensors are immutable: the backing array is copied on construction and
  marked read-only, so instances can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

__all__ = [
    "DenseTensor3",
    "IndexSubset",
    "DimensionMismatchError",
    "IndexRangeError",
    "unfold",
    "fold",
    "bcirc",
    "add",
    "sub",
    "frobenius_norm",
    "subtensor",
]


class DimensionMismatchError(ValueError):
    """Operands or arguments have incompatible shapes."""


class IndexRangeError(IndexError):
    """A 1-based index falls outside the target mode."""


def _check_index(value: int, bound: int, what: str) -> int:
    k = int(value)
    if not 1 <= k <= bound:
        raise IndexRangeError(f"{what} must be in 1..{bound}, got {k}")
    return k


@dataclass(frozen=True, eq=False)
class DenseTensor3:
    """Real m x n x p tensor backed by a read-only (p, m, n) float64 array.

    The constructor accepts anything ``np.asarray`` understands, shaped
    (p, m, n), i.e. a stack of frontal slices.
    """

    slices: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.slices, dtype=np.float64, order="C", copy=True)
        if arr.ndim != 3:
            raise ValueError(f"expected a (p, m, n) slice stack, got ndim={arr.ndim}")
        if min(arr.shape) < 1:
            raise ValueError(f"all dimensions must be >= 1, got shape {arr.shape}")
        arr.flags.writeable = False
        object.__setattr__(self, "slices", arr)

    @property
    def m(self) -> int:
        return self.slices.shape[1]

    @property
    def n(self) -> int:
        return self.slices.shape[2]

    @property
    def p(self) -> int:
        return self.slices.shape[0]

    @property
    def shape(self) -> tuple[int, int, int]:
        """Logical shape (m, n, p)."""
        return self.m, self.n, self.p

    @classmethod
    def zeros(cls, m: int, n: int, p: int) -> "DenseTensor3":
        return cls(np.zeros((p, m, n)))

    @classmethod
    def from_frontal_slices(cls, mats: Iterable[np.ndarray]) -> "DenseTensor3":
        return cls(np.stack([np.asarray(s, dtype=np.float64) for s in mats]))

    @classmethod
    def from_tube_layout(cls, arr: np.ndarray) -> "DenseTensor3":
        """Build from an (m, n, p)-indexed array (tube axis last)."""
        a = np.asarray(arr, dtype=np.float64)
        if a.ndim != 3:
            raise ValueError(f"expected an (m, n, p) array, got ndim={a.ndim}")
        return cls(np.transpose(a, (2, 0, 1)))

    def to_tube_layout(self) -> np.ndarray:
        """Return a writable (m, n, p)-indexed copy (tube axis last)."""
        return np.ascontiguousarray(np.transpose(self.slices, (1, 2, 0)))

    def frontal_slice(self, k: int) -> np.ndarray:
        """The m x n matrix A(:,:,k), 1-based; returned as a read-only view."""
        return self.slices[_check_index(k, self.p, "slice index") - 1]

    def tube(self, i: int, j: int) -> np.ndarray:
        """The length-p vector A(i,j,:), 1-based; returned as a read-only view."""
        return self.slices[
            :,
            _check_index(i, self.m, "row index") - 1,
            _check_index(j, self.n, "column index") - 1,
        ]

    def ravel(self) -> np.ndarray:
        """All values in canonical order (slice-major, row-major), as a copy."""
        return self.slices.ravel().copy()

    def __add__(self, other: "DenseTensor3") -> "DenseTensor3":
        return add(self, other)

    def __sub__(self, other: "DenseTensor3") -> "DenseTensor3":
        return sub(self, other)

    def __mul__(self, factor: float) -> "DenseTensor3":
        return DenseTensor3(self.slices * float(factor))

    __rmul__ = __mul__

    def __neg__(self) -> "DenseTensor3":
        return DenseTensor3(-self.slices)

    def __repr__(self) -> str:
        return f"DenseTensor3(m={self.m}, n={self.n}, p={self.p})"


@dataclass(frozen=True)
class IndexSubset:
    """A strictly increasing set of 1-based row or column indices."""

    kind: str
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in ("rows", "cols"):
            raise ValueError(f"kind must be 'rows' or 'cols', got {self.kind!r}")
        idx = tuple(int(i) for i in self.indices)
        if not idx:
            raise ValueError("index subset must be nonempty")
        if idx[0] < 1:
            raise IndexRangeError(f"indices must be >= 1, got {idx[0]}")
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise ValueError(f"indices must be strictly increasing, got {idx}")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def rows(cls, *indices: int) -> "IndexSubset":
        return cls("rows", tuple(indices))

    @classmethod
    def cols(cls, *indices: int) -> "IndexSubset":
        return cls("cols", tuple(indices))

    def __len__(self) -> int:
        return len(self.indices)


def unfold(tensor: DenseTensor3) -> np.ndarray:
    """Stack the frontal slices into an (m*p) x n matrix, slice 1 on top."""
    return tensor.slices.reshape(tensor.m * tensor.p, tensor.n).copy()


def fold(matrix: np.ndarray, m: int, p: int) -> DenseTensor3:
    """Inverse of :func:`unfold`: rebuild the tensor from its block stack."""
    mat = np.asarray(matrix, dtype=np.float64)
    if mat.ndim != 2:
        raise DimensionMismatchError(f"fold expects a matrix, got ndim={mat.ndim}")
    if m < 1 or p < 1 or mat.shape[0] != m * p:
        raise DimensionMismatchError(
            f"cannot fold {mat.shape[0]} rows into m={m} blocks of p={p} slices"
        )
    return DenseTensor3(mat.reshape(p, m, mat.shape[1]))


def bcirc(tensor: DenseTensor3) -> np.ndarray:
    """Block-circulant matrix of shape (m*p) x (n*p).

    Block (r, c) is frontal slice 1 + ((r - c) mod p); the first block
    column equals unfold(tensor).
    """
    m, n, p = tensor.shape
    out = np.empty((m * p, n * p))
    for r in range(p):
        for c in range(p):
            out[r * m : (r + 1) * m, c * n : (c + 1) * n] = tensor.slices[(r - c) % p]
    return out


def _check_same_shape(a: DenseTensor3, b: DenseTensor3, op: str) -> None:
    if a.shape != b.shape:
        raise DimensionMismatchError(f"{op} requires equal shapes, got {a.shape} and {b.shape}")


def add(a: DenseTensor3, b: DenseTensor3) -> DenseTensor3:
    """Elementwise sum."""
    _check_same_shape(a, b, "add")
    return DenseTensor3(a.slices + b.slices)


def sub(a: DenseTensor3, b: DenseTensor3) -> DenseTensor3:
    """Elementwise difference."""
    _check_same_shape(a, b, "sub")
    return DenseTensor3(a.slices - b.slices)


def frobenius_norm(tensor: DenseTensor3) -> float:
    """Square root of the sum of squared entries."""
    return float(np.linalg.norm(tensor.slices.ravel()))


def subtensor(tensor: DenseTensor3, rows: IndexSubset, cols: IndexSubset) -> DenseTensor3:
    """Restrict rows and columns to the given subsets; the tube axis is kept whole."""
    if rows.kind != "rows":
        raise ValueError(f"first subset must have kind 'rows', got {rows.kind!r}")
    if cols.kind != "cols":
        raise ValueError(f"second subset must have kind 'cols', got {cols.kind!r}")
    if rows.indices[-1] > tensor.m:
        raise IndexRangeError(f"row index {rows.indices[-1]} out of range 1..{tensor.m}")
    if cols.indices[-1] > tensor.n:
        raise IndexRangeError(f"column index {cols.indices[-1]} out of range 1..{tensor.n}")
    r = np.asarray(rows.indices) - 1
    c = np.asarray(cols.indices) - 1
    return DenseTensor3(tensor.slices[:, r[:, None], c[None, :]])
