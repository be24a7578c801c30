"""Dense linear algebra over prime fields.

Matrices are plain numpy integer arrays with entries reduced mod p; every
public function takes the field explicitly.  RowBasis is the canonical
reduced-row-echelon representation of a subspace, so two subspaces are equal
exactly when their RowBasis matrices (and pivot tuples) are equal.

Reduction is deterministic: leftmost pivot column first, topmost available
row as pivot, full elimination above and below.  This keeps every basis in
the package byte-stable across runs and thread counts.

For p = 2 there is a bit-packed fast path (one Python int per row, bit c =
column c) used by the exhaustive sweeps; it is cross-checked against the
generic path in the test suite.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .ffield import PrimeField


def as_matrix(rows, field: PrimeField, width: int | None = None) -> np.ndarray:
    """Coerce to a 2-D int64 array reduced mod p.

    Accepts anything numpy can turn into a rectangular integer grid; an empty
    row list needs `width` to fix the ambient dimension.
    """
    a = np.asarray(rows, dtype=np.int64)
    if a.size == 0:
        if width is None:
            raise ValueError("empty matrix needs an explicit width")
        a = a.reshape(0, width)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={a.ndim}")
    if width is not None and a.shape[1] != width:
        raise ValueError(f"expected width {width}, got {a.shape[1]}")
    return a % field.p


def _rref_array(a: np.ndarray, field: PrimeField) -> tuple[np.ndarray, list[int]]:
    """In-place style Gaussian elimination; returns (nonzero rows, pivots)."""
    p = field.p
    m = a.copy()
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        if m[r, c] != 1:
            m[r] = (m[r] * field.inv(int(m[r, c]))) % p
        col = m[:, c].copy()
        col[r] = 0
        if np.any(col):
            m = (m - np.outer(col, m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


class RowBasis:
    """Canonical basis of a subspace of F_p^n: RREF matrix with no zero rows.

    Construct through `rref`; the initializer re-validates the invariants
    (pivot entries 1, pivot columns otherwise 0, strictly increasing pivots).
    """

    __slots__ = ("matrix", "pivots", "field")

    def __init__(self, matrix: np.ndarray, pivots: Sequence[int], field: PrimeField):
        matrix = np.asarray(matrix, dtype=np.int64)
        if matrix.ndim != 2:
            raise ValueError("basis matrix must be 2-D")
        pivots = tuple(int(c) for c in pivots)
        if matrix.shape[0] != len(pivots):
            raise ValueError("one pivot per row required")
        if np.any(matrix < 0) or np.any(matrix >= field.p):
            raise ValueError("entries must be canonical residues")
        if any(b <= a for a, b in zip(pivots, pivots[1:])):
            raise ValueError("pivots must strictly increase")
        for r, c in enumerate(pivots):
            if c >= matrix.shape[1] or matrix[r, c] != 1:
                raise ValueError("pivot entries must be 1")
            if np.count_nonzero(matrix[:, c]) != 1:
                raise ValueError("pivot columns must be elsewhere 0")
            if np.any(matrix[r, :c]):
                raise ValueError("rows must be zero left of their pivot")
        matrix = matrix.copy()
        matrix.setflags(write=False)
        self.matrix = matrix
        self.pivots = pivots
        self.field = field

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def ambient(self) -> int:
        return self.matrix.shape[1]

    def contains(self, v) -> bool:
        """Membership of a single vector in the row space."""
        v = np.asarray(v, dtype=np.int64) % self.field.p
        if v.shape != (self.ambient,):
            raise ValueError(f"expected a vector of length {self.ambient}")
        if self.dim == 0:
            return not np.any(v)
        coeffs = v[list(self.pivots)]
        return bool(np.array_equal((coeffs @ self.matrix) % self.field.p, v))

    def contains_rows(self, rows: np.ndarray) -> bool:
        """True when every row of `rows` lies in the row space."""
        rows = as_matrix(rows, self.field, self.ambient)
        if rows.shape[0] == 0:
            return True
        if self.dim == 0:
            return not np.any(rows)
        coeffs = rows[:, list(self.pivots)]
        return bool(np.array_equal((coeffs @ self.matrix) % self.field.p, rows))

    def key(self) -> bytes:
        """Canonical bytes, suitable for dict-based deduplication."""
        return (
            self.ambient.to_bytes(4, "little")
            + self.field.p.to_bytes(4, "little")
            + self.matrix.tobytes()
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RowBasis)
            and self.field == other.field
            and self.pivots == other.pivots
            and self.matrix.shape == other.matrix.shape
            and bool(np.array_equal(self.matrix, other.matrix))
        )

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"RowBasis(dim={self.dim}, ambient={self.ambient}, p={self.field.p})"


def rref(a, field: PrimeField, width: int | None = None) -> RowBasis:
    """Canonical reduced row echelon basis of the row space of `a`."""
    m = as_matrix(a, field, width)
    reduced, pivots = _rref_array(m, field)
    return RowBasis(reduced, pivots, field)


def rank(a, field: PrimeField) -> int:
    m = as_matrix(a, field)
    return _rref_array(m, field)[0].shape[0]


def kernel(a, field: PrimeField, width: int | None = None) -> RowBasis:
    """Canonical basis of the right kernel {v : a @ v = 0}."""
    m = as_matrix(a, field, width)
    ncols = m.shape[1]
    reduced, pivots = _rref_array(m, field)
    free = [c for c in range(ncols) if c not in set(pivots)]
    if not free:
        return rref(np.zeros((0, ncols), dtype=np.int64), field, width=ncols)
    vecs = np.zeros((len(free), ncols), dtype=np.int64)
    for row, fc in enumerate(free):
        vecs[row, fc] = 1
        for r, pc in enumerate(pivots):
            vecs[row, pc] = (-reduced[r, fc]) % field.p
    return rref(vecs, field)


def subspace_sum(a: RowBasis, b: RowBasis) -> RowBasis:
    _check_compatible(a, b)
    stacked = np.vstack([a.matrix, b.matrix])
    return rref(stacked, a.field, width=a.ambient)


def subspace_intersect(a: RowBasis, b: RowBasis) -> RowBasis:
    """Intersection via the Zassenhaus block trick."""
    _check_compatible(a, b)
    n = a.ambient
    if a.dim == 0 or b.dim == 0:
        return rref(np.zeros((0, n), dtype=np.int64), a.field, width=n)
    top = np.hstack([a.matrix, a.matrix])
    bot = np.hstack([b.matrix, np.zeros_like(b.matrix)])
    reduced, pivots = _rref_array(np.vstack([top, bot]), a.field)
    inter_rows = [reduced[r, n:] for r, c in enumerate(pivots) if c >= n]
    if not inter_rows:
        return rref(np.zeros((0, n), dtype=np.int64), a.field, width=n)
    return rref(np.array(inter_rows, dtype=np.int64), a.field, width=n)


def equal_spaces(a: RowBasis, b: RowBasis) -> bool:
    return a == b


def _check_compatible(a: RowBasis, b: RowBasis) -> None:
    if a.field != b.field:
        raise ValueError(f"modulus mismatch: {a.field.p} vs {b.field.p}")
    if a.ambient != b.ambient:
        raise ValueError(f"ambient mismatch: {a.ambient} vs {b.ambient}")


# --- bit-packed fast path over F_2 -----------------------------------------
# A row of width n is an int whose bit c is the entry in column c.  Used by
# the exhaustive sweeps and the seeded ideal search, where building numpy
# matrices per candidate would dominate the runtime.


def f2_rank(rows: Iterable[int], limit: int | None = None) -> int:
    """Rank of bit-packed rows over F_2; stops early once `limit` is exceeded."""
    basis: dict[int, int] = {}
    for v in rows:
        while v:
            low = v & -v
            if low in basis:
                v ^= basis[low]
            else:
                basis[low] = v
                break
        if limit is not None and len(basis) > limit:
            return len(basis)
    return len(basis)


def f2_rref(rows: Iterable[int]) -> tuple[int, ...]:
    """Canonical RREF of bit-packed rows: fully reduced, sorted by pivot."""
    basis: dict[int, int] = {}
    for v in rows:
        # basis rows are fully reduced, so one pass clears every pivot bit
        for pb, pv in basis.items():
            if v & pb:
                v ^= pv
        if v == 0:
            continue
        low = v & -v
        for pb in basis:
            if basis[pb] & low:
                basis[pb] ^= v
        basis[low] = v
    return tuple(basis[b] for b in sorted(basis))


def f2_rows_to_matrix(rows: Sequence[int], width: int) -> np.ndarray:
    """Unpack bit rows into an int64 matrix of the given width."""
    out = np.zeros((len(rows), width), dtype=np.int64)
    for i, v in enumerate(rows):
        while v:
            low = v & -v
            out[i, low.bit_length() - 1] = 1
            v ^= low
    return out


def matrix_to_f2_rows(matrix: np.ndarray) -> list[int]:
    masks = []
    for row in np.asarray(matrix) % 2:
        m = 0
        for c in np.nonzero(row)[0]:
            m |= 1 << int(c)
        masks.append(m)
    return masks
