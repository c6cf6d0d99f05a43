"""Prime-field arithmetic and dense rank computation.

The performance kernel: Gaussian elimination over Z/p with p below 2^31,
so products fit in int64 and the elimination runs on vectorized numpy
rows. Rank can also be accumulated incrementally from a row stream, with
early exit once full column rank is reached.
"""

from __future__ import annotations

import numpy as np

DEFAULT_PRIME = 2**31 - 1

# Telemetry: number of elimination passes performed (rank calls plus
# RowReducer constructions). The CLI uses this to prove cache hits do no
# linear algebra.
ELIMINATION_CALLS = 0


def _count_call():
    global ELIMINATION_CALLS
    ELIMINATION_CALLS += 1


def reset_telemetry():
    global ELIMINATION_CALLS
    ELIMINATION_CALLS = 0


class DivisionByZero(ZeroDivisionError):
    pass


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond machine-word moduli."""
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def add(a: int, b: int, p: int = DEFAULT_PRIME) -> int:
    return (a + b) % p


def sub(a: int, b: int, p: int = DEFAULT_PRIME) -> int:
    return (a - b) % p


def mul(a: int, b: int, p: int = DEFAULT_PRIME) -> int:
    return a * b % p


def inv(a: int, p: int = DEFAULT_PRIME) -> int:
    if a % p == 0:
        raise DivisionByZero("inverse of 0")
    return pow(a, -1, p)


def _as_matrix(matrix, p: int) -> np.ndarray:
    m = np.array(matrix, dtype=np.int64)
    if m.ndim != 2:
        m = np.atleast_2d(m)
    return m % p


def rank(matrix, p: int = DEFAULT_PRIME) -> int:
    """Rank over Z/p by in-place elimination with partial pivoting
    (first nonzero entry in the column)."""
    _count_call()
    m = _as_matrix(matrix, p)
    r, _ = _eliminate(m, p)
    return r


def _eliminate(m: np.ndarray, p: int) -> tuple[int, list[int]]:
    """Reduce m in place to row echelon form with unit pivots.

    Returns (rank, pivot column per pivot row). Rows 0..rank-1 end up as
    the pivot rows.
    """
    rows, cols = m.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        piv_inv = pow(int(m[r, c]), -1, p)
        m[r, c:] = m[r, c:] * piv_inv % p
        below = np.nonzero(m[r + 1 :, c])[0]
        if below.size:
            idx = r + 1 + below
            factors = m[idx, c].copy()
            m[idx, c:] = (m[idx, c:] - factors[:, None] * m[r, c:][None, :]) % p
        pivots.append(c)
        r += 1
    return r, pivots


class RowReducer:
    """Maintains a reduced row basis over Z/p as rows stream in.

    Each stored basis row has zeros in the pivot columns of all earlier
    basis rows, so reducing a new row against the basis in insertion
    order never reintroduces a cleared pivot.
    """

    def __init__(self, cols: int, p: int = DEFAULT_PRIME):
        _count_call()
        self.cols = cols
        self.p = p
        self._rows: list[np.ndarray] = []
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def full_column_rank(self) -> bool:
        return self.rank == self.cols

    def add_row(self, row) -> bool:
        """Reduce one row against the basis; returns True if it extended it."""
        return self.add_rows(np.atleast_2d(np.asarray(row, dtype=np.int64))) == 1

    def add_rows(self, block) -> int:
        """Reduce a block of rows; returns the number of new basis rows."""
        if self.full_column_rank:
            return 0
        b = np.array(block, dtype=np.int64)
        if b.ndim != 2:
            b = np.atleast_2d(b)
        if b.shape[0] == 0:
            return 0
        if b.shape[1] != self.cols:
            raise ValueError(f"expected {self.cols} columns, got {b.shape[1]}")
        b %= self.p
        for brow, c in zip(self._rows, self._pivots):
            factors = b[:, c]
            if factors.any():
                b = (b - factors[:, None] * brow[None, :]) % self.p
        new_rank, pivots = _eliminate(b, self.p)
        for i, c in enumerate(pivots):
            self._rows.append(b[i].copy())
            self._pivots.append(c)
        return new_rank


def incremental_rank(row_stream, cols: int, p: int = DEFAULT_PRIME) -> int:
    """Rank of a streamed matrix; stops consuming rows at full column rank."""
    reducer = RowReducer(cols, p)
    for row in row_stream:
        reducer.add_row(row)
        if reducer.full_column_rank:
            break
    return reducer.rank
