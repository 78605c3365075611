"""Dense linear algebra over the prime field Z_p.

Matrices are stored reduced mod p.  Elimination uses numpy row updates;
entries stay below p, so products fit in int64 for any p < 2**31 (and in
int32 for the small primes the generators use, which keeps big
eliminations cache-friendly).
"""

from __future__ import annotations

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _elim_dtype(p: int):
    # products of two reduced entries must not overflow
    return np.int32 if p < 46341 else np.int64


class MatrixModP:
    """A dense matrix with entries in Z_p, p prime."""

    def __init__(self, entries, p: int):
        if not is_prime(p):
            raise ValueError(f"modulus must be prime, got {p}")
        a = np.asarray(entries, dtype=np.int64)
        if a.ndim != 2:
            raise ValueError("expected a 2-d array of entries")
        self.p = int(p)
        self.a = np.mod(a, p).astype(_elim_dtype(p))
        self.a.setflags(write=False)
        self._rref_cache = None

    @property
    def shape(self):
        return self.a.shape

    @classmethod
    def zeros(cls, nrows: int, ncols: int, p: int) -> "MatrixModP":
        return cls(np.zeros((nrows, ncols), dtype=np.int64), p)

    @classmethod
    def identity(cls, n: int, p: int) -> "MatrixModP":
        return cls(np.eye(n, dtype=np.int64), p)

    def apply(self, vec) -> np.ndarray:
        v = np.mod(np.asarray(vec, dtype=np.int64), self.p)
        return np.mod(self.a.astype(np.int64) @ v, self.p)

    def _inv(self, x: int) -> int:
        return pow(int(x), self.p - 2, self.p)

    def _rref(self):
        """Row-reduce; returns (reduced matrix, pivot column list)."""
        if self._rref_cache is not None:
            return self._rref_cache
        R, pivots = _row_reduce(self.a.copy(), self.p)
        R.setflags(write=False)
        self._rref_cache = (R, pivots)
        return self._rref_cache

    def rank(self) -> int:
        return len(self._rref()[1])

    def solve(self, rhs):
        """Some x with A x = rhs mod p, or None when inconsistent.

        The result is re-multiplied through A before returning, so a
        non-None answer is certified.
        """
        rhs = np.mod(np.asarray(rhs, dtype=np.int64), self.p)
        if rhs.shape != (self.a.shape[0],):
            raise ValueError(
                f"rhs has shape {rhs.shape}, expected ({self.a.shape[0]},)"
            )
        aug = np.concatenate(
            [self.a.astype(np.int64), rhs.reshape(-1, 1)], axis=1
        ).astype(_elim_dtype(self.p))
        R, pivots = _row_reduce(aug, self.p)
        n = self.a.shape[1]
        if pivots and pivots[-1] == n:
            return None
        x = np.zeros(n, dtype=np.int64)
        for i, c in enumerate(pivots):
            x[c] = R[i, n]
        assert np.array_equal(self.apply(x), rhs), "solve verification failed"
        return x

    def kernel_basis(self):
        """Vectors spanning ker(A); length equals ncols - rank."""
        R, pivots = self._rref()
        n = self.a.shape[1]
        pivot_set = set(pivots)
        free = [c for c in range(n) if c not in pivot_set]
        basis = []
        for f in free:
            v = np.zeros(n, dtype=np.int64)
            v[f] = 1
            for i, c in enumerate(pivots):
                v[c] = (-int(R[i, f])) % self.p
            basis.append(v)
        return basis


def _row_reduce(M, p):
    """In-place reduced row echelon form mod p; returns (M, pivot cols)."""
    nrows, ncols = M.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        col = M[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r] = (M[r] * inv) % p
        rows = np.nonzero(M[:, c])[0]
        rows = rows[rows != r]
        if rows.size:
            M[rows] = (M[rows] - np.outer(M[rows, c], M[r])) % p
        pivots.append(c)
        r += 1
    return M, pivots


def rank_mod_p(entries, p: int) -> int:
    """Rank of an integer matrix over Z_p without keeping the object."""
    M = np.mod(np.asarray(entries, dtype=np.int64), p).astype(_elim_dtype(p))
    return len(_row_reduce(M, p)[1])
