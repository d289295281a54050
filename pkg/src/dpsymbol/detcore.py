"""Brute-force determinant oracle.

Builds the (p-1) x (p-1) matrix with entries ``(i^2 + b i j + c j^2)^(p-2)``
modulo p and eliminates it over F_p. Everything else in the package is
checked against :func:`dp_symbol`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import legendre, mod_inv

# entries < p, products < p**2 must fit in int64
MAX_P = 3_000_000_000


@dataclass(frozen=True, eq=False)
class FpMatrix:
    p: int
    entries: np.ndarray

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()


def build_matrix(b: int, c: int, p: int) -> FpMatrix:
    if p > MAX_P:
        raise ValueError(f"p={p} too large for int64 elimination")
    b, c = b % p, c % p
    idx = np.arange(1, p, dtype=np.int64)
    i, j = idx[:, None], idx[None, :]
    base = (i * i % p + b * i % p * j % p + c * j % p * j) % p
    # x -> x**(p-2) for every residue; 0 maps to 0
    table = np.array([pow(x, p - 2, p) for x in range(p)], dtype=np.int64)
    return FpMatrix(p, table[base])


def det_mod_p(m: FpMatrix | np.ndarray, p: int | None = None) -> int:
    """Determinant over F_p by Gaussian elimination.

    The pivot is the first nonzero entry at or below the diagonal; row swaps
    flip the sign.
    """
    if isinstance(m, FpMatrix):
        p, a = m.p, m.entries.astype(np.int64, copy=True)
    else:
        if p is None:
            raise TypeError("p is required for a raw array")
        a = np.asarray(m, dtype=np.int64) % p
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    det = 1
    for col in range(n):
        nz = np.flatnonzero(a[col:, col])
        if nz.size == 0:
            return 0
        piv = col + int(nz[0])
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            det = -det
        pv = int(a[col, col])
        det = det * pv % p
        if col + 1 < n:
            factors = a[col + 1 :, col] * mod_inv(pv, p) % p
            a[col + 1 :, col:] = (a[col + 1 :, col:] - factors[:, None] * a[col, col:]) % p
    return det % p


@lru_cache(maxsize=1 << 16)
def _det_cached(b: int, c: int, p: int) -> int:
    return det_mod_p(build_matrix(b, c, p))


def dp_det(b: int, c: int, p: int) -> int:
    """``D_p(b, c) mod p``."""
    return _det_cached(b % p, c % p, p)


def dp_symbol(b: int, c: int, p: int) -> int:
    """Legendre symbol of ``D_p(b, c)`` modulo p."""
    return legendre(dp_det(b, c, p), p)
