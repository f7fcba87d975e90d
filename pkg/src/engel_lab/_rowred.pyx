# cython: boundscheck=False, wraparound=False, cdivision=True
"""In-place Gauss-Jordan elimination over F_p for small primes.

The matrix is reduced fully (entries above and below each pivot cleared,
pivots scaled to 1) with leftmost-column pivot selection, so the surviving
rows form the canonical reduced row echelon form of the input row space.
"""

import numpy as np

cimport numpy as cnp


cdef inline long _modinv(long v, long p) noexcept:
    # p is a small prime (3 or 5 in practice); a linear scan beats bookkeeping.
    cdef long t
    for t in range(1, p):
        if (v * t) % p == 1:
            return t
    return 0  # unreachable for v != 0 mod p


def rref_inplace(cnp.int64_t[:, ::1] a, long p):
    """Reduce ``a`` (entries in [0, p)) in place; return the pivot column list.

    After the call, rows ``0..len(pivots)-1`` hold the RREF and the remaining
    rows are zero.
    """
    cdef Py_ssize_t nrows = a.shape[0]
    cdef Py_ssize_t ncols = a.shape[1]
    cdef Py_ssize_t r = 0, i, j, k, piv
    cdef long v, inv, f
    pivots = []
    for j in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if a[i, j] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(j, ncols):
                v = a[r, k]
                a[r, k] = a[piv, k]
                a[piv, k] = v
        inv = _modinv(a[r, j], p)
        if inv != 1:
            for k in range(j, ncols):
                a[r, k] = (a[r, k] * inv) % p
        for i in range(nrows):
            if i == r:
                continue
            f = a[i, j]
            if f != 0:
                for k in range(j, ncols):
                    v = (a[i, k] - f * a[r, k]) % p
                    if v < 0:
                        v += p
                    a[i, k] = v
        pivots.append(j)
        r += 1
    return pivots
