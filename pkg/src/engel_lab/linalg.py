"""Exact dense linear algebra over F_p.

Everything here works with numpy integer matrices whose entries live in
``[0, p)`` for a small odd prime p.  The one hot loop -- full Gauss-Jordan
reduction -- has a compiled implementation (``engel_lab._rowred``, built from
Cython) and a vectorised numpy fallback; the compiled one is used when it
imported cleanly and ``ENGEL_LAB_FORCE_PURE`` is not set.

Matrix products are exact: with entries < p and p <= 5, even float64 BLAS
would be exact for any inner dimension we meet, but int64 ``@`` is already
fast at our sizes and avoids the rounding argument altogether, so products
go through :func:`matmul` which picks int64 or float64 based on size.
"""

from __future__ import annotations

import os

import numpy as np

try:  # compiled kernel is optional
    from . import _rowred as _ext
except ImportError:  # pragma: no cover - depends on build environment
    _ext = None

USING_EXTENSION = _ext is not None and not os.environ.get("ENGEL_LAB_FORCE_PURE")

# Guard against accidentally materialising a slice far beyond what the
# shipped computations need.  Raise it via the environment if you really
# want a bigger run.
MAX_DIM = int(os.environ.get("ENGEL_LAB_MAX_DIM", "20000"))


def as_modp(a, p: int) -> np.ndarray:
    """Coerce ``a`` to a C-contiguous int64 matrix with entries in [0, p)."""
    m = np.ascontiguousarray(np.asarray(a, dtype=np.int64) % p)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    assert m.ndim == 2
    return m


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact ``a @ b`` mod p.

    For large inner dimensions int64 matmul in numpy falls back to a slow
    loop, so we route big products through float64 BLAS; that is exact as
    long as every accumulated dot product stays below 2**53, which holds
    with room to spare for entries < p <= 7 and inner dimension < 2**48.
    """
    if a.shape[1] != b.shape[0]:
        raise ValueError("shape mismatch")
    if a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if a.size * b.shape[1] < 1 << 18:
        return (a.astype(np.int64) @ b.astype(np.int64)) % p
    assert float(p - 1) * (p - 1) * a.shape[1] < 2**53
    c = a.astype(np.float64) @ b.astype(np.float64)
    return np.asarray(c, dtype=np.int64) % p


def _rref_pure(a: np.ndarray, p: int) -> list[int]:
    """Numpy Gauss-Jordan; same contract as the compiled kernel."""
    nrows, ncols = a.shape
    r = 0
    pivots: list[int] = []
    for j in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, j])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, j]), p - 2, p)
        if inv != 1:
            a[r] = (a[r] * inv) % p
        col = a[:, j].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(j)
        r += 1
    a[r:] = 0
    return pivots


def rref(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of the row space of ``a`` over F_p.

    Returns ``(R, pivots)`` where ``R`` has ``len(pivots)`` rows.  The RREF
    of a row space is unique, so two row-equivalent inputs give identical
    output -- the comparisons in the test-suite lean on that.
    """
    m = as_modp(a, p)
    if m.shape[0] == 0 or m.shape[1] == 0:
        return m[:0], []
    if USING_EXTENSION:
        pivots = _ext.rref_inplace(m, p)
    else:
        pivots = _rref_pure(m, p)
    return m[: len(pivots)], pivots


def rank(a, p: int) -> int:
    return len(rref(a, p)[1])


def reduce_rows(rows: np.ndarray, R: np.ndarray, pivots: list[int], p: int) -> np.ndarray:
    """Residue of each row of ``rows`` after elimination against an RREF.

    Because ``R`` is fully reduced with unit pivots, a single pass
    ``rows - rows[:, pivots] @ R`` clears every pivot column exactly; the
    result is zero precisely on rows lying in the row space of ``R``.
    """
    if len(pivots) == 0:
        return rows % p
    return (rows - matmul(rows[:, pivots], R, p)) % p


def in_rowspace(v, R: np.ndarray, pivots: list[int], p: int) -> bool:
    res = reduce_rows(as_modp(v, p), R, pivots, p)
    return not res.any()


def rref_accumulate(batches, p: int, ncols: int) -> tuple[np.ndarray, list[int]]:
    """RREF of the combined row space of an iterable of row batches.

    Processes each batch by reducing it against the running RREF, reducing
    the residues on their own, then cross-eliminating and merging.  The
    merge keeps both halves reduced against each other, so the result stays
    a genuine RREF throughout -- no final full pass needed.
    """
    R = np.zeros((0, ncols), dtype=np.int64)
    pivots: list[int] = []
    for batch in batches:
        b = as_modp(batch, p)
        if b.shape[0] == 0:
            continue
        assert b.shape[1] == ncols
        res = reduce_rows(b, R, pivots, p)
        res = res[res.any(axis=1)]
        if res.shape[0] == 0:
            continue
        R2, piv2 = rref(res, p)
        if not piv2:
            continue
        if pivots:
            # R2 is already zero on R's pivot columns; one product clears
            # R's entries over R2's pivots, after which the union of rows
            # is reduced and only needs sorting by pivot column.
            R = (R - matmul(R[:, piv2], R2, p)) % p
        merged = sorted(zip(pivots + piv2, list(R) + list(R2)))
        pivots = [j for j, _ in merged]
        R = np.array([row for _, row in merged], dtype=np.int64)
    return R, pivots


def identity_rref(n: int) -> tuple[np.ndarray, list[int]]:
    return np.eye(n, dtype=np.int64), list(range(n))


def inverse(a, p: int) -> np.ndarray:
    """Inverse of a square matrix over F_p (raises if singular)."""
    m = as_modp(a, p)
    n = m.shape[0]
    assert m.shape == (n, n)
    aug = np.hstack([m, np.eye(n, dtype=np.int64)])
    R, pivots = rref(aug, p)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular mod %d" % p)
    return np.ascontiguousarray(R[:, n:])
