import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from engel_lab import linalg
from engel_lab.linalg import _rref_pure, rref, rref_accumulate, reduce_rows, inverse, matmul, as_modp


def mats(p, max_rows=8, max_cols=8):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(0, p - 1), min_size=c, max_size=c),
                min_size=r,
                max_size=r,
            )
        )
    )


@given(mats(5))
def test_rref_idempotent(rows):
    R, piv = rref(rows, 5)
    R2, piv2 = rref(R, 5)
    assert piv == piv2
    assert np.array_equal(R, R2)


@given(mats(5))
def test_pure_and_kernel_agree(rows):
    a = as_modp(rows, 5)
    b = a.copy()
    piv_pure = _rref_pure(a, 5)
    if linalg.USING_EXTENSION:
        from engel_lab import _rowred

        piv_ext = _rowred.rref_inplace(b, 5)
        assert piv_pure == piv_ext
        assert np.array_equal(a, b)


@given(mats(3), st.lists(st.integers(0, 2), min_size=1, max_size=8))
def test_row_combinations_stay_in_rowspace(rows, coeffs):
    R, piv = rref(rows, 3)
    a = as_modp(rows, 3)
    c = np.array((coeffs * a.shape[0])[: a.shape[0]], dtype=np.int64)
    v = (c @ a) % 3
    assert linalg.in_rowspace(v, R, piv, 3)


@given(mats(5))
def test_rref_rows_have_unit_pivots(rows):
    R, piv = rref(rows, 5)
    for i, j in enumerate(piv):
        col = np.zeros(len(piv), dtype=np.int64)
        col[i] = 1
        assert np.array_equal(R[:, j], col)
        assert not R[i, :j].any()


@settings(max_examples=40)
@given(mats(5, max_rows=20, max_cols=10), st.integers(1, 5))
def test_accumulate_matches_oneshot(rows, chunk):
    a = as_modp(rows, 5)
    batches = [a[i : i + chunk] for i in range(0, a.shape[0], chunk)]
    R1, p1 = rref(a, 5)
    R2, p2 = rref_accumulate(batches, 5, a.shape[1])
    assert p1 == p2
    assert np.array_equal(R1, R2)


def test_reduce_rows_zeroes_members():
    a = as_modp([[1, 2, 3, 4], [0, 1, 1, 1]], 5)
    R, piv = rref(a, 5)
    combo = (2 * a[0] + 3 * a[1]) % 5
    assert not reduce_rows(combo.reshape(1, -1), R, piv, 5).any()
    out = reduce_rows(as_modp([[0, 0, 0, 1]], 5), R, piv, 5)
    assert out.any()


@given(st.integers(1, 6).flatmap(lambda n: st.lists(
    st.lists(st.integers(0, 4), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_inverse_round_trip(rows):
    a = as_modp(rows, 5)
    n = a.shape[0]
    try:
        b = inverse(a, 5)
    except ZeroDivisionError:
        assert linalg.rank(a, 5) < n
        return
    assert np.array_equal(matmul(a, b, 5), np.eye(n, dtype=np.int64))
    assert np.array_equal(matmul(b, a, 5), np.eye(n, dtype=np.int64))


def test_matmul_exact_large_inner():
    rng = np.random.default_rng(0)
    a = rng.integers(0, 5, size=(40, 3000))
    b = rng.integers(0, 5, size=(3000, 17))
    slow = (a.astype(object) @ b.astype(object)) % 5
    assert np.array_equal(matmul(a, b, 5), slow.astype(np.int64))


def test_empty_matrix_edge_cases():
    R, piv = rref(np.zeros((0, 4)), 5)
    assert piv == [] and R.shape == (0, 4)
    R, piv = rref(np.zeros((3, 4)), 5)
    assert piv == [] and R.shape == (0, 4)
    R, piv = rref_accumulate([], 5, 6)
    assert piv == [] and R.shape == (0, 6)


def test_mod_3_works_too():
    # [2,2,1] is a multiple of [1,1,2] mod 3, so this pair has rank 1
    R, piv = rref([[2, 2, 1], [1, 1, 2]], 3)
    assert piv == [0]
    assert np.array_equal(R, [[1, 1, 2]])
    R, piv = rref([[2, 2, 1], [1, 0, 2]], 3)
    assert piv == [0, 1]
    assert np.array_equal(R, [[1, 0, 2], [0, 1, 0]])
