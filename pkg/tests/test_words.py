from math import comb

import pytest

from engel_lab.core import (
    Z_WORD,
    block_key,
    block_of,
    enumerate_basis,
    is_normal,
    multidegree,
    set_partitions,
    word_support,
    word_type,
)


def test_generator_order():
    # z (empty block) is strictly largest; nonempty blocks lex with
    # prefix-first; disjoint blocks order by their minima.
    assert block_key((1,)) < block_key((2,))
    assert block_key((1,)) < block_key((1, 2))
    assert block_key((1, 3)) < block_key((2,))
    assert block_key((2, 9)) < block_key(())
    assert block_key(()) == block_key(())


def test_block_of_validates():
    assert block_of([3, 1, 2]) == (1, 2, 3)
    with pytest.raises(AssertionError):
        block_of([1, 1])
    with pytest.raises(AssertionError):
        block_of([0, 2])


def test_support_and_type():
    w = ((2, 5), (1, 3, 4), (6,), ())
    assert word_support(w) == (1, 2, 3, 4, 5, 6)
    assert multidegree(w) == (4, (1, 2, 3, 4, 5, 6))
    assert word_type(w) == 6 - 8
    assert word_type(Z_WORD) == -2


def test_is_normal_examples():
    assert is_normal(Z_WORD)
    assert is_normal(((1, 2, 3),))
    assert is_normal(((), (1, 2), (3,), (4, 5)))          # I1 may be empty
    assert is_normal(((4, 5), (1, 2, 3), (6,), ()))
    assert not is_normal(((4, 5), (2, 3), (1, 6)))        # min not in I2
    assert not is_normal(((1, 2), (), (3,)))              # I2 empty
    assert not is_normal(((2,), (1, 3), (), (4,)))        # tail not sorted
    assert not is_normal(((1, 2), (1, 3)))                # repeated index


def test_set_partitions_counts():
    # Bell-ish counts: 4 items into <=4 parts = 15, into <=2 parts = 8
    assert sum(1 for _ in set_partitions([1, 2, 3, 4], 4)) == 15
    assert sum(1 for _ in set_partitions([1, 2, 3, 4], 2)) == 8
    assert list(set_partitions([], 3)) == [[]]
    assert list(set_partitions([1], 0)) == []


def test_basis_single_block():
    assert enumerate_basis(1, []) == [Z_WORD]
    assert enumerate_basis(1, [2, 1]) == [((1, 2),)]
    assert enumerate_basis(2, []) == []


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_two_block_count(k):
    # I2 takes the minimum plus any subset of the rest; I1 is the complement:
    # 2^(k-1) words.
    words = enumerate_basis(2, range(1, k + 1))
    assert len(words) == 2 ** (k - 1)
    assert all(is_normal(w) and len(w) == 2 for w in words)
    assert len(set(words)) == len(words)


def test_three_block_counts():
    assert len(enumerate_basis(3, range(1, 7))) == 3**5
    assert len(enumerate_basis(3, range(1, 8))) == 3**6


def test_four_block_counts():
    ws7 = enumerate_basis(4, range(1, 8))
    assert len(ws7) == 2080
    assert all(is_normal(w) for w in ws7)
    assert len(enumerate_basis(4, range(1, 9))) == 8256


def test_basis_words_distinct_and_sorted():
    ws = enumerate_basis(3, [1, 2, 3, 4, 5])
    assert len(set(ws)) == len(ws)
    from engel_lab.core import word_sort_key

    assert ws == sorted(ws, key=word_sort_key)
    assert all(word_support(w) == (1, 2, 3, 4, 5) for w in ws)
