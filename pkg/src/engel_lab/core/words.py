"""Index blocks, the generator order, and enumeration of normal basis words.

A *block* is a finite set of positive indices, stored as a sorted tuple; the
empty block ``()`` stands for the generator z itself, a nonempty block I for
the generator [z, c_I].  A *word* is a tuple of pairwise disjoint blocks and
denotes the left-normed bracket of the corresponding generators.

Generators are ordered with z strictly largest and nonempty blocks compared
lexicographically (so a proper prefix comes first); :func:`block_key` realises
this with plain tuple comparison.

Normal (basis) words are:

* any single generator, including z alone;
* for m >= 2 blocks: ``(I1, I2, t1, ..., t_{m-2})`` where I2 is nonempty and
  contains the least index of the whole support, I1 is any subset of the
  remaining indices (possibly empty), and the tail t1..t_{m-2} is sorted
  ascending in the generator order (hence any empty blocks sit at the end).

The first head is then automatically larger than the second, and every word
in the ideal closure of z rewrites into this shape.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

Block = tuple[int, ...]
Word = tuple[Block, ...]

Z_WORD: Word = ((),)


def block_of(indices: Iterable[int]) -> Block:
    b = tuple(sorted(indices))
    assert all(isinstance(i, int) and i >= 1 for i in b), b
    assert len(set(b)) == len(b), f"repeated index in block {b}"
    return b


def block_key(b: Block):
    """Sort key realising the generator order (empty block = z largest)."""
    return (1,) if not b else (0, b)


def word_sort_key(w: Word):
    return tuple(block_key(b) for b in w)


def word_support(w: Word) -> Block:
    out: list[int] = []
    for b in w:
        out.extend(b)
    return tuple(sorted(out))


def multidegree(w: Word) -> tuple[int, Block]:
    """(number of blocks, sorted support) -- the grading the sweep runs over."""
    return len(w), word_support(w)


def word_type(w: Word) -> int:
    """Support size minus twice the block count."""
    return len(word_support(w)) - 2 * len(w)


def is_normal(w: Word) -> bool:
    """Check the basis shape described in the module docstring."""
    if not w:
        return False
    seen: set[int] = set()
    for b in w:
        if any(i in seen for i in b):
            return False
        if tuple(sorted(b)) != b:
            return False
        seen.update(b)
    if len(w) == 1:
        return True
    i1, i2, tail = w[0], w[1], w[2:]
    if not i2 or not seen:
        return False
    if min(seen) not in i2:
        return False
    keys = [block_key(b) for b in tail]
    return keys == sorted(keys)


def set_partitions(items: Sequence[int], max_parts: int) -> Iterator[list[list[int]]]:
    """Partitions of ``items`` into at most ``max_parts`` nonempty parts."""
    if not items:
        yield []
        return
    if max_parts <= 0:
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest, max_parts):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        if len(part) < max_parts:
            yield [[first]] + part


def _subsets(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    for r in range(len(items) + 1):
        yield from combinations(items, r)


def enumerate_basis(m: int, support: Iterable[int]) -> list[Word]:
    """All normal words with ``m`` blocks and the given support, sorted.

    The sort is by :func:`word_sort_key`; it fixes the column order of every
    matrix built over a degree slice.
    """
    s = block_of(support)
    if m == 1:
        return [(s,)]
    if not s:
        return []
    lead, others = s[0], s[1:]
    out: list[Word] = []
    for extra2 in _subsets(others):
        i2 = block_of((lead,) + extra2)
        rest1 = tuple(i for i in others if i not in extra2)
        for i1 in _subsets(rest1):
            rest = [i for i in rest1 if i not in i1]
            for part in set_partitions(rest, m - 2):
                tail = sorted((block_of(b) for b in part), key=block_key)
                tail += [()] * (m - 2 - len(tail))
                out.append((i1, i2, *tail))
    out.sort(key=word_sort_key)
    return out
