"""Associative model certifying independence of generator products.

This is a deliberately separate route from the Lie-side code: we work in the
free associative algebra on z and commuting letters c_1..c_n, modulo nothing
but the commutativity of the c's.  A monomial is then determined by the
multisets of c's between consecutive z's and is stored as a tuple of sorted
index tuples ``(C0, C1, ..., Ck)`` meaning ``c_{C0} z c_{C1} z ... z c_{Ck}``
(k copies of z).

The bracketed generator [z, c_I] (I a multiset) expands by iterating
``X -> X c_i - c_i X``, and products of generators concatenate with the two
touching multisets merged.  Two facts are checked:

* every product of generators has leading monomial ``z c_{I_1} z c_{I_2}
  ... z c_{I_r}`` with coefficient +1, in the monomial order where z beats
  every c (so distinct tuples have distinct leading monomials);
* the matrix of all expansions up to a weight bound has full rank mod p.

Either alone implies the products are linearly independent; checking both
ties the structural argument to honest arithmetic.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

import numpy as np

from .. import linalg

Mono = tuple[tuple[int, ...], ...]  # (C0, C1, ..., Ck): c-multisets split by z's

Expansion = dict[Mono, int]


def _merge(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(a + b))


def z_mono() -> Mono:
    return ((), ())


def gen_expansion(index_multiset) -> Expansion:
    """Expansion of [z, c_{i1}, ..., c_{is}] (s >= 0, repeats allowed)."""
    out: Expansion = {z_mono(): 1}
    for i in sorted(index_multiset):
        nxt: Expansion = {}
        for mono, c in out.items():
            right = mono[:-1] + (_merge(mono[-1], (i,)),)
            nxt[right] = nxt.get(right, 0) + c
            left = (_merge(mono[0], (i,)),) + mono[1:]
            nxt[left] = nxt.get(left, 0) - c
        out = {m: c for m, c in nxt.items() if c}
    return out


def multiply(a: Expansion, b: Expansion) -> Expansion:
    out: Expansion = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = m1[:-1] + (_merge(m1[-1], m2[0]),) + m2[1:]
            v = out.get(m, 0) + c1 * c2
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def mono_order_key(m: Mono):
    """Key for the letter order with z largest: flatten to letters, z = +inf.

    Letterwise comparison with a shorter word losing on prefix; encoding z
    as a large sentinel and padding with -1 keeps plain tuple comparison.
    """
    letters: list[int] = []
    for i, block in enumerate(m):
        if i:
            letters.append(10**9)  # z
        letters.extend(block)
    return tuple(letters)


def leading(e: Expansion) -> tuple[Mono, int]:
    m = max(e, key=mono_order_key)
    return m, e[m]


def generator_tuples(max_weight: int, n: int):
    """All tuples (I_1..I_r) of c-multisets over 1..n with sum(|I_j|+1) bounded."""
    out: list[tuple[tuple[int, ...], ...]] = []

    def rec(prefix, budget):
        if prefix:
            out.append(tuple(prefix))
        for size in range(0, budget):  # |I| + 1 <= budget
            for ms in combinations_with_replacement(range(1, n + 1), size):
                rec(prefix + [ms], budget - size - 1)

    rec([], max_weight)
    return out


def product_expansion(tup) -> Expansion:
    e = gen_expansion(tup[0])
    for I in tup[1:]:
        e = multiply(e, gen_expansion(I))
    return e


def expected_leading(tup) -> Mono:
    return ((),) + tuple(tuple(sorted(I)) for I in tup)


def verify_independence(max_weight: int = 5, n: int = 4, p: int = 5) -> dict:
    """Check both independence certificates; returns a small report dict."""
    tuples = generator_tuples(max_weight, n)
    expansions = [product_expansion(t) for t in tuples]

    leads = []
    for t, e in zip(tuples, expansions):
        m, c = leading(e)
        assert c == 1, (t, m, c)
        assert m == expected_leading(t), (t, m)
        leads.append(m)
    assert len(set(leads)) == len(leads)

    monos = sorted({m for e in expansions for m in e}, key=mono_order_key)
    col = {m: j for j, m in enumerate(monos)}
    mat = np.zeros((len(tuples), len(monos)), dtype=np.int64)
    for i, e in enumerate(expansions):
        for m, c in e.items():
            mat[i, col[m]] = c % p
    rk = linalg.rank(mat, p)
    assert rk == len(tuples), (rk, len(tuples))
    return {"tuples": len(tuples), "monomials": len(monos), "rank": rk}
