"""Relator families spanning the explicit description of the component.

Each family is a schema: given concrete index blocks and a pairing of the
leftover indices into 2-blocks, it produces a Z-combination of survivor
words (a ``dict[Word, int]``) that lies in the component J.  The families
come in three groups by the type of the degree they live in (-1, 0, +1);
:func:`relator_instances` enumerates every instance in a given degree.

Two-block degrees sit below the reach of the displayed schemas, so the
spans there are seeded by bracketing the (fully-in-J) type -2 two-block
slices up with ad_c -- the ``boundary_cascade`` rows.  At five supports
those rows are expected to be redundant against H1/H3; a unit test pins
that down.

Instance coefficients are +-1 throughout, so instances are exact over Z.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from ..core.elements import ad_c_word, _add_into
from ..core.words import Block, Word, block_key, block_of, enumerate_basis, is_normal
from .classify import Shape, classify

Elt = dict[Word, int]


def word_of(i1, i2, *tail) -> Word:
    blocks = [block_of(i1), block_of(i2)]
    blocks += sorted((block_of(b) for b in tail), key=block_key)
    w = tuple(blocks)
    assert is_normal(w), w
    return w


def _shaped(expect: Shape, i1, i2, *tail) -> Word:
    w = word_of(i1, i2, *tail)
    assert classify(w) is expect, (w, classify(w).value, expect.value)
    return w


def _sum(*signed_words) -> Elt:
    out: Elt = {}
    for sign, w in signed_words:
        out[w] = out.get(w, 0) + sign
    return {w: c for w, c in out.items() if c}


def pairings(items):
    """Perfect matchings of ``items`` into 2-blocks (empty -> one empty list)."""
    items = sorted(items)
    if not items:
        yield []
        return
    if len(items) % 2:
        return
    first, rest = items[0], items[1:]
    for i, second in enumerate(rest):
        remaining = rest[:i] + rest[i + 1 :]
        for tail in pairings(remaining):
            yield [(first, second)] + tail


# --- type -1 families -------------------------------------------------------

def e1(I1, I2, i, j, T) -> Elt:
    return _sum(
        (1, _shaped(Shape.ZETA4, I1, I2, (i,), (j,), *T)),
        (1, _shaped(Shape.ZETA3, I1, I2, (), (i, j), *T)),
    )


def e2(I1, I2, i, T) -> Elt:
    return _sum(
        (1, _shaped(Shape.ZETA2, I1, I2, (i,), *T)),
        (1, _shaped(Shape.ZETA3, I1, tuple(I2) + (i,), (), *T)),
    )


def e3(i, I2, j, T) -> Elt:
    return _sum(
        (1, _shaped(Shape.ZETA2, (i,), I2, (j,), *T)),
        (1, _shaped(Shape.ZETA3, (i, j), I2, (), *T)),
    )


def e4(I2, I3, T) -> Elt:
    return _sum(
        (1, _shaped(Shape.ZETA1, (), I2, I3, *T)),
        (-1, _shaped(Shape.ZETA3, I3, I2, (), *T)),
    )


def e5(I1, one, i, j, T) -> Elt:
    return _sum(
        (1, _shaped(Shape.ZETA1, I1, (one,), (i, j), *T)),
        (-1, _shaped(Shape.ZETA3, I1, (one, i, j), (), *T)),
    )


def e6(i, I2, j, k, T) -> Elt:
    return _sum(
        (1, _shaped(Shape.ZETA1, (i,), I2, (j, k), *T)),
        (-1, _shaped(Shape.ZETA3, (i, j), tuple(I2) + (k,), (), *T)),
        (-1, _shaped(Shape.ZETA3, (i, k), tuple(I2) + (j,), (), *T)),
    )


def e7(I1, I2, I4, T) -> Elt:
    return _sum(
        (1, _shaped(Shape.ZETA3, I1, I2, (), I4, *T)),
        (-1, _shaped(Shape.ZETA3, I4, I2, (), I1, *T)),
    )


def e8(I1, I2, one, T) -> Elt:
    return _sum(
        (1, _shaped(Shape.ZETA3, I1, tuple(I2) + (one,), (), *T)),
        (-1, _shaped(Shape.ZETA3, I2, tuple(I1) + (one,), (), *T)),
    )


def e9(i, jkr, one, T) -> Elt:
    j, k, r = sorted(jkr)
    return _sum(
        (1, _shaped(Shape.ZETA3, (i, k), (one, j, r), (), *T)),
        (1, _shaped(Shape.ZETA3, (i, j), (one, k, r), (), *T)),
        (1, _shaped(Shape.ZETA3, (i, r), (one, j, k), (), *T)),
    )


# --- type 0 families --------------------------------------------------------

def g1(i, I2, j, k, T) -> Elt:
    return _sum(
        (1, _shaped(Shape.XI2, (i,), I2, (j, k), *T)),
        (-1, _shaped(Shape.XI1, (j, k), I2, (i,), *T)),
    )


def g2(I1, one, k, i, j, T) -> Elt:
    return _sum(
        (1, _shaped(Shape.XI2, I1, (one, k), (i, j), *T)),
        (-1, _shaped(Shape.XI1, I1, (one, i, j), (k,), *T)),
    )


def g3(I1, I2, one, k, T) -> Elt:
    return _sum(
        (1, _shaped(Shape.XI1, I1, tuple(I2) + (one,), (k,), *T)),
        (-1, _shaped(Shape.XI1, I2, tuple(I1) + (one,), (k,), *T)),
    )


def g4(I1, I2, k, B, T) -> Elt:
    return _sum(
        (1, _shaped(Shape.XI1, I1, I2, (k,), B, *T)),
        (-1, _shaped(Shape.XI1, B, I2, (k,), I1, *T)),
    )


def g5(i, jkr, one, s, T) -> Elt:
    j, k, r = sorted(jkr)
    return _sum(
        (1, _shaped(Shape.XI1, (i, k), (one, j, r), (s,), *T)),
        (1, _shaped(Shape.XI1, (i, j), (one, k, r), (s,), *T)),
        (1, _shaped(Shape.XI1, (i, r), (one, j, k), (s,), *T)),
    )


def g6(I1, one, ijk, T) -> Elt:
    i, j, k = sorted(ijk)
    return _sum(
        (1, _shaped(Shape.XI1, I1, (one, i, k), (j,), *T)),
        (1, _shaped(Shape.XI1, I1, (one, k, j), (i,), *T)),
        (1, _shaped(Shape.XI1, I1, (one, i, j), (k,), *T)),
    )


# --- type +1 families -------------------------------------------------------

def h1(I1, I2, one, T) -> Elt:
    return _sum(
        (1, _shaped(Shape.TAU1, I1, tuple(I2) + (one,), *T)),
        (-1, _shaped(Shape.TAU1, I2, tuple(I1) + (one,), *T)),
    )


def h2(I1, I2, B, T) -> Elt:
    return _sum(
        (1, _shaped(Shape.TAU1, I1, I2, B, *T)),
        (-1, _shaped(Shape.TAU1, B, I2, I1, *T)),
    )


def h3(i, jkr, one, T) -> Elt:
    j, k, r = sorted(jkr)
    return _sum(
        (1, _shaped(Shape.TAU1, (i, k), (one, j, r), *T)),
        (1, _shaped(Shape.TAU1, (i, j), (one, k, r), *T)),
        (1, _shaped(Shape.TAU1, (i, r), (one, j, k), *T)),
    )


# --- enumeration ------------------------------------------------------------

def _ksubsets(pool, k):
    return combinations(sorted(pool), k)


def _enumerate_type_minus1(m: int, s: tuple[int, ...]):
    one = s[0]
    rest0 = s[1:]
    out = []
    # E1: |I1|=2, |I2|=3 containing the minimum, two extra singles
    if m >= 4:
        for i2x in _ksubsets(rest0, 2):
            I2 = (one,) + i2x
            pool = tuple(x for x in rest0 if x not in i2x)
            for I1 in _ksubsets(pool, 2):
                pool2 = tuple(x for x in pool if x not in I1)
                for ij in _ksubsets(pool2, 2):
                    for T in pairings(tuple(x for x in pool2 if x not in ij)):
                        out.append(("E1", e1(I1, I2, ij[0], ij[1], T)))
    if m >= 3:
        # E2: both heads of size 2
        for i2x in _ksubsets(rest0, 1):
            I2 = (one,) + i2x
            pool = tuple(x for x in rest0 if x not in i2x)
            for I1 in _ksubsets(pool, 2):
                pool2 = tuple(x for x in pool if x not in I1)
                for (i,) in _ksubsets(pool2, 1):
                    for T in pairings(tuple(x for x in pool2 if x != i)):
                        out.append(("E2", e2(I1, I2, i, T)))
        # E3: singleton first head, ordered extra pair
        for i2x in _ksubsets(rest0, 2):
            I2 = (one,) + i2x
            pool = tuple(x for x in rest0 if x not in i2x)
            for i, j in permutations(pool, 2):
                for T in pairings(tuple(x for x in pool if x not in (i, j))):
                    out.append(("E3", e3(i, I2, j, T)))
        # E4: empty first head
        for i2x in _ksubsets(rest0, 2):
            I2 = (one,) + i2x
            pool = tuple(x for x in rest0 if x not in i2x)
            for I3 in _ksubsets(pool, 2):
                for T in pairings(tuple(x for x in pool if x not in I3)):
                    out.append(("E4", e4(I2, I3, T)))
        # E5: singleton second head = the minimum
        for I1 in _ksubsets(rest0, 2):
            pool = tuple(x for x in rest0 if x not in I1)
            for ij in _ksubsets(pool, 2):
                for T in pairings(tuple(x for x in pool if x not in ij)):
                    out.append(("E5", e5(I1, one, ij[0], ij[1], T)))
        # E6: second head of size 2
        for i2x in _ksubsets(rest0, 1):
            I2 = (one,) + i2x
            pool = tuple(x for x in rest0 if x not in i2x)
            for (i,) in _ksubsets(pool, 1):
                pool2 = tuple(x for x in pool if x != i)
                for jk in _ksubsets(pool2, 2):
                    for T in pairings(tuple(x for x in pool2 if x not in jk)):
                        out.append(("E6", e6(i, I2, jk[0], jk[1], T)))
        # E8: swap heads around the minimum
        for I1 in _ksubsets(rest0, 2):
            pool = tuple(x for x in rest0 if x not in I1)
            for I2 in _ksubsets(pool, 2):
                if I2 < I1:
                    continue
                for T in pairings(tuple(x for x in pool if x not in I2)):
                    out.append(("E8", e8(I1, I2, one, T)))
        # E9: three-term star
        for (i,) in _ksubsets(rest0, 1):
            pool = tuple(x for x in rest0 if x != i)
            for jkr in _ksubsets(pool, 3):
                for T in pairings(tuple(x for x in pool if x not in jkr)):
                    out.append(("E9", e9(i, jkr, one, T)))
    if m >= 4:
        # E7: swap a pair between first head and tail
        for i2x in _ksubsets(rest0, 2):
            I2 = (one,) + i2x
            pool = tuple(x for x in rest0 if x not in i2x)
            for I1 in _ksubsets(pool, 2):
                pool2 = tuple(x for x in pool if x not in I1)
                for I4 in _ksubsets(pool2, 2):
                    if I4 < I1:
                        continue
                    for T in pairings(tuple(x for x in pool2 if x not in I4)):
                        out.append(("E7", e7(I1, I2, I4, T)))
    return out


def _enumerate_type_0(m: int, s: tuple[int, ...]):
    one = s[0]
    rest0 = s[1:]
    out = []
    if m >= 3:
        # G1
        for i2x in _ksubsets(rest0, 2):
            I2 = (one,) + i2x
            pool = tuple(x for x in rest0 if x not in i2x)
            for (i,) in _ksubsets(pool, 1):
                pool2 = tuple(x for x in pool if x != i)
                for jk in _ksubsets(pool2, 2):
                    for T in pairings(tuple(x for x in pool2 if x not in jk)):
                        out.append(("G1", g1(i, I2, jk[0], jk[1], T)))
        # G2
        for I1 in _ksubsets(rest0, 2):
            pool = tuple(x for x in rest0 if x not in I1)
            for (k,) in _ksubsets(pool, 1):
                pool2 = tuple(x for x in pool if x != k)
                for ij in _ksubsets(pool2, 2):
                    for T in pairings(tuple(x for x in pool2 if x not in ij)):
                        out.append(("G2", g2(I1, one, k, ij[0], ij[1], T)))
        # G3
        for I1 in _ksubsets(rest0, 2):
            pool = tuple(x for x in rest0 if x not in I1)
            for I2 in _ksubsets(pool, 2):
                if I2 < I1:
                    continue
                pool2 = tuple(x for x in pool if x not in I2)
                for (k,) in _ksubsets(pool2, 1):
                    for T in pairings(tuple(x for x in pool2 if x != k)):
                        out.append(("G3", g3(I1, I2, one, k, T)))
        # G5
        for (i,) in _ksubsets(rest0, 1):
            pool = tuple(x for x in rest0 if x != i)
            for jkr in _ksubsets(pool, 3):
                pool2 = tuple(x for x in pool if x not in jkr)
                for (sx,) in _ksubsets(pool2, 1):
                    for T in pairings(tuple(x for x in pool2 if x != sx)):
                        out.append(("G5", g5(i, jkr, one, sx, T)))
        # G6
        for I1 in _ksubsets(rest0, 2):
            pool = tuple(x for x in rest0 if x not in I1)
            for ijk in _ksubsets(pool, 3):
                for T in pairings(tuple(x for x in pool if x not in ijk)):
                    out.append(("G6", g6(I1, one, ijk, T)))
    if m >= 4:
        # G4
        for i2x in _ksubsets(rest0, 2):
            I2 = (one,) + i2x
            pool = tuple(x for x in rest0 if x not in i2x)
            for (k,) in _ksubsets(pool, 1):
                pool2 = tuple(x for x in pool if x != k)
                for I1 in _ksubsets(pool2, 2):
                    pool3 = tuple(x for x in pool2 if x not in I1)
                    for B in _ksubsets(pool3, 2):
                        if B < I1:
                            continue
                        for T in pairings(tuple(x for x in pool3 if x not in B)):
                            out.append(("G4", g4(I1, I2, k, B, T)))
    return out


def _enumerate_type_plus1(m: int, s: tuple[int, ...]):
    one = s[0]
    rest0 = s[1:]
    out = []
    # H1 (two-block degrees included)
    for I1 in _ksubsets(rest0, 2):
        pool = tuple(x for x in rest0 if x not in I1)
        for I2 in _ksubsets(pool, 2):
            if I2 < I1:
                continue
            for T in pairings(tuple(x for x in pool if x not in I2)):
                out.append(("H1", h1(I1, I2, one, T)))
    # H3
    for (i,) in _ksubsets(rest0, 1):
        pool = tuple(x for x in rest0 if x != i)
        for jkr in _ksubsets(pool, 3):
            for T in pairings(tuple(x for x in pool if x not in jkr)):
                out.append(("H3", h3(i, jkr, one, T)))
    # H2: any tail pair may swap with the first head
    if m >= 3:
        for i2x in _ksubsets(rest0, 2):
            I2 = (one,) + i2x
            pool = tuple(x for x in rest0 if x not in i2x)
            for I1 in _ksubsets(pool, 2):
                pool2 = tuple(x for x in pool if x not in I1)
                for B in _ksubsets(pool2, 2):
                    if B < I1:
                        continue
                    for T in pairings(tuple(x for x in pool2 if x not in B)):
                        out.append(("H2", h2(I1, I2, B, T)))
    return out


def boundary_cascade(size: int, s: tuple[int, ...]):
    """Seed rows for two-block degrees, bracketed up from type -2 with ad_c.

    ``size = |support|``: 3 gives [basis(2, S\\k), c_k]; 4 and 5 iterate.
    """
    assert size == len(s) and 3 <= size <= 5
    out = []
    if size == 3:
        for kpos, k in enumerate(s):
            sub = s[:kpos] + s[kpos + 1 :]
            for u in enumerate_basis(2, sub):
                row = ad_c_word(u, k)
                if row:
                    out.append(("DE", row))
    else:
        for kpos, k in enumerate(s):
            sub = s[:kpos] + s[kpos + 1 :]
            for _, r in boundary_cascade(size - 1, sub):
                row: Elt = {}
                for w, c in r.items():
                    _add_into(row, ad_c_word(w, k), c)
                if row:
                    out.append(("DG" if size == 4 else "DH", row))
    return out


@lru_cache(maxsize=None)
def relator_instances(m: int, support: tuple[int, ...]):
    """All labelled relator instances in the degree (m blocks, this support)."""
    s = tuple(sorted(support))
    t = len(s) - 2 * m
    if m < 2 or t < -1 or t > 1:
        return []
    if t == -1:
        out = _enumerate_type_minus1(m, s)
        if m == 2:
            out += boundary_cascade(3, s)
    elif t == 0:
        out = _enumerate_type_0(m, s)
        if m == 2:
            out += boundary_cascade(4, s)
    else:
        out = _enumerate_type_plus1(m, s)
        if m == 2:
            out += boundary_cascade(5, s)
    return out
