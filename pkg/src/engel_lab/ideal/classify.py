"""Shape classification of normal words relative to the ideal component.

Every normal word is sorted into one of two camps: words that are known a
priori to lie in the distinguished component J (camp ``X_MINUS_Z``,
complement of the candidate quotient basis), and the survivors, which carry
a shape tag used by the relator families.

The survivor shapes are cut out by the block-size profile.  Writing the
*deficit* of a word as ``(#size-1 blocks) + 2(#size-0 blocks) - (#size-3
blocks)`` -- which equals minus the type once all blocks have size <= 3 --
the table below is the complete solution of deficit in {-1, 0, 1} with
|I1| <= 2 and no size-3 block outside the second position:

===========  =======  ===================  =======================
tag          type     heads (|I1|, |I2|)   tail profile
===========  =======  ===================  =======================
ZETA1         -1      (0,3), (1,2), (2,1)  all pairs
ZETA2         -1      (1,3), (2,2)         one singleton, rest pairs
ZETA3         -1      (2,3)                one empty, rest pairs
ZETA4         -1      (2,3)                two singletons, rest pairs
XI1            0      (2,3)                one singleton, rest pairs
XI2            0      (1,3), (2,2)         all pairs
TAU1          +1      (2,3)                all pairs
===========  =======  ===================  =======================

Single-generator words with a block of at most three indices (including z
itself) survive as ``Z_SMALL``.  Everything else -- any word with a block of
four or more, any type outside [-1, 1], |I1| >= 3, or a size-3 block in the
tail -- is ``X_MINUS_Z``.
"""

from __future__ import annotations

from enum import Enum

from ..core.words import Word, word_type


class Shape(Enum):
    Z_SMALL = "z-small"
    ZETA1 = "zeta1"
    ZETA2 = "zeta2"
    ZETA3 = "zeta3"
    ZETA4 = "zeta4"
    XI1 = "xi1"
    XI2 = "xi2"
    TAU1 = "tau1"
    X_MINUS_Z = "x-minus-z"


def classify(w: Word) -> Shape:
    if any(len(b) >= 4 for b in w):
        return Shape.X_MINUS_Z
    if len(w) == 1:
        return Shape.Z_SMALL  # block size <= 3 at this point
    t = word_type(w)
    if t < -1 or t > 1:
        return Shape.X_MINUS_Z
    i1, i2, tail = w[0], w[1], w[2:]
    if len(i1) >= 3 or any(len(b) == 3 for b in tail):
        return Shape.X_MINUS_Z
    heads = (len(i1), len(i2))
    sizes = sorted(len(b) for b in tail)
    pairs_only = all(s == 2 for s in sizes)
    one_single = sizes[:1] == [1] and all(s == 2 for s in sizes[1:])
    if t == -1:
        if heads in ((0, 3), (1, 2), (2, 1)) and pairs_only:
            return Shape.ZETA1
        if heads in ((1, 3), (2, 2)) and one_single:
            return Shape.ZETA2
        if heads == (2, 3):
            if sizes[:1] == [0] and all(s == 2 for s in sizes[1:]):
                return Shape.ZETA3
            if sizes[:2] == [1, 1] and all(s == 2 for s in sizes[2:]):
                return Shape.ZETA4
    elif t == 0:
        if heads == (2, 3) and one_single:
            return Shape.XI1
        if heads in ((1, 3), (2, 2)) and pairs_only:
            return Shape.XI2
    else:  # t == +1
        if heads == (2, 3) and pairs_only:
            return Shape.TAU1
    return Shape.X_MINUS_Z


def is_z_shape(w: Word) -> bool:
    return classify(w) is not Shape.X_MINUS_Z
