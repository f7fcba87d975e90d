"""Straightening and bracket arithmetic on the ideal closure of z.

Elements are integer combinations of normal words (``dict[Word, int]``
wrapped in :class:`LieElt`).  Coefficients live in Z; reduction mod p only
happens when an element is turned into a coordinate vector.

The rewriting rules, applied by :func:`straighten` to an arbitrary
left-normed word:

* a word whose blocks repeat an index is zero (its left segment through the
  second occurrence lies in an abelian ideal containing the whole bracket);
* two equal heads cancel; heads in the wrong order swap with a sign;
* if some tail generator t is smaller than the second head b, one Jacobi
  step ``[[a,b],t] = [[a,t],b] - [[b,t],a]`` lands both terms in normal
  position, because t is then the least generator of the whole word;
* the tail beyond the first two blocks commutes (the head bracket lies in
  the derived subalgebra and the algebra is metabelian on it), so it is
  simply sorted.

One Jacobi step suffices: after it, the new second head is the global
minimum, so both resulting words satisfy the basis shape.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from .words import Block, Word, Z_WORD, block_key, block_of, is_normal


def _repeats(blocks: Iterable[Block]) -> bool:
    seen: set[int] = set()
    for b in blocks:
        for i in b:
            if i in seen:
                return True
            seen.add(i)
    return False


def straighten(blocks: tuple[Block, ...]) -> dict[Word, int]:
    """Normal form of the left-normed word on ``blocks`` (as a Z-combination)."""
    assert blocks, "empty word"
    if _repeats(blocks):
        return {}
    if len(blocks) == 1:
        return {blocks: 1}
    a, b = blocks[0], blocks[1]
    tail = list(blocks[2:])
    sign = 1
    if a == b:  # both empty: nonempty equal heads already repeat an index
        return {}
    if block_key(a) < block_key(b):
        a, b, sign = b, a, -sign
    if tail:
        t = min(tail, key=block_key)
        if block_key(t) < block_key(b):
            tail.remove(t)
            w1 = (a, t, *sorted(tail + [b], key=block_key))
            w2 = (b, t, *sorted(tail + [a], key=block_key))
            assert is_normal(w1) and is_normal(w2), (blocks, w1, w2)
            out = {w1: sign}
            out[w2] = out.get(w2, 0) - sign
            return {w: c for w, c in out.items() if c}
        tail.sort(key=block_key)
    w = (a, b, *tail)
    assert is_normal(w), (blocks, w)
    return {w: sign}


def _add_into(acc: dict[Word, int], terms: Mapping[Word, int], scale: int = 1) -> None:
    for w, c in terms.items():
        v = acc.get(w, 0) + scale * c
        if v:
            acc[w] = v
        else:
            acc.pop(w, None)


def bracket_words(u: Word, v: Word) -> dict[Word, int]:
    """[u, v] for two normal words, as a combination of normal words.

    Both factors of length >= 2 lie in the derived subalgebra, where the
    bracket vanishes.  Appending a generator is straightening; a generator
    bracketed with a longer word picks up a sign.
    """
    if len(u) >= 2 and len(v) >= 2:
        return {}
    if len(v) == 1:
        return straighten(u + v)
    out: dict[Word, int] = {}
    _add_into(out, straighten(v + u), -1)
    return out


def ad_c_word(w: Word, k: int) -> dict[Word, int]:
    """[w, c_k], expanded by the Leibniz rule over the blocks of ``w``."""
    assert k >= 1
    if any(k in b for b in w):
        return {}
    out: dict[Word, int] = {}
    for j, b in enumerate(w):
        sub = w[:j] + (block_of(b + (k,)),) + w[j + 1 :]
        _add_into(out, straighten(sub))
    return out


def ad_z_word(w: Word) -> dict[Word, int]:
    """[w, z] -- append the empty block and straighten."""
    return straighten(w + ((),))


class LieElt:
    """Integer combination of normal words, with bracket operations.

    Plain dict wrapper; arithmetic never reduces mod p, so identities that
    hold over Z are tested over Z.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, int] | None = None):
        self.terms: dict[Word, int] = {}
        if terms:
            for w, c in terms.items():
                if c:
                    assert is_normal(w), w
                    self.terms[w] = c

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LieElt) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "LieElt") -> "LieElt":
        out = dict(self.terms)
        _add_into(out, other.terms)
        return LieElt(out)

    def __sub__(self, other: "LieElt") -> "LieElt":
        out = dict(self.terms)
        _add_into(out, other.terms, -1)
        return LieElt(out)

    def __neg__(self) -> "LieElt":
        return LieElt({w: -c for w, c in self.terms.items()})

    def __rmul__(self, k: int) -> "LieElt":
        return LieElt({w: k * c for w, c in self.terms.items()})

    def __repr__(self) -> str:
        return f"LieElt({format_elt(self)!r})"

    def bracket(self, other: "LieElt") -> "LieElt":
        out: dict[Word, int] = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                _add_into(out, bracket_words(u, v), cu * cv)
        return LieElt(out)

    def ad_c(self, k: int) -> "LieElt":
        out: dict[Word, int] = {}
        for w, c in self.terms.items():
            _add_into(out, ad_c_word(w, k), c)
        return LieElt(out)

    def ad_z(self) -> "LieElt":
        out: dict[Word, int] = {}
        for w, c in self.terms.items():
            _add_into(out, ad_z_word(w), c)
        return LieElt(out)

    def reduced(self, p: int) -> "LieElt":
        return LieElt({w: c % p for w, c in self.terms.items() if c % p})

    def degrees(self) -> set[tuple[int, Block]]:
        from .words import multidegree

        return {multidegree(w) for w in self.terms}

    def homogeneous_part(self, degree: tuple[int, Block]) -> "LieElt":
        from .words import multidegree

        return LieElt({w: c for w, c in self.terms.items() if multidegree(w) == degree})


def zelt() -> LieElt:
    return LieElt({Z_WORD: 1})


def gen(indices: Iterable[int]) -> LieElt:
    """The generator [z, c_I] (or z itself for an empty I)."""
    return LieElt({(block_of(indices),): 1})


def bracket(u: LieElt, v: LieElt) -> LieElt:
    return u.bracket(v)


def ad_c(u: LieElt, k: int) -> LieElt:
    return u.ad_c(k)


def ad_z(u: LieElt) -> LieElt:
    return u.ad_z()


# ---------------------------------------------------------------------------
# mixed brackets: a lone c_k is not an element of the span, but brackets
# against it are -- they are exactly the derivation ad_c.  A marker carries
# the generator index and an integer scalar so that expressions like
# 3*[c2, z] evaluate without special cases.


@dataclass(frozen=True)
class CMarker:
    """Scalar multiple of a lone generator c_k."""

    index: int
    coeff: int = 1


MixedValue = Union[LieElt, CMarker]


def mixed_scale(k: int, v: MixedValue) -> MixedValue:
    if isinstance(v, CMarker):
        return CMarker(v.index, k * v.coeff)
    return k * v


def mixed_bracket(a: MixedValue, b: MixedValue) -> LieElt:
    """[a, b] where either factor may be a c-marker.

    Two markers bracket to zero: the corresponding derivations commute, so
    the bracket acts as the zero operator on the span and carries no other
    information here.
    """
    if isinstance(a, CMarker):
        if isinstance(b, CMarker):
            return LieElt()
        return (-a.coeff) * b.ad_c(a.index)
    if isinstance(b, CMarker):
        return b.coeff * a.ad_c(b.index)
    return a.bracket(b)


# ---------------------------------------------------------------------------
# plain-text dump format: one term per line, "<coeff> [z|1,3][z|2][z|]".

_BLOCK_RE = re.compile(r"\[z\|([0-9,]*)\]")


def format_word(w: Word) -> str:
    return "".join("[z|" + ",".join(map(str, b)) + "]" for b in w)


def parse_word(s: str) -> Word:
    pieces = _BLOCK_RE.findall(s)
    if "".join(f"[z|{p}]" for p in pieces) != s.strip():
        raise ValueError(f"not a word: {s!r}")
    blocks = []
    for piece in pieces:
        blocks.append(block_of(int(i) for i in piece.split(",") if i))
    if not blocks:
        raise ValueError(f"not a word: {s!r}")
    return tuple(blocks)


def format_elt(e: LieElt) -> str:
    from .words import word_sort_key

    if not e.terms:
        return "0"
    lines = []
    for w in sorted(e.terms, key=word_sort_key):
        lines.append(f"{e.terms[w]} {format_word(w)}")
    return "\n".join(lines)
